#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "caysync/digraph.hpp"
#include "caysync/error.hpp"
#include "caysync/measures.hpp"
#include "caysync/parallel.hpp"
#include "caysync/spread.hpp"

namespace caysync {

// --- RNG -------------------------------------------------------------------
// SplitMix64. Stream splitting: trial i draws from an independent child
// generator seeded with the i-th output of the SplitMix64 sequence started
// at the master seed, so trials are order-independent and can run on any
// number of threads with identical results.

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., bound-1}, rejection-free of modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t z = master + (trial + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// --- Trial configuration and reporting --------------------------------------

struct TrialConfig {
  enum class Model { random_cayley, random_digraph };

  Model model = Model::random_cayley;
  std::size_t n = 0;
  std::size_t h = 0;       // random_cayley: generating-set size, p := h/n
  double edge_prob = 0.0;  // random_digraph: independent edge probability
  std::size_t s = 1;
  int t = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  // random_digraph only: 0 enumerates every s-subset (guarded by the
  // budget); a positive value checks that many uniformly drawn subsets
  // per trial instead, which the report flags.
  std::uint64_t subset_samples = 0;
  std::uint64_t exhaustive_budget = 2'000'000;
};

struct TrialReport {
  TrialConfig config;
  std::uint64_t successes = 0;  // trials whose diameter check passed
  double fraction = 0.0;
  double bound = 0.0;  // analytic upper bound on the per-trial failure odds
  bool subset_sampled = false;
  std::uint64_t subsets_per_trial = 0;
};

// Union bound from the two-step path argument: C(n, s+1) (1 - p^{2t})^{n-s-1},
// evaluated in log space. For s = t = 1 this is C(n,2) (1 - p^2)^{n-2}.
inline double failure_bound(std::size_t n, double p, std::size_t s, int t) {
  if (p < 0.0 || p > 1.0) throw invalid_argument_error("failure_bound: p outside [0, 1]");
  if (t < 1) throw invalid_argument_error("failure_bound: t must be >= 1");
  if (s + 1 > n) return 0.0;  // no (s+1)-subset exists
  const double log_comb = std::lgamma(static_cast<double>(n) + 1.0) -
                          std::lgamma(static_cast<double>(s) + 2.0) -
                          std::lgamma(static_cast<double>(n - s - 1) + 1.0);
  const auto exponent = static_cast<long long>(n) - static_cast<long long>(s) - 1;
  if (exponent <= 0) return std::exp(log_comb);
  const double p2t = std::pow(p, 2.0 * t);
  if (p2t >= 1.0) return 0.0;
  return std::exp(log_comb + static_cast<double>(exponent) * std::log1p(-p2t));
}

namespace detail {

// Every s-subset reaches every vertex within two hops at threshold 1 iff
// each vertex's incoming radius-2 ball is too large to dodge: a seed set
// avoiding some ball needs n - |ball| >= s spare vertices.
inline bool all_seeds_within_two(const Digraph& d, std::size_t s) {
  const std::size_t n = d.order();
  for (std::size_t v = 0; v < n; ++v) {
    VertexSet ball = d.in_neighbors(v);
    d.in_neighbors(v).for_each([&](std::size_t u) { ball |= d.in_neighbors(u); });
    ball.set(v);
    if (ball.count() + s < n + 1) return false;
  }
  return true;
}

inline bool synchronizes_within_two(const Digraph& d, const VertexSet& seed, int t) {
  VertexSet one = step(d, seed, t);
  if (one.is_full()) return true;
  return step(d, one, t).is_full();
}

}  // namespace detail

// Theorem-3 style experiment: draw H uniformly among h-subsets of C_n
// (identity permitted, i.e. loops allowed), build Cay(C_n, H), and test
// d_{s1} <= 2.
inline TrialReport sample_cayley(const TrialConfig& cfg) {
  if (cfg.model != TrialConfig::Model::random_cayley) {
    throw invalid_argument_error("sample_cayley: config model mismatch");
  }
  if (cfg.n < 1 || cfg.h < 1 || cfg.h > cfg.n) {
    throw invalid_argument_error("sample_cayley: need 1 <= h <= n");
  }
  if (cfg.t != 1) {
    throw invalid_argument_error("sample_cayley: the almost-sure claim is for t = 1");
  }
  if (cfg.s < 1 || cfg.s > cfg.n) {
    throw invalid_argument_error("sample_cayley: need 1 <= s <= n");
  }
  if (cfg.trials < 1) throw invalid_argument_error("sample_cayley: need trials >= 1");
  if (cfg.n > 8192) {
    throw resource_limit_error("sample_cayley: n > 8192 exceeds the adjacency budget");
  }

  const std::size_t n = cfg.n;
  const auto counts = par::map_chunks<std::uint64_t>(
      cfg.trials, [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t ok = 0;
        std::vector<std::size_t> pool(n);
        for (std::uint64_t trial = b; trial < e; ++trial) {
          SplitMix64 rng(child_seed(cfg.seed, trial));
          std::iota(pool.begin(), pool.end(), 0);
          for (std::size_t j = 0; j < cfg.h; ++j) {
            const std::size_t pickj = j + static_cast<std::size_t>(rng.next_below(n - j));
            std::swap(pool[j], pool[pickj]);
          }
          Digraph d(n);
          for (std::size_t j = 0; j < cfg.h; ++j) {
            const std::size_t gen = pool[j];
            for (std::size_t x = 0; x < n; ++x) d.add_edge(x, (gen + x) % n);
          }
          if (detail::all_seeds_within_two(d, cfg.s)) ++ok;
        }
        return ok;
      });

  TrialReport rep;
  rep.config = cfg;
  for (auto c : counts) rep.successes += c;
  rep.fraction = static_cast<double>(rep.successes) / static_cast<double>(cfg.trials);
  rep.bound = failure_bound(n, static_cast<double>(cfg.h) / static_cast<double>(n), cfg.s, 1);
  return rep;
}

// Theorem-4 style experiment: each directed edge (no loops) appears
// independently with probability p; test d_{st} <= 2 over every s-subset
// (or a uniform sample of subsets when configured).
inline TrialReport sample_random_digraph(const TrialConfig& cfg) {
  if (cfg.model != TrialConfig::Model::random_digraph) {
    throw invalid_argument_error("sample_random_digraph: config model mismatch");
  }
  if (cfg.edge_prob < 0.0 || cfg.edge_prob > 1.0) {
    throw invalid_argument_error("sample_random_digraph: p outside [0, 1]");
  }
  if (cfg.t < 1 || cfg.s < static_cast<std::size_t>(cfg.t)) {
    throw invalid_argument_error("sample_random_digraph: need s >= t >= 1");
  }
  if (cfg.n < 1 || cfg.s > cfg.n) {
    throw invalid_argument_error("sample_random_digraph: need s <= n");
  }
  if (cfg.trials < 1) throw invalid_argument_error("sample_random_digraph: need trials >= 1");
  if (cfg.n > 8192) {
    throw resource_limit_error("sample_random_digraph: n > 8192 exceeds the adjacency budget");
  }

  const std::size_t n = cfg.n;
  const std::uint64_t total_subsets = detail::comb_count(n, cfg.s);
  const bool sampled = cfg.subset_samples > 0;
  if (!sampled && total_subsets > cfg.exhaustive_budget) {
    throw resource_limit_error(
        "sample_random_digraph: C(n, s) = " + std::to_string(total_subsets) +
        " subsets per trial exceeds the budget; use subset sampling");
  }
  const std::uint64_t per_trial = sampled ? cfg.subset_samples : total_subsets;

  const auto counts = par::map_chunks<std::uint64_t>(
      cfg.trials, [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t ok = 0;
        for (std::uint64_t trial = b; trial < e; ++trial) {
          SplitMix64 rng(child_seed(cfg.seed, trial));
          // Edge draws in row-major vertex order, loops skipped.
          Digraph d(n);
          for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
              if (x != y && rng.next_unit() < cfg.edge_prob) d.add_edge(x, y);
            }
          }
          bool good = true;
          if (sampled) {
            std::vector<std::size_t> pool(n);
            for (std::uint64_t i = 0; i < per_trial && good; ++i) {
              std::iota(pool.begin(), pool.end(), 0);
              VertexSet seed(n);
              for (std::size_t j = 0; j < cfg.s; ++j) {
                const std::size_t pickj = j + static_cast<std::size_t>(rng.next_below(n - j));
                std::swap(pool[j], pool[pickj]);
                seed.set(pool[j]);
              }
              good = detail::synchronizes_within_two(d, seed, cfg.t);
            }
          } else {
            std::vector<std::size_t> idx(cfg.s);
            std::iota(idx.begin(), idx.end(), 0);
            while (good) {
              VertexSet seed(n);
              for (auto i : idx) seed.set(i);
              good = detail::synchronizes_within_two(d, seed, cfg.t);
              if (!detail::next_combination(idx, n)) break;
            }
          }
          if (good) ++ok;
        }
        return ok;
      });

  TrialReport rep;
  rep.config = cfg;
  for (auto c : counts) rep.successes += c;
  rep.fraction = static_cast<double>(rep.successes) / static_cast<double>(cfg.trials);
  rep.bound = failure_bound(n, cfg.edge_prob, cfg.s, cfg.t);
  rep.subset_sampled = sampled;
  rep.subsets_per_trial = per_trial;
  return rep;
}

// Vertex-transitive shortcut: on a Cayley digraph the diameter is at most 2
// iff the identity vertex reaches everyone within two hops. Used as a
// cross-check against the all-pairs ball test.
inline bool cayley_diameter_le2_from_identity(const Digraph& d) {
  const std::size_t n = d.order();
  if (n == 0) return true;
  VertexSet reach = d.out_neighbors(0);
  d.out_neighbors(0).for_each([&](std::size_t u) { reach |= d.out_neighbors(u); });
  reach.set(0);
  return reach.is_full();
}

}  // namespace caysync
