#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "caysync/digraph.hpp"
#include "caysync/error.hpp"
#include "caysync/numeric.hpp"
#include "caysync/orbits.hpp"
#include "caysync/parallel.hpp"
#include "caysync/spread.hpp"

namespace caysync {

// --- Lexicographic combination enumeration --------------------------------

namespace detail {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// C(n, k) saturating at 2^64 - 1; exact whenever the true value fits.
inline std::uint64_t comb_count(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] = sat_add(row[j], row[j - 1]);
  }
  return row[k];
}

// rank-th s-combination of {0..n-1} in lexicographic order.
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t s,
                                                   std::uint64_t rank) {
  std::vector<std::size_t> idx(s);
  std::size_t v = 0;
  for (std::size_t pos = 0; pos < s; ++pos) {
    while (true) {
      const std::uint64_t below = comb_count(n - 1 - v, s - 1 - pos);
      if (rank < below) break;
      rank -= below;
      ++v;
    }
    idx[pos] = v++;
  }
  return idx;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct SpreadHistogram {
  BigInt total = 0;     // weighted number of s-subsets examined
  BigInt failures = 0;  // weighted count with d(S, t) = infinity
  std::map<std::size_t, BigInt> by_steps;
};

}  // namespace detail

// How seed subsets are enumerated when computing a measure.
//   exhaustive    - every s-subset of the vertices.
//   cyclic_orbits - one path representative per rotation orbit, weighted by
//                   the orbit size n; valid for Cayley digraphs of the
//                   canonical cyclic group when gcd(n, s) = 1.
//   automatic     - cyclic_orbits whenever it is valid, else exhaustive.
enum class SeedPolicy { automatic, exhaustive, cyclic_orbits };

namespace detail {

inline bool orbit_shortcut_valid(const Digraph& d, std::size_t s) {
  return d.cyclic_translation_invariant() && std::gcd(d.order(), s) == 1;
}

inline SpreadHistogram spread_histogram(const Digraph& d, std::size_t s, int t,
                                        SeedPolicy policy) {
  const std::size_t n = d.order();
  if (s < 1 || s >= n) {
    throw invalid_argument_error("measures: s must lie in 1..n-1");
  }
  check_threshold(t);

  bool use_orbits = false;
  switch (policy) {
    case SeedPolicy::automatic:
      use_orbits = orbit_shortcut_valid(d, s);
      break;
    case SeedPolicy::exhaustive:
      break;
    case SeedPolicy::cyclic_orbits:
      if (!orbit_shortcut_valid(d, s)) {
        throw invalid_argument_error(
            "measures: orbit shortcut needs a cyclic Cayley digraph with gcd(n, s) = 1");
      }
      use_orbits = true;
      break;
  }

  struct Partial {
    std::uint64_t failures = 0;
    std::vector<std::uint64_t> by_steps;
  };

  std::vector<Partial> partials;
  std::uint64_t weight = 1;
  std::uint64_t seed_count = 0;

  if (use_orbits) {
    const auto reps = enumerate_path_reps(n, s);
    weight = n;
    seed_count = reps.size();
    partials = par::map_chunks<Partial>(seed_count, [&](std::uint64_t b, std::uint64_t e) {
      Partial part;
      part.by_steps.assign(n, 0);
      for (std::uint64_t i = b; i < e; ++i) {
        VertexSet seed(n);
        for (auto pos : reps[static_cast<std::size_t>(i)].subset) seed.set(pos);
        const int steps = steps_to_sync(d, seed, t);
        if (steps < 0) {
          ++part.failures;
        } else {
          ++part.by_steps[static_cast<std::size_t>(steps)];
        }
      }
      return part;
    });
  } else {
    seed_count = detail::comb_count(n, s);
    if (seed_count == detail::kSaturated) {
      throw resource_limit_error("measures: too many s-subsets to enumerate");
    }
    partials = par::map_chunks<Partial>(seed_count, [&](std::uint64_t b, std::uint64_t e) {
      Partial part;
      part.by_steps.assign(n, 0);
      auto idx = detail::unrank_combination(n, s, b);
      for (std::uint64_t i = b; i < e; ++i) {
        VertexSet seed(n);
        for (auto pos : idx) seed.set(pos);
        const int steps = steps_to_sync(d, seed, t);
        if (steps < 0) {
          ++part.failures;
        } else {
          ++part.by_steps[static_cast<std::size_t>(steps)];
        }
        detail::next_combination(idx, n);
      }
      return part;
    });
  }

  SpreadHistogram hist;
  hist.total = BigInt(seed_count) * weight;
  for (const auto& part : partials) {
    hist.failures += BigInt(part.failures) * weight;
    for (std::size_t dd = 0; dd < part.by_steps.size(); ++dd) {
      if (part.by_steps[dd]) hist.by_steps[dd] += BigInt(part.by_steps[dd]) * weight;
    }
  }
  if (use_orbits && hist.total != binomial(n, s)) {
    throw std::logic_error("measures: orbit weighting does not cover all subsets");
  }
  return hist;
}

}  // namespace detail

// Fraction of s-subsets that bring the digraph to synchrony, exact.
inline Rational prob_sync(const Digraph& d, std::size_t s, int t,
                          SeedPolicy policy = SeedPolicy::automatic) {
  const auto hist = detail::spread_histogram(d, s, t, policy);
  return Rational(hist.total - hist.failures, hist.total);
}

// Mean of 1/d(S, t) over all s-subsets; non-synchronizing subsets
// contribute zero.
inline Rational velocity(const Digraph& d, std::size_t s, int t,
                         SeedPolicy policy = SeedPolicy::automatic) {
  const auto hist = detail::spread_histogram(d, s, t, policy);
  Rational sum = 0;
  for (const auto& [steps, cnt] : hist.by_steps) {
    sum += Rational(cnt, BigInt(steps));  // steps >= 1 whenever s <= n-1
  }
  return sum / Rational(hist.total);
}

// max_S d(S, t) over s-subsets; infinity as soon as one subset fails.
inline ExtNat higher_diameter(const Digraph& d, std::size_t s, int t,
                              SeedPolicy policy = SeedPolicy::automatic) {
  const auto hist = detail::spread_histogram(d, s, t, policy);
  if (hist.failures != 0) return ExtNat::infinity();
  std::size_t worst = 0;
  for (const auto& [steps, cnt] : hist.by_steps) worst = std::max(worst, steps);
  return ExtNat(worst);
}

// Closed form valid at threshold t = h: n - s when the inactive set is too
// small to contain a shortest cycle (s > n - m), infinite otherwise.
inline ExtNat theorem2_diameter(std::size_t n, std::size_t girth_m, std::size_t s) {
  if (s >= n) throw invalid_argument_error("theorem2_diameter: s must be < n");
  if (girth_m < 1) throw invalid_argument_error("theorem2_diameter: girth must be >= 1");
  return s + girth_m > n ? ExtNat(n - s) : ExtNat::infinity();
}

// --- Aggregated tables -----------------------------------------------------

struct MeasureEntry {
  std::size_t s = 0;
  int t = 0;
  Rational p;
  Rational v;
  ExtNat d;
};

struct MeasureTable {
  std::size_t n = 0;
  int t_max = 0;
  std::vector<MeasureEntry> entries;  // ordered by (s, t)

  const MeasureEntry& at(std::size_t s, int t) const {
    for (const auto& e : entries) {
      if (e.s == s && e.t == t) return e;
    }
    throw invalid_argument_error("measure table: no entry for requested (s, t)");
  }
};

struct MeasureTableOptions {
  std::size_t cap = 20;  // largest n accepted for exhaustive/orbit work
  SeedPolicy policy = SeedPolicy::automatic;
};

namespace detail {

// Monotonicity of the three matrices in s and t; infinity is maximal for d.
// A violation is a library bug, not a user error.
inline void assert_table_monotone(const MeasureTable& tab) {
  for (const auto& e : tab.entries) {
    if (e.s < static_cast<std::size_t>(e.t)) {
      if (e.p != 0 || e.v != 0 || e.d != ExtNat::infinity()) {
        throw std::logic_error("measure table: triangularity violated at s < t");
      }
    }
  }
  auto find = [&](std::size_t s, int t) -> const MeasureEntry* {
    for (const auto& e : tab.entries) {
      if (e.s == s && e.t == t) return &e;
    }
    return nullptr;
  };
  for (const auto& e : tab.entries) {
    if (const auto* right = find(e.s + 1, e.t)) {
      if (right->p < e.p || right->v < e.v || right->d > e.d) {
        throw std::logic_error("measure table: monotonicity in s violated");
      }
    }
    if (const auto* down = find(e.s, e.t + 1)) {
      if (down->p > e.p || down->v > e.v || down->d < e.d) {
        throw std::logic_error("measure table: monotonicity in t violated");
      }
    }
  }
}

}  // namespace detail

// All (s, t) entries for one digraph, s in 1..n-1 and t in 1..t_max where
// t_max is the regular degree (max in-degree when not regular).
inline MeasureTable measure_table(const Digraph& d,
                                  const MeasureTableOptions& opts = {}) {
  const std::size_t n = d.order();
  if (n > opts.cap) {
    throw resource_limit_error(
        "measure table: n = " + std::to_string(n) + " exceeds the exhaustive cap " +
        std::to_string(opts.cap) + "; raise the cap or use the asymptotics sampler");
  }
  MeasureTable tab;
  tab.n = n;
  if (const auto h = d.regular_degree()) {
    tab.t_max = static_cast<int>(*h);
  } else {
    std::size_t worst = 0;
    for (std::size_t x = 0; x < n; ++x) worst = std::max(worst, d.in_degree(x));
    tab.t_max = static_cast<int>(worst);
  }
  tab.t_max = std::max(tab.t_max, 1);
  for (std::size_t s = 1; s + 1 <= n && s <= n - 1; ++s) {
    for (int t = 1; t <= tab.t_max; ++t) {
      const auto hist = detail::spread_histogram(d, s, t, opts.policy);
      MeasureEntry e;
      e.s = s;
      e.t = t;
      e.p = Rational(hist.total - hist.failures, hist.total);
      Rational vsum = 0;
      std::size_t worst = 0;
      for (const auto& [steps, cnt] : hist.by_steps) {
        vsum += Rational(cnt, BigInt(steps));
        worst = std::max(worst, steps);
      }
      e.v = vsum / Rational(hist.total);
      e.d = hist.failures != 0 ? ExtNat::infinity() : ExtNat(worst);
      tab.entries.push_back(std::move(e));
    }
  }
  detail::assert_table_monotone(tab);
  return tab;
}

// --- Search for the best generating sets ----------------------------------

struct BestHReport {
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t s = 0;
  int t = 0;
  bool include_identity = false;
  ExtNat min_d = ExtNat::infinity();
  // Argmin generating sets as sorted exponent vectors (0 = identity).
  std::vector<std::vector<std::size_t>> achievers;
  // The same sets grouped by the automorphisms of C_n (multiplication of
  // exponents by units mod n); each class lists its members, lex-least first.
  std::vector<std::vector<std::vector<std::size_t>>> classes;
};

namespace detail {

inline std::vector<std::size_t> unit_image(const std::vector<std::size_t>& exps,
                                           std::size_t u, std::size_t n) {
  std::vector<std::size_t> img;
  img.reserve(exps.size());
  for (auto e : exps) img.push_back(e * u % n);
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace detail

// Exhaustive search over size-h generating sets of C_n minimizing d_st.
// The identity is excluded by default (a loop never helps acquire another
// vertex); include_identity widens the search space to all h-subsets.
inline BestHReport best_generating_sets(std::size_t n, std::size_t h, std::size_t s, int t,
                                        bool include_identity = false,
                                        const MeasureTableOptions& opts = {}) {
  if (n > opts.cap) {
    throw resource_limit_error("best_generating_sets: n exceeds the exhaustive cap " +
                               std::to_string(opts.cap));
  }
  if (h < 1 || h > n - 1 + (include_identity ? 1 : 0)) {
    throw invalid_argument_error("best_generating_sets: need 1 <= h <= n-1");
  }
  const Group g = make_cyclic(static_cast<int>(n));

  BestHReport report;
  report.n = n;
  report.h = h;
  report.s = s;
  report.t = t;
  report.include_identity = include_identity;

  // Candidate exponents: 1..n-1, plus 0 when the identity is allowed.
  std::vector<std::size_t> pool;
  if (include_identity) pool.push_back(0);
  for (std::size_t e = 1; e < n; ++e) pool.push_back(e);
  if (h > pool.size()) throw invalid_argument_error("best_generating_sets: h too large");

  std::vector<std::size_t> pick(h);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> elems;
    elems.reserve(h);
    for (auto i : pick) elems.push_back(static_cast<int>(pool[i]));
    const auto gens = GeneratingSet::of(g, elems);
    const Digraph dg = cayley_digraph(g, gens);
    const ExtNat dval = higher_diameter(dg, s, t, opts.policy);
    if (dval < report.min_d) {
      report.min_d = dval;
      report.achievers.clear();
    }
    if (dval == report.min_d) {
      std::vector<std::size_t> exps;
      exps.reserve(h);
      for (int e : gens.elements()) exps.push_back(static_cast<std::size_t>(e));
      report.achievers.push_back(std::move(exps));
    }
    if (!detail::next_combination(pick, pool.size())) break;
  }
  std::sort(report.achievers.begin(), report.achievers.end());

  // Group achievers into automorphism classes keyed by the lex-least image.
  std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> classes;
  for (const auto& a : report.achievers) {
    std::vector<std::size_t> key = a;
    for (std::size_t u = 1; u < n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      key = std::min(key, detail::unit_image(a, u, n));
    }
    classes[key].push_back(a);
  }
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end());
    report.classes.push_back(members);
  }
  return report;
}

// Proposition check: adding an edge can only help. Returns true when all
// three inequalities hold between D and D + e; a false return indicates a
// bug in the measures, not bad input.
inline bool edge_monotonicity_check(const Digraph& d, std::size_t from, std::size_t to,
                                    std::size_t s, int t) {
  const Digraph bigger = d.with_edge(from, to);
  const Rational p0 = prob_sync(d, s, t, SeedPolicy::exhaustive);
  const Rational p1 = prob_sync(bigger, s, t, SeedPolicy::exhaustive);
  const Rational v0 = velocity(d, s, t, SeedPolicy::exhaustive);
  const Rational v1 = velocity(bigger, s, t, SeedPolicy::exhaustive);
  const ExtNat d0 = higher_diameter(d, s, t, SeedPolicy::exhaustive);
  const ExtNat d1 = higher_diameter(bigger, s, t, SeedPolicy::exhaustive);
  return p1 >= p0 && v1 >= v0 && d1 <= d0;
}

}  // namespace caysync
