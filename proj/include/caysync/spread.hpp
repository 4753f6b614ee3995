#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "caysync/digraph.hpp"
#include "caysync/error.hpp"

namespace caysync {

// Outcome of the activation process: either the digraph reached synchrony
// after `steps` rounds, or it froze at a proper stationary active set.
class SynchronyResult {
 public:
  static SynchronyResult finite(std::size_t steps) {
    return SynchronyResult(Outcome{Finite{steps}});
  }
  static SynchronyResult stuck(VertexSet stationary) {
    return SynchronyResult(Outcome{Stuck{std::move(stationary)}});
  }

  bool synchronized() const { return std::holds_alternative<Finite>(outcome_); }

  std::size_t steps() const { return std::get<Finite>(outcome_).steps; }

  const VertexSet& stationary_set() const { return std::get<Stuck>(outcome_).active; }

  ExtNat d() const {
    return synchronized() ? ExtNat(steps()) : ExtNat::infinity();
  }

 private:
  struct Finite {
    std::size_t steps;
  };
  struct Stuck {
    VertexSet active;
  };
  using Outcome = std::variant<Finite, Stuck>;

  explicit SynchronyResult(Outcome o) : outcome_(std::move(o)) {}

  Outcome outcome_;
};

// The chain S_0 subset S_1 subset ... up to the first stationary set;
// strictly increasing except that a stationary S_0 stands alone.
struct SpreadTrace {
  std::vector<VertexSet> states;
  int threshold = 1;
};

inline void check_threshold(int t) {
  if (t < 1) {
    throw invalid_argument_error(
        "invalid threshold: t must be >= 1 (t = 0 would self-activate everything)");
  }
}

// One synchronous round: every inactive vertex with at least t active
// in-neighbors is acquired simultaneously.
inline VertexSet step(const Digraph& d, const VertexSet& active, int t) {
  check_threshold(t);
  VertexSet next = active;
  const auto need = static_cast<std::size_t>(t);
  for (std::size_t v = 0; v < d.order(); ++v) {
    if (!active.test(v) && d.in_neighbors(v).intersection_count(active) >= need) {
      next.set(v);
    }
  }
  return next;
}

// Smallest number of rounds to full synchrony, or -1 when the process
// freezes first. Trace-free hot path for exhaustive enumeration.
inline int steps_to_sync(const Digraph& d, const VertexSet& seed, int t) {
  check_threshold(t);
  const auto need = static_cast<std::size_t>(t);
  const std::size_t n = d.order();
  VertexSet active = seed;
  std::size_t active_count = active.count();
  int rounds = 0;
  while (active_count < n) {
    std::size_t acquired = 0;
    VertexSet next = active;
    for (std::size_t v = 0; v < n; ++v) {
      if (!active.test(v) && d.in_neighbors(v).intersection_count(active) >= need) {
        next.set(v);
        ++acquired;
      }
    }
    if (acquired == 0) return -1;
    active = std::move(next);
    active_count += acquired;
    ++rounds;
  }
  return rounds;
}

// Runs the process to its fixpoint and records the full chain. Terminates
// within n - |S| rounds since the active set strictly grows until it stops.
inline std::pair<SynchronyResult, SpreadTrace> run(const Digraph& d, const VertexSet& seed,
                                                   int t) {
  check_threshold(t);
  SpreadTrace trace;
  trace.threshold = t;
  trace.states.push_back(seed);
  VertexSet active = seed;
  while (!active.is_full()) {
    VertexSet next = step(d, active, t);
    if (next == active) {
      return {SynchronyResult::stuck(std::move(active)), std::move(trace)};
    }
    trace.states.push_back(next);
    active = std::move(next);
  }
  return {SynchronyResult::finite(trace.states.size() - 1), std::move(trace)};
}

// Stationarity certificate: A is a proper subset and no outside vertex has
// t or more in-neighbors inside A. On regular digraphs the equivalent
// complement form (more than h - t in-neighbors inside G \ A) is evaluated
// as well and must agree.
inline bool verify_stuck_certificate(const Digraph& d, const VertexSet& a, int t) {
  check_threshold(t);
  if (a.is_full()) return false;
  const VertexSet outside = a.complement();
  bool certified = true;
  outside.for_each([&](std::size_t x) {
    if (in_degree_within(d, x, a) >= static_cast<std::size_t>(t)) certified = false;
  });
  if (auto h = d.regular_degree()) {
    bool complement_form = true;
    outside.for_each([&](std::size_t x) {
      if (in_degree_within(d, x, outside) + static_cast<std::size_t>(t) <= *h) {
        complement_form = false;
      }
    });
    if (complement_form != certified) {
      throw std::logic_error("stuck certificate: the two regular-digraph forms disagree");
    }
  }
  return certified;
}

// Synchrony test for threshold t = h - k on an h-regular digraph: the
// process reaches everyone iff the complement of the seed contains no
// subdigraph in which every vertex keeps within-set in-degree >= k + 1.
inline bool synchronizes_by_peeling(const Digraph& d, const VertexSet& seed, std::size_t k) {
  const auto h = d.regular_degree();
  if (!h) throw invalid_argument_error("peeling criterion requires a regular digraph");
  if (k >= *h) {
    throw invalid_argument_error("peeling criterion: k must satisfy k < h so that t >= 1");
  }
  return peel_core(d, seed.complement(), k).empty();
}

}  // namespace caysync
