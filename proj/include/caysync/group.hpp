#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "caysync/error.hpp"
#include "caysync/numeric.hpp"

namespace caysync {

// Label grammar for cyclic groups: "1" is the identity, "a" is a^1,
// "a<k>" is a^k.
inline std::string cyclic_label(int exponent) {
  if (exponent == 0) return "1";
  if (exponent == 1) return "a";
  return "a" + std::to_string(exponent);
}

// A finite group given by its full multiplication table. Immutable after
// construction; safe to share across threads.
class Group {
 public:
  int order() const { return n_; }
  int identity() const { return identity_; }

  // Product x * y (x on the left).
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }

  int inverse(int x) const { return inverse_[x]; }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of the element with this label, or a usage error.
  int element_by_label(const std::string& name) const {
    auto it = by_label_.find(name);
    if (it == by_label_.end()) {
      throw usage_error("unknown element label '" + name + "'");
    }
    return it->second;
  }

  // Smallest m >= 1 with x^m = identity.
  int element_order(int x) const {
    int m = 1;
    int acc = x;
    while (acc != identity_) {
      acc = mul(acc, x);
      ++m;
    }
    return m;
  }

  // True when the table is literally (i + j) mod n. Cayley digraphs over
  // such a group are invariant under index translation, which enables the
  // orbit-representative shortcut in the measures module.
  bool is_canonical_cyclic() const { return canonical_cyclic_; }

  friend Group make_cyclic(int n);
  friend Group load_cayley_table(const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels);

 private:
  Group() = default;

  void finish_construction() {
    inverse_.assign(n_, -1);
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (mul(x, y) == identity_) {
          inverse_[x] = y;
          break;
        }
      }
    }
    by_label_.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) by_label_.emplace(labels_[i], i);
    canonical_cyclic_ = true;
    for (int i = 0; i < n_ && canonical_cyclic_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (mul(i, j) != (i + j) % n_) {
          canonical_cyclic_ = false;
          break;
        }
      }
    }
  }

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> by_label_;
  bool canonical_cyclic_ = false;
};

// The cyclic group C_n with mul(i, j) = (i + j) mod n and labels 1, a, a2, ...
inline Group make_cyclic(int n) {
  if (n < 1) throw invalid_argument_error("invalid order: cyclic group needs n >= 1");
  Group g;
  g.n_ = n;
  g.identity_ = 0;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.table_[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  }
  g.labels_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.labels_.push_back(cyclic_label(i));
  g.finish_construction();
  return g;
}

// Validates and wraps an explicit multiplication table. Checks the Latin
// square property, the existence of a two-sided identity, and associativity
// (exhaustively for n <= 64, on random triples above).
inline Group load_cayley_table(const std::vector<std::vector<int>>& table,
                               std::vector<std::string> labels = {}) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw malformed_group_error("malformed group: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw malformed_group_error("malformed group: table is not square");
    }
  }

  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n || seen[v]) {
        throw malformed_group_error("malformed group: row " + std::to_string(i) +
                                    " is not a permutation");
      }
      seen[v] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n; ++i) {
      int v = table[i][j];
      if (seen[v]) {
        throw malformed_group_error("malformed group: column " + std::to_string(j) +
                                    " is not a permutation");
      }
      seen[v] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw malformed_group_error("malformed group: no identity element");

  auto check = [&](int x, int y, int z) {
    if (table[table[x][y]][z] != table[x][table[y][z]]) {
      throw malformed_group_error("malformed group: not associative at (" +
                                  std::to_string(x) + "," + std::to_string(y) + "," +
                                  std::to_string(z) + ")");
    }
  };
  if (n <= 64) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) check(x, y, z);
      }
    }
  } else {
    std::mt19937_64 rng(0x415353);  // fixed seed: validation must be deterministic
    for (int trial = 0; trial < 4096; ++trial) {
      check(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
            static_cast<int>(rng() % n));
    }
  }

  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  } else if (static_cast<int>(labels.size()) != n) {
    throw malformed_group_error("malformed group: label count != order");
  }

  Group g;
  g.n_ = n;
  g.identity_ = identity;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.table_[static_cast<std::size_t>(i) * n + j] = table[i][j];
  }
  g.labels_ = std::move(labels);
  g.finish_construction();
  return g;
}

// --- Cayley-table file format ------------------------------------------
// First line: n. Then n lines of n space-separated element indices.
// Optional final line: n whitespace-separated labels.

inline Group read_cayley_table(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) throw malformed_group_error("malformed group file: bad order line");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> table[i][j])) {
        throw malformed_group_error("malformed group file: truncated table");
      }
    }
  }
  std::vector<std::string> labels;
  std::string tok;
  while (in >> tok) labels.push_back(tok);
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw malformed_group_error("malformed group file: label line has wrong length");
  }
  return load_cayley_table(table, std::move(labels));
}

inline void write_cayley_table(const Group& g, std::ostream& out) {
  const int n = g.order();
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << g.mul(i, j);
    out << "\n";
  }
  for (int i = 0; i < n; ++i) out << (i ? " " : "") << g.label(i);
  out << "\n";
}

// Group spec grammar: "C<n>" names the cyclic group of order n; anything
// else is treated as a path to a Cayley-table file.
inline Group parse_group_spec(const std::string& spec) {
  if (spec.size() >= 2 && spec[0] == 'C' &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return make_cyclic(std::stoi(spec.substr(1)));
  }
  std::ifstream f(spec);
  if (!f) throw usage_error("cannot open group spec '" + spec + "' (expected C<n> or a file)");
  return read_cayley_table(f);
}

// --- Generating sets -----------------------------------------------------

// A subset H of the group, stored as sorted distinct element indices.
// Identity membership is permitted but tracked so callers can exclude it.
class GeneratingSet {
 public:
  static GeneratingSet of(const Group& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] < 0 || elems[i] >= g.order()) {
        throw invalid_argument_error("generating set: element index out of range");
      }
      if (i > 0 && elems[i] == elems[i - 1]) {
        throw invalid_argument_error("generating set: duplicate element");
      }
    }
    GeneratingSet h;
    h.elements_ = std::move(elems);
    h.has_identity_ =
        std::find(h.elements_.begin(), h.elements_.end(), g.identity()) != h.elements_.end();
    return h;
  }

  const std::vector<int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains_identity() const { return has_identity_; }

 private:
  std::vector<int> elements_;
  bool has_identity_ = false;
};

// Parses a comma-separated list of element labels ("a,a2,a3" or "1,g3").
inline std::vector<int> parse_elements(const Group& g, const std::string& csv) {
  std::vector<int> out;
  std::string tok;
  std::stringstream ss(csv);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(g.element_by_label(tok));
  }
  return out;
}

// --- Cycle index of the right-regular representation ---------------------

// One merged term: element_count elements whose translation permutation
// splits into `multiplicity` cycles of length `cycle_length`. The term's
// rational coefficient is element_count / group order.
struct CycleIndexTerm {
  int cycle_length = 1;
  int multiplicity = 1;
  int element_count = 1;
};

struct CycleIndex {
  int group_order = 1;
  std::vector<CycleIndexTerm> terms;  // sorted by cycle_length

  // e.g. "(1/7)(x1^7 + 6*x7)"
  std::string str() const {
    std::string body;
    for (const auto& t : terms) {
      if (!body.empty()) body += " + ";
      if (t.element_count > 1) body += std::to_string(t.element_count) + "*";
      body += "x" + std::to_string(t.cycle_length);
      if (t.multiplicity > 1) body += "^" + std::to_string(t.multiplicity);
    }
    if (group_order == 1) return body;
    return "(1/" + std::to_string(group_order) + ")(" + body + ")";
  }
};

// Right translation x -> xg decomposes into n/ord(g) cycles of length
// ord(g); terms with equal cycle structure are merged.
inline CycleIndex cycle_index_regular(const Group& g) {
  const int n = g.order();
  std::vector<int> count_by_order(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 0; x < n; ++x) ++count_by_order[g.element_order(x)];
  CycleIndex ci;
  ci.group_order = n;
  for (int d = 1; d <= n; ++d) {
    if (count_by_order[d] > 0) ci.terms.push_back({d, n / d, count_by_order[d]});
  }
  return ci;
}

// Number of orbits of k-subsets under right translation: the coefficient of
// y^k in P(1 + y, 1 + y^2, ...). An element of order d fixes exactly the
// subsets that are unions of its cycles, so it contributes C(n/d, k/d) when
// d divides k. The sum is exactly divisible by n.
inline BigInt orbit_count(const Group& g, std::size_t k) {
  const auto n = static_cast<std::size_t>(g.order());
  if (k > n) throw invalid_argument_error("orbit_count: subset size exceeds group order");
  const CycleIndex ci = cycle_index_regular(g);
  BigInt total = 0;
  for (const auto& t : ci.terms) {
    const auto d = static_cast<std::size_t>(t.cycle_length);
    if (k % d == 0) total += BigInt(t.element_count) * binomial(n / d, k / d);
  }
  if (total % n != 0) throw std::logic_error("orbit_count: Burnside sum not divisible by n");
  return total / n;
}

}  // namespace caysync
