#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace caysync {

// Exact arithmetic used everywhere outside the Monte Carlo module.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n choose k, exact; 0 when k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // divides exactly: r is C(n-k+i, i) at this point
  }
  return r;
}

// Canonical "num/den" form in lowest terms, denominator always printed.
inline std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// A natural number extended with an infinity that compares maximal.
// Infinity is a distinct state, never a sentinel value.
class ExtNat {
 public:
  ExtNat() : value_(0) {}
  ExtNat(std::uint64_t v) : value_(v) {}
  ExtNat(int v) : value_(static_cast<std::uint64_t>(v)) {
    if (v < 0) throw std::invalid_argument("ExtNat: negative value");
  }

  static ExtNat infinity() {
    ExtNat e;
    e.value_.reset();
    return e;
  }

  bool is_finite() const { return value_.has_value(); }

  std::uint64_t value() const {
    if (!value_) throw std::logic_error("ExtNat: value() called on infinity");
    return *value_;
  }

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const ExtNat&, const ExtNat&) = default;

  friend bool operator<(const ExtNat& a, const ExtNat& b) {
    if (!b.value_) return a.value_.has_value();
    if (!a.value_) return false;
    return *a.value_ < *b.value_;
  }
  friend bool operator>(const ExtNat& a, const ExtNat& b) { return b < a; }
  friend bool operator<=(const ExtNat& a, const ExtNat& b) { return !(b < a); }
  friend bool operator>=(const ExtNat& a, const ExtNat& b) { return !(a < b); }

 private:
  std::optional<std::uint64_t> value_;
};

}  // namespace caysync
