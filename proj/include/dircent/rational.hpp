#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace dircent {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& q) { return q.str(); }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Exact non-negative ratio of two 64-bit counts, kept unreduced. Used for the
// sampling-space shrink factors so that |V|^2 products never pass through floats.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const noexcept { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
  Rational exact() const { return Rational(BigInt(num), BigInt(den)); }

  friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return static_cast<unsigned __int128>(a.num) * b.den == static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
    return static_cast<unsigned __int128>(a.num) * b.den <=> static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    const std::uint64_t g = std::gcd(f.num, f.den);
    return os << f.num / (g ? g : 1) << '/' << f.den / (g ? g : 1);
  }
};

}  // namespace dircent
