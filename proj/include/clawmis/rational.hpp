#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace clawmis {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-3", "3/4", "-3/4", "0.25", "1e3" is NOT accepted.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "n" or "n/d" form, d > 1 only when needed.
std::string rational_to_string(const Rational& r);

// Decimal rendering for reports: round half away from zero at
// max_frac_digits, then strip trailing zeros. "3/4" -> "0.75".
std::string decimal_string(const Rational& r, int max_frac_digits = 12);

// floor(r) as an integer.
BigInt floor_rational(const Rational& r);

// Exact integer square root if n is a perfect square.
std::optional<BigInt> isqrt_exact(const BigInt& n);

// Exact square root if r is the square of a rational.
std::optional<Rational> sqrt_exact(const Rational& r);

// Closed interval with rational endpoints; used to certify inequalities
// that mention square roots of non-square rationals.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval() = default;
  RatInterval(Rational point) : lo(point), hi(std::move(point)) {}
  RatInterval(Rational l, Rational h);

  RatInterval operator+(const RatInterval& o) const;
  RatInterval operator-(const RatInterval& o) const;
  RatInterval operator*(const RatInterval& o) const;
  RatInterval operator/(const RatInterval& o) const;  // throws if 0 in o
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Three-valued comparison verdict for interval arithmetic.
enum class Tri { yes, no, unknown };

Tri interval_lt(const RatInterval& a, const RatInterval& b);   // a <  b
Tri interval_le(const RatInterval& a, const RatInterval& b);   // a <= b
Tri interval_gt(const RatInterval& a, const RatInterval& b);   // a >  b
Tri interval_ge(const RatInterval& a, const RatInterval& b);   // a >= b

// Encloses sqrt(x) within 10^-digits; x must be >= 0.
RatInterval sqrt_interval(const Rational& x, unsigned digits);

}  // namespace clawmis
