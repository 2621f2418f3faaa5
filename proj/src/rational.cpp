#include "clawmis/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace clawmis {

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = BigInt(s);
  return true;
}

BigInt pow10(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational: '" + text + "'");
  };
  if (text.empty()) return fail();
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num, den;
    if (!parse_integer(text.substr(0, slash), num)) return fail();
    if (!parse_integer(text.substr(slash + 1), den)) return fail();
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) return fail();
    bool neg = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-" || head == "+") head += "0";
    BigInt whole;
    if (!parse_integer(head, whole)) return fail();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
    BigInt scale = pow10(static_cast<unsigned>(frac.size()));
    BigInt frac_num(frac);
    BigInt num = abs(whole) * scale + frac_num;
    if (neg || whole < 0) num = -num;
    return Rational(num, scale);
  }
  BigInt n;
  if (!parse_integer(text, n)) return fail();
  return Rational(n);
}

std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string decimal_string(const Rational& r, int max_frac_digits) {
  if (max_frac_digits < 0) throw std::invalid_argument("negative digit count");
  const bool neg = r < 0;
  const Rational a = neg ? Rational(-r) : r;
  const BigInt num = numerator(a);
  const BigInt den = denominator(a);
  const BigInt scale = pow10(static_cast<unsigned>(max_frac_digits));
  // round half away from zero
  BigInt scaled = (2 * num * scale + den) / (2 * den);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = whole.str();
  if (frac != 0) {
    std::string f = frac.str();
    f.insert(f.begin(), static_cast<std::size_t>(max_frac_digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  if (neg && scaled != 0) out = "-" + out;
  return out;
}

BigInt floor_rational(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

std::optional<BigInt> isqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt root = boost::multiprecision::sqrt(n);
  if (root * root == n) return root;
  return std::nullopt;
}

std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto sn = isqrt_exact(numerator(r));
  if (!sn) return std::nullopt;
  auto sd = isqrt_exact(denominator(r));
  if (!sd) return std::nullopt;
  return Rational(*sn, *sd);
}

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
  return RatInterval(lo + o.lo, hi + o.hi);
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
  return RatInterval(lo - o.hi, hi - o.lo);
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rational c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
  Rational mn = c[0], mx = c[0];
  for (int i = 1; i < 4; ++i) {
    if (c[i] < mn) mn = c[i];
    if (c[i] > mx) mx = c[i];
  }
  return RatInterval(mn, mx);
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
  if (o.lo <= 0 && o.hi >= 0)
    throw std::domain_error("interval division by interval containing zero");
  return *this * RatInterval(Rational(1) / o.hi, Rational(1) / o.lo);
}

Tri interval_lt(const RatInterval& a, const RatInterval& b) {
  if (a.hi < b.lo) return Tri::yes;
  if (a.lo >= b.hi) return Tri::no;
  return Tri::unknown;
}

Tri interval_le(const RatInterval& a, const RatInterval& b) {
  if (a.hi <= b.lo) return Tri::yes;
  if (a.lo > b.hi) return Tri::no;
  return Tri::unknown;
}

Tri interval_gt(const RatInterval& a, const RatInterval& b) { return interval_lt(b, a); }

Tri interval_ge(const RatInterval& a, const RatInterval& b) { return interval_le(b, a); }

RatInterval sqrt_interval(const Rational& x, unsigned digits) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  if (x == 0) return RatInterval(Rational(0));
  if (auto exact = sqrt_exact(x)) return RatInterval(*exact);
  // sqrt(num/den) = sqrt(num*den)/den; bracket sqrt(num*den) at 10^-digits.
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  const BigInt scale = pow10(digits);
  const BigInt r = boost::multiprecision::sqrt(BigInt(num * den * scale * scale));
  return RatInterval(Rational(r, den * scale), Rational(r + 1, den * scale));
}

}  // namespace clawmis
