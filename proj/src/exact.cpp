#include "mpgeom/exact.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace mpg {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

SqrtRational SqrtRational::from_signed_square(const Rational &signed_square) {
  SqrtRational s;
  if (signed_square == 0) return s;
  s.sign = signed_square > 0 ? 1 : -1;
  s.radicand = s.sign > 0 ? signed_square : Rational(-signed_square);
  return s;
}

SqrtRational SqrtRational::from_rational(const Rational &r) {
  SqrtRational s;
  if (r == 0) return s;
  s.sign = r > 0 ? 1 : -1;
  s.radicand = r * r;
  return s;
}

long double SqrtRational::to_long_double() const {
  if (sign == 0) return 0.0L;
  // Scale numerator and denominator into range before dividing so huge
  // factorial ratios do not overflow a long double.
  const BigInt &num = numerator(radicand);
  const BigInt &den = denominator(radicand);
  const long nb = static_cast<long>(boost::multiprecision::msb(num));
  const long db = static_cast<long>(boost::multiprecision::msb(den));
  long shift = 0;
  BigInt n = num, d = den;
  if (nb > 8000) {
    shift += (nb - 8000);
    n >>= static_cast<unsigned>(nb - 8000);
  }
  if (db > 8000) {
    shift -= (db - 8000);
    d >>= static_cast<unsigned>(db - 8000);
  }
  // Keep the shift even so it can be pulled out of the square root.
  if (shift % 2 != 0) {
    n <<= 1;
    shift -= 1;
  }
  const long double ratio =
      n.convert_to<long double>() / d.convert_to<long double>();
  return sign * std::ldexp(std::sqrt(ratio), static_cast<int>(shift / 2));
}

double SqrtRational::to_double() const {
  return static_cast<double>(to_long_double());
}

std::string SqrtRational::str() const {
  if (sign == 0) return "0";
  return std::string(sign < 0 ? "-" : "") + "sqrt(" + radicand.str() + ")";
}

SqrtRational SqrtRational::operator*(const SqrtRational &o) const {
  SqrtRational r;
  r.sign = sign * o.sign;
  if (r.sign != 0) r.radicand = radicand * o.radicand;
  return r;
}

BigInt factorial(unsigned n) {
  // Grows monotonically; guarded so concurrent callers see a consistent table.
  static std::mutex mu;
  static std::vector<BigInt> table{1};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n)
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  return table[n];
}

BigInt double_factorial_odd(int two_n_minus_1) {
  BigInt r = 1;
  for (int k = two_n_minus_1; k > 1; k -= 2) r *= k;
  return r;
}

} // namespace mpg
