#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mpg {

using BigInt = boost::multiprecision::cpp_int;
// Always normalised: positive denominator, lowest terms.
using Rational = boost::multiprecision::cpp_rational;

//! Exact value sign * sqrt(radicand) with radicand >= 0.
struct SqrtRational {
  int sign = 0;  // -1, 0 or +1; zero iff radicand == 0
  Rational radicand{0};

  static SqrtRational zero() { return {}; }
  static SqrtRational from_signed_square(const Rational &signed_square);
  static SqrtRational from_rational(const Rational &r);

  double to_double() const;
  long double to_long_double() const;
  // e.g. "-sqrt(2/15)"
  std::string str() const;

  SqrtRational operator*(const SqrtRational &o) const;
  bool operator==(const SqrtRational &o) const {
    return sign == o.sign && radicand == o.radicand;
  }
};

BigInt factorial(unsigned n);
// (2n-1)!! with (-1)!! = 1.
BigInt double_factorial_odd(int two_n_minus_1);

} // namespace mpg
