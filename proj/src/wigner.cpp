#include "mpgeom/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mpg {

namespace {

constexpr int kFloatFactorialMax = 400;

const std::array<long double, kFloatFactorialMax + 1> &float_factorials() {
  static const auto table = [] {
    std::array<long double, kFloatFactorialMax + 1> t{};
    t[0] = 1.0L;
    for (int i = 1; i <= kFloatFactorialMax; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

// Integer value of a sum of doubled quantities known to be even.
int half(int twice) { return twice / 2; }

struct ThreeJTerms {
  std::array<int, 3> delta_num; // triangle factorials
  int delta_den;
  std::array<int, 6> proj;      // (j±m)! terms
  int kmin, kmax;
  std::array<int, 5> offs;      // denominators besides k!
  int phase_exp;
};

// Returns false if a selection rule kills the symbol.
bool three_j_terms(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                   HalfInt m3, ThreeJTerms &t) {
  if (!valid_projection(j1, m1) || !valid_projection(j2, m2) ||
      !valid_projection(j3, m3))
    return false;
  if (m1.twice() + m2.twice() + m3.twice() != 0) return false;
  if (!triangle(j1, j2, j3)) return false;
  const int a = j1.twice(), b = j2.twice(), c = j3.twice();
  const int x = m1.twice(), y = m2.twice(), z = m3.twice();
  t.delta_num = {half(a + b - c), half(a - b + c), half(-a + b + c)};
  t.delta_den = half(a + b + c) + 1;
  t.proj = {half(a + x), half(a - x), half(b + y), half(b - y), half(c + z),
            half(c - z)};
  // Denominators: (j3-j2+k+m1)!, (j3-j1+k-m2)!, (j1+j2-j3-k)!, (j1-k-m1)!,
  // (j2-k+m2)!
  const int d1 = half(c - b + x), d2 = half(c - a - y);
  const int u1 = half(a + b - c), u2 = half(a - x), u3 = half(b + y);
  t.kmin = std::max({0, -d1, -d2});
  t.kmax = std::min({u1, u2, u3});
  t.offs = {d1, d2, u1, u2, u3};
  t.phase_exp = half(a - b - z);
  return t.kmin <= t.kmax;
}

struct SixJTerms {
  std::array<std::array<int, 4>, 4> triads; // (n1, n2, n3, den) per triad
  std::array<int, 4> alpha;
  std::array<int, 3> beta;
  int tmin, tmax;
};

bool six_j_terms(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                 HalfInt j6, SixJTerms &s) {
  const std::array<std::array<HalfInt, 3>, 4> tri = {
      {{j1, j2, j3}, {j1, j5, j6}, {j4, j2, j6}, {j4, j5, j3}}};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto &[a, b, c] = tri[i];
    if (!triangle(a, b, c)) return false;
    const int ta = a.twice(), tb = b.twice(), tc = c.twice();
    s.triads[i] = {half(ta + tb - tc), half(ta - tb + tc), half(-ta + tb + tc),
                   half(ta + tb + tc) + 1};
    s.alpha[i] = half(ta + tb + tc);
  }
  s.beta = {half(j1.twice() + j2.twice() + j4.twice() + j5.twice()),
            half(j2.twice() + j3.twice() + j5.twice() + j6.twice()),
            half(j3.twice() + j1.twice() + j6.twice() + j4.twice())};
  s.tmin = *std::max_element(s.alpha.begin(), s.alpha.end());
  s.tmax = *std::min_element(s.beta.begin(), s.beta.end());
  return s.tmin <= s.tmax;
}

bool fits_float_table(std::initializer_list<int> ns) {
  for (int n : ns)
    if (n > kFloatFactorialMax) return false;
  return true;
}

} // namespace

SqrtRational wigner3j_exact(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1,
                            HalfInt m2, HalfInt m3) {
  ThreeJTerms t;
  if (!three_j_terms(j1, j2, j3, m1, m2, m3, t)) return SqrtRational::zero();
  Rational sum = 0;
  for (int k = t.kmin; k <= t.kmax; ++k) {
    BigInt den = factorial(k) * factorial(t.offs[0] + k) *
                 factorial(t.offs[1] + k) * factorial(t.offs[2] - k) *
                 factorial(t.offs[3] - k) * factorial(t.offs[4] - k);
    Rational term(BigInt(1), den);
    sum += (k % 2 == 0) ? term : Rational(-term);
  }
  if (sum == 0) return SqrtRational::zero();
  BigInt num = 1;
  for (int n : t.delta_num) num *= factorial(n);
  for (int n : t.proj) num *= factorial(n);
  Rational square = Rational(num, factorial(t.delta_den)) * sum * sum;
  const int sgn = ((t.phase_exp % 2 == 0) ? 1 : -1) * (sum > 0 ? 1 : -1);
  return SqrtRational::from_signed_square(sgn > 0 ? square : Rational(-square));
}

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                HalfInt m3) {
  ThreeJTerms t;
  if (!three_j_terms(j1, j2, j3, m1, m2, m3, t)) return 0.0;
  if (!fits_float_table({t.delta_den, t.offs[0] + t.kmax, t.offs[1] + t.kmax,
                         t.offs[2], t.offs[3], t.offs[4], t.proj[0], t.proj[1],
                         t.proj[2], t.proj[3], t.proj[4], t.proj[5]}))
    return wigner3j_exact(j1, j2, j3, m1, m2, m3).to_double();
  const auto &f = float_factorials();
  long double sum = 0.0L;
  for (int k = t.kmin; k <= t.kmax; ++k) {
    const long double den = f[k] * f[t.offs[0] + k] * f[t.offs[1] + k] *
                            f[t.offs[2] - k] * f[t.offs[3] - k] *
                            f[t.offs[4] - k];
    sum += ((k % 2 == 0) ? 1.0L : -1.0L) / den;
  }
  long double pre = f[t.delta_num[0]] * f[t.delta_num[1]] * f[t.delta_num[2]] /
                    f[t.delta_den];
  for (int n : t.proj) pre *= f[n];
  const long double phase = (t.phase_exp % 2 == 0) ? 1.0L : -1.0L;
  return static_cast<double>(phase * std::sqrt(pre) * sum);
}

SqrtRational wigner6j_exact(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4,
                            HalfInt j5, HalfInt j6) {
  SixJTerms s;
  if (!six_j_terms(j1, j2, j3, j4, j5, j6, s)) return SqrtRational::zero();
  Rational sum = 0;
  for (int t = s.tmin; t <= s.tmax; ++t) {
    BigInt den = 1;
    for (int a : s.alpha) den *= factorial(t - a);
    for (int b : s.beta) den *= factorial(b - t);
    Rational term(factorial(t + 1), den);
    sum += (t % 2 == 0) ? term : Rational(-term);
  }
  if (sum == 0) return SqrtRational::zero();
  Rational delta = 1;
  for (const auto &tr : s.triads)
    delta *= Rational(factorial(tr[0]) * factorial(tr[1]) * factorial(tr[2]),
                      factorial(tr[3]));
  Rational square = delta * sum * sum;
  return SqrtRational::from_signed_square(sum > 0 ? square : Rational(-square));
}

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                HalfInt j6) {
  SixJTerms s;
  if (!six_j_terms(j1, j2, j3, j4, j5, j6, s)) return 0.0;
  if (!fits_float_table({s.tmax + 1, s.triads[0][3], s.triads[1][3],
                         s.triads[2][3], s.triads[3][3]}))
    return wigner6j_exact(j1, j2, j3, j4, j5, j6).to_double();
  const auto &f = float_factorials();
  long double sum = 0.0L;
  for (int t = s.tmin; t <= s.tmax; ++t) {
    long double den = 1.0L;
    for (int a : s.alpha) den *= f[t - a];
    for (int b : s.beta) den *= f[b - t];
    sum += ((t % 2 == 0) ? 1.0L : -1.0L) * f[t + 1] / den;
  }
  long double delta = 1.0L;
  for (const auto &tr : s.triads)
    delta *= f[tr[0]] * f[tr[1]] * f[tr[2]] / f[tr[3]];
  return static_cast<double>(std::sqrt(delta) * sum);
}

} // namespace mpg
