#include "mpgeom/harmonics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mpg {

cplx sph_harm(int l, int m, double theta, double phi) {
  if (l < 0) throw std::invalid_argument("sph_harm: negative degree");
  if (std::abs(m) > l) return 0.0;
  const unsigned am = static_cast<unsigned>(std::abs(m));
  // std::sph_legendre includes the Condon-Shortley factor (-1)^m.
  const double base = std::sph_legendre(static_cast<unsigned>(l), am, theta);
  const cplx positive = base * std::polar(1.0, static_cast<double>(am) * phi);
  if (m >= 0) return positive;
  return ((am % 2 == 0) ? 1.0 : -1.0) * std::conj(positive);
}

cplx wigner_d_pm1(int K, int sign, int m2, double theta, double phi) {
  if (K < 1 || (sign != 1 && sign != -1) || std::abs(m2) > K)
    throw std::invalid_argument("wigner_d_pm1: bad indices");
  const double s = sign;
  const double ct = std::cos(theta), st = std::sin(theta);
  const double pre =
      -s * std::sqrt(4.0 * pi / (static_cast<double>(K) * (K + 1) * (2 * K + 1)));
  const double up = std::sqrt(static_cast<double>((K - m2) * (K + m2 + 1)));
  const double down = std::sqrt(static_cast<double>((K + m2) * (K - m2 + 1)));
  const cplx t1 = 0.5 * up * (1.0 - s * ct) * sph_harm(K, -m2 - 1, theta, phi) *
                  std::polar(1.0, phi);
  const cplx t2 = -s * m2 * st * sph_harm(K, -m2, theta, phi);
  const cplx t3 = -0.5 * down * (1.0 + s * ct) *
                  sph_harm(K, -m2 + 1, theta, phi) * std::polar(1.0, -phi);
  return pre * (t1 + t2 + t3);
}

cplx wigner_d_pm1_closed(int K, int sign, int m2, double theta, double phi) {
  if (K < 1 || (sign != 1 && sign != -1) || std::abs(m2) > K)
    throw std::invalid_argument("wigner_d_pm1_closed: bad indices");
  auto fact = [](int n) { return std::tgamma(n + 1.0); };
  const double cot = 1.0 / std::tan(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  const double pre = (((K - m2) % 2 == 0) ? 1.0 : -1.0) *
                     std::sqrt(fact(K + sign) * fact(K - sign) * fact(K + m2) *
                               fact(K - m2)) *
                     std::pow(sh, 2 * K);
  double sum = 0.0;
  for (int k = 0; k <= 2 * K + 2; ++k) {
    const int a = K - k - sign, b = K - m2 - k, c = m2 + k + sign;
    if (a < 0 || b < 0 || c < 0) continue;
    const double term = std::pow(cot, m2 + sign + 2 * k) /
                        (fact(k) * fact(a) * fact(b) * fact(c));
    sum += (k % 2 == 0) ? term : -term;
  }
  return pre * sum * std::polar(1.0, -m2 * phi);
}

} // namespace mpg
