#include "mpgeom/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace mpg::catalog {

namespace {

struct Trig {
  double c, s, c2, s2, c3, s3, ch, sh;
  explicit Trig(double theta)
      : c(std::cos(theta)), s(std::sin(theta)), c2(std::cos(2 * theta)),
        s2(std::sin(2 * theta)), c3(std::cos(3 * theta)), s3(std::sin(3 * theta)),
        ch(std::cos(theta / 2)), sh(std::sin(theta / 2)) {}
};

cplx phase(int n, double phi) { return std::polar(1.0, n * phi); }

//! theta-hat, phi-hat and the helicity vectors e'_{+1} = -(theta + i phi)/sqrt2,
//! e'_{-1} = (theta - i phi)/sqrt2 at one direction.
struct Basis {
  CVec3 t, p, ep, em;
  Basis(double theta, double phi) {
    const SphDirection d(theta, phi);
    t = d.theta_hat();
    p = d.phi_hat();
    const double r = 1.0 / std::sqrt(2.0);
    ep = -r * (t + I * p);
    em = r * (t - I * p);
  }
};

[[noreturn]] void out_of_range(int K, int p) {
  throw std::invalid_argument("no catalog entry for K=" + std::to_string(K) +
                              ", p=" + std::to_string(p));
}

} // namespace

cplx wigner_d_entry(int K, int sign, int m2, double theta, double phi) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const Trig g(theta);
  const bool lower = sign == -1;
  const double r52 = std::sqrt(2.5) / 16.0;
  const cplx e = phase(-m2, phi);
  switch (K) {
  case 1:
    switch (m2) {
    case -1: return e * (lower ? g.ch * g.ch : g.sh * g.sh);
    case 0: return (lower ? 1.0 : -1.0) * g.s / std::sqrt(2.0);
    case 1: return e * (lower ? g.sh * g.sh : g.ch * g.ch);
    }
    break;
  case 2:
    switch (m2) {
    case -2: return -e * g.s * (lower ? g.ch * g.ch : g.sh * g.sh);
    case -1: return e * 0.5 * (lower ? g.c + g.c2 : g.c - g.c2);
    case 0: return (lower ? 1.0 : -1.0) * std::sqrt(3.0 / 8.0) * g.s2;
    case 1: return e * 0.5 * (lower ? g.c - g.c2 : g.c + g.c2);
    case 2: return e * g.s * (lower ? g.sh * g.sh : g.ch * g.ch);
    }
    break;
  case 3: {
    const double ch2 = g.ch * g.ch, sh2 = g.sh * g.sh;
    switch (m2) {
    case -3: return e * std::sqrt(15.0) * (lower ? ch2 * ch2 * sh2 : sh2 * sh2 * ch2);
    case -2:
      return lower ? e * r52 * (g.s - 4 * g.s2 - 3 * g.s3)
                   : -e * r52 * (g.s + 4 * g.s2 - 3 * g.s3);
    case -1:
      return e / 32.0 *
             (lower ? 6 + g.c + 10 * g.c2 + 15 * g.c3 : 6 - g.c + 10 * g.c2 - 15 * g.c3);
    case 0: return (lower ? 1.0 : -1.0) * std::sqrt(3.0) / 8.0 * g.s * (3 + 5 * g.c2);
    case 1:
      return e / 32.0 *
             (lower ? 6 - g.c + 10 * g.c2 - 15 * g.c3 : 6 + g.c + 10 * g.c2 + 15 * g.c3);
    case 2:
      return lower ? e * r52 * (g.s + 4 * g.s2 - 3 * g.s3)
                   : -e * r52 * (g.s - 4 * g.s2 - 3 * g.s3);
    case 3: return e * std::sqrt(15.0) * (lower ? sh2 * sh2 * ch2 : ch2 * ch2 * sh2);
    }
    break;
  }
  }
  out_of_range(K, m2);
}

VshEntry vsh_entry(int K, int p, double theta, double phi) {
  const Trig g(theta);
  const Basis b(theta, phi);
  const int sg = p >= 0 ? 1 : -1;
  const double sgn = sg;
  const int ap = std::abs(p);
  // e'_{+-1} and e'_{-+1} for the sign of p
  const CVec3 &same = sg > 0 ? b.ep : b.em;
  const CVec3 &other = sg > 0 ? b.em : b.ep;
  const double ch2 = g.ch * g.ch, sh2 = g.sh * g.sh;
  const double c_sq = g.c * g.c;
  const cplx e = phase(p, phi);
  VshEntry v{};
  switch (K) {
  case 1:
    if (ap == 0) {
      v.magnitude = std::sqrt(3.0 / (8 * pi) * g.s * g.s);
      v.direction_circular = b.ep - b.em;
      v.direction_linear = -b.t;
      return v;
    }
    if (ap == 1) {
      v.magnitude = std::sqrt(3.0 / (16 * pi) * (1 + c_sq));
      v.direction_circular = e * (ch2 * same + sh2 * other);
      v.direction_linear = -sgn * e * (g.c * b.t + sgn * I * b.p);
      return v;
    }
    break;
  case 2:
    if (ap == 0) {
      v.magnitude = std::sqrt(15.0 / (8 * pi) * g.s * g.s * c_sq);
      v.direction_circular = g.c * (b.ep - b.em);
      v.direction_linear = -g.c * b.t;
      return v;
    }
    if (ap == 1) {
      v.magnitude = std::sqrt(5.0 / (16 * pi) * (1 - 3 * c_sq + 4 * c_sq * c_sq));
      v.direction_circular = e * ((g.c + g.c2) * same + (g.c - g.c2) * other);
      v.direction_linear = -sgn * e * (g.c2 * b.t + sgn * I * g.c * b.p);
      return v;
    }
    if (ap == 2) {
      v.magnitude = std::sqrt(5.0 / (16 * pi) * (1 - c_sq * c_sq));
      v.direction_circular = -sgn * e * (ch2 * same + sh2 * other);
      v.direction_linear = e * (g.c * b.t + sgn * I * b.p);
      return v;
    }
    break;
  case 3:
    if (ap == 0) {
      const double q = 1 - 5 * c_sq;
      v.magnitude = std::sqrt(21.0 / (64 * pi) * g.s * g.s * q * q);
      v.direction_circular = (3 + 5 * g.c2) * (b.ep - b.em);
      v.direction_linear = -(3 + 5 * g.c2) * b.t;
      return v;
    }
    if (ap == 1) {
      const double poly = 1 + 111 * c_sq - 305 * c_sq * c_sq + 225 * c_sq * c_sq * c_sq;
      v.magnitude = std::sqrt(poly / (256 * pi / 7));
      v.direction_circular = e * ((6 + g.c + 10 * g.c2 + 15 * g.c3) * same +
                                  (6 - g.c + 10 * g.c2 - 15 * g.c3) * other);
      v.direction_linear =
          -sgn * e * ((g.c + 15 * g.c3) * b.t + sgn * I * (6 + 10 * g.c2) * b.p);
      return v;
    }
    if (ap == 2) {
      v.magnitude =
          std::sqrt(35 * g.s * g.s * (1 - 2 * c_sq + 9 * c_sq * c_sq) / (128 * pi));
      v.direction_circular = sgn * e * ((g.s - 4 * g.s2 - 3 * g.s3) * same -
                                        (g.s + 4 * g.s2 - 3 * g.s3) * other);
      v.direction_linear = -e * ((g.s - 3 * g.s3) * b.t - sgn * I * 4.0 * g.s2 * b.p);
      return v;
    }
    if (ap == 3) {
      const double s4 = g.s * g.s * g.s * g.s;
      v.magnitude = std::sqrt(105.0 / (256 * pi) * s4 * (1 + c_sq));
      v.direction_circular = e * (ch2 * same + sh2 * other);
      v.direction_linear = -sgn * e * (g.c * b.t + sgn * I * b.p);
      return v;
    }
    break;
  }
  out_of_range(K, p);
}

CVec3 vsh_listed_linear(int K, int p, double theta, double phi) {
  const Trig g(theta);
  const Basis b(theta, phi);
  const cplx e = phase(p, phi);
  auto root = [](double num, double den) { return std::sqrt(num / (den * pi)); };
  switch (K) {
  case 1:
    switch (p) {
    case -1: return e * root(3, 16) * (g.c * b.t - I * b.p);
    case 0: return -root(3, 8) * g.s * b.t;
    case 1: return -e * root(3, 16) * (g.c * b.t + I * b.p);
    }
    break;
  case 2:
    switch (p) {
    case -2: return e * root(5, 16) * g.s * (g.c * b.t - I * b.p);
    case -1: return e * root(5, 16) * (g.c2 * b.t - I * g.c * b.p);
    case 0: return -root(15, 32) * g.s2 * b.t;
    case 1: return -e * root(5, 16) * (g.c2 * b.t + I * g.c * b.p);
    case 2: return e * root(5, 16) * g.s * (g.c * b.t + I * b.p);
    }
    break;
  case 3:
    switch (p) {
    case -3: return e * root(105, 256) * g.s * g.s * (g.c * b.t - I * b.p);
    case -2:
      return -e * root(35, 2048) * ((g.s - 3 * g.s3) * b.t + I * 4.0 * g.s2 * b.p);
    case -1:
      return e * root(7, 4096) * ((g.c + 15 * g.c3) * b.t - I * (6 + 10 * g.c2) * b.p);
    case 0: return -root(21, 256) * g.s * (3 + 5 * g.c2) * b.t;
    case 1:
      return -e * root(7, 4096) * ((g.c + 15 * g.c3) * b.t + I * (6 + 10 * g.c2) * b.p);
    case 2:
      return -e * root(35, 2048) * ((g.s - 3 * g.s3) * b.t - I * 4.0 * g.s2 * b.p);
    case 3: return -e * root(105, 256) * g.s * g.s * (g.c * b.t + I * b.p);
    }
    break;
  }
  out_of_range(K, p);
}

CVec3 vsh_listed_circular(int K, int p, double theta, double phi) {
  const Trig g(theta);
  const Basis b(theta, phi);
  const cplx e = phase(p, phi);
  const double ch2 = g.ch * g.ch, sh2 = g.sh * g.sh;
  auto root = [](double num, double den) { return std::sqrt(num / (den * pi)); };
  switch (K) {
  case 1:
    switch (p) {
    case -1: return e * root(3, 8) * (sh2 * b.ep + ch2 * b.em);
    case 0: return root(3, 16) * g.s * (b.ep - b.em);
    case 1: return e * root(3, 8) * (ch2 * b.ep + sh2 * b.em);
    }
    break;
  case 2:
    switch (p) {
    case -2: return e * root(5, 8) * g.s * (sh2 * b.ep + ch2 * b.em);
    case -1: return e * root(5, 32) * ((g.c - g.c2) * b.ep + (g.c + g.c2) * b.em);
    case 0: return root(15, 64) * g.s2 * (b.ep - b.em);
    case 1: return e * root(5, 32) * ((g.c + g.c2) * b.ep + (g.c - g.c2) * b.em);
    case 2: return -e * root(5, 8) * g.s * (ch2 * b.ep + sh2 * b.em);
    }
    break;
  case 3:
    switch (p) {
    case -3: return e * root(105, 128) * g.s * g.s * (sh2 * b.ep + ch2 * b.em);
    case -2:
      return e * root(35, 4096) *
             ((g.s + 4 * g.s2 - 3 * g.s3) * b.ep - (g.s - 4 * g.s2 - 3 * g.s3) * b.em);
    case -1:
      return e * root(7, 8192) *
             ((6 - g.c + 10 * g.c2 - 15 * g.c3) * b.ep + (6 + g.c + 10 * g.c2 + 15 * g.c3) * b.em);
    case 0: return root(21, 512) * g.s * (3 + 5 * g.c2) * (b.ep - b.em);
    case 1:
      return e * root(7, 8192) *
             ((6 + g.c + 10 * g.c2 + 15 * g.c3) * b.ep + (6 - g.c + 10 * g.c2 - 15 * g.c3) * b.em);
    case 2:
      return e * root(35, 4096) *
             ((g.s - 4 * g.s2 - 3 * g.s3) * b.ep - (g.s + 4 * g.s2 - 3 * g.s3) * b.em);
    case 3: return e * root(105, 128) * g.s * g.s * (ch2 * b.ep + sh2 * b.em);
    }
    break;
  }
  out_of_range(K, p);
}

std::vector<PolarizationRow> polarization_rows(double gamma, double beta, double theta_k,
                                               double phi_k) {
  const double r = 1.0 / std::sqrt(2.0);
  const CVec3 x{1.0, 0.0, 0.0}, y{0.0, 1.0, 0.0}, z{0.0, 0.0, 1.0};
  const cplx eg = std::polar(1.0, gamma), eb = std::polar(1.0, beta);
  const SphDirection k(theta_k, phi_k), side(pi / 2, phi_k);

  // Unit vector in the (k, z) plane, transverse to k.
  const CVec3 kv = k.unit();
  CVec3 in_plane = z - kv.z * kv;
  in_plane = in_plane / in_plane.norm();

  std::vector<PolarizationRow> rows;
  rows.push_back({"any k, LCP", theta_k, phi_k, r * (k.theta_hat() + I * k.phi_hat()), 0.0,
                  1.0, r, I * r});
  rows.push_back({"any k, RCP", theta_k, phi_k, r * (k.theta_hat() - I * k.phi_hat()), 1.0,
                  0.0, r, -I * r});
  rows.push_back({"k = +z, sigma+", 0.0, 0.0, r * (x + I * y), 0.0, 1.0, r, I * r});
  rows.push_back({"k = -z, sigma+", pi, 0.0, r * (x + I * y), 1.0, 0.0, r, -I * r});
  rows.push_back({"k perp z, eps = z", pi / 2, phi_k, z, r, -r, -1.0, 0.0});
  rows.push_back({"k perp z, linear at gamma", pi / 2, phi_k,
                  std::cos(gamma) * z - std::sin(gamma) * side.phi_hat(), r * eg,
                  -r * std::conj(eg), -std::cos(gamma), -std::sin(gamma)});
  rows.push_back({"k = -y, eps = x", pi / 2, 3 * pi / 2, x, -I * r, -I * r, 0.0, 1.0});
  rows.push_back({"k = -x, eps = y", pi / 2, pi, y, I * r, I * r, 0.0, -1.0});
  rows.push_back({"general k, linear at gamma", theta_k, phi_k,
                  std::cos(gamma) * in_plane - std::sin(gamma) * k.phi_hat(), r * eg,
                  -r * std::conj(eg), -std::cos(gamma), -std::sin(gamma)});
  rows.push_back({"k = +z, eps = x", 0.0, 0.0, x, -r, r, 1.0, 0.0});
  rows.push_back({"k = +z, linear at beta", 0.0, 0.0, std::cos(beta) * x + std::sin(beta) * y,
                  -r * eb, r * std::conj(eb), std::cos(beta), std::sin(beta)});
  return rows;
}

} // namespace mpg::catalog
