#include "mpgeom/vsh.hpp"

#include "mpgeom/harmonics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mpg {

namespace {

// Below this W the magnitude/direction split is treated as undefined.
constexpr double kZeroW = 1e-28;

void check_indices(int K, int p) {
  if (K < 1 || std::abs(p) > K)
    throw std::invalid_argument("vector spherical harmonic needs K >= 1, |p| <= K");
}

VshValue split(const CVec3 &value, double W) {
  VshValue v{value, W, CVec3{}};
  if (W > kZeroW) v.direction = value / cplx(std::sqrt(W));
  return v;
}

CVec3 vsh_value(int K, int p, int lambda_type, const HelicityFrame &f) {
  const double th = f.k_dir.theta(), ph = f.k_dir.phi();
  const double norm = std::sqrt((2.0 * K + 1.0) / (8.0 * pi));
  const cplx dm = wigner_d_pm1(K, -1, -p, th, ph);
  const cplx dp = wigner_d_pm1(K, +1, -p, th, ph);
  const double plus_sign = lambda_type == 1 ? 1.0 : -1.0;
  return norm * (f.e_plus * (plus_sign * dm) + f.e_minus * dp);
}

} // namespace

CVec3 vsh_plus1_value(int K, int p, const HelicityFrame &frame) {
  check_indices(K, p);
  return vsh_value(K, p, 1, frame);
}

double vsh_magnitude_W(int K, int p, double theta) {
  check_indices(K, p);
  const double kk = K, pp = p;
  const double a = std::norm(sph_harm(K, p - 1, theta, 0.0));
  const double b = std::norm(sph_harm(K, p, theta, 0.0));
  const double c = std::norm(sph_harm(K, p + 1, theta, 0.0));
  return ((kk + pp) * (kk - pp + 1) * a + 2 * pp * pp * b +
          (kk - pp) * (kk + pp + 1) * c) /
         (2 * kk * (kk + 1));
}

VshValue vsh_plus1(int K, int p, const SphDirection &dir) {
  check_indices(K, p);
  const HelicityFrame f = helicity_frame(dir);
  return split(vsh_value(K, p, 1, f), vsh_magnitude_W(K, p, dir.theta()));
}

VshValue vsh_zero(int K, int p, const SphDirection &dir) {
  check_indices(K, p);
  const HelicityFrame f = helicity_frame(dir);
  return split(vsh_value(K, p, 0, f), vsh_magnitude_W(K, p, dir.theta()));
}

std::vector<VshGridRecord> vsh_grid(int K, int p, int lambda_type, int n_theta,
                                    int n_phi, Exec exec) {
  check_indices(K, p);
  if (n_theta < 2 || n_phi < 2)
    throw std::invalid_argument("vsh_grid needs n_theta, n_phi >= 2");
  if (lambda_type != 0 && lambda_type != 1)
    throw std::invalid_argument("vsh_grid lambda type must be 0 or +1");
  const long total = static_cast<long>(n_theta) * n_phi;
  std::vector<VshGridRecord> out(static_cast<std::size_t>(total));
  auto fill = [&](long idx) {
    const int i = static_cast<int>(idx / n_phi), j = static_cast<int>(idx % n_phi);
    const SphDirection dir(pi * i / (n_theta - 1), 2.0 * pi * j / n_phi);
    const HelicityFrame f = helicity_frame(dir);
    out[static_cast<std::size_t>(idx)] = {dir, vsh_value(K, p, lambda_type, f),
                                          vsh_magnitude_W(K, p, dir.theta())};
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) fill(idx);
  } else {
    for (long idx = 0; idx < total; ++idx) fill(idx);
  }
  return out;
}

} // namespace mpg
