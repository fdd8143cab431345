#include "mpgeom/cvec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mpg {

double CVec3::norm() const {
  return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z));
}

cplx bilinear_dot(const CVec3 &a, const CVec3 &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

cplx hermitian_dot(const CVec3 &a, const CVec3 &b) {
  return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}

CVec3 cross(const CVec3 &a, const CVec3 &b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double max_abs_diff(const CVec3 &a, const CVec3 &b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.z - b.z)});
}

CVec3 spherical_basis(int q) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (q) {
  case +1: return {-r, -r * I, 0.0};
  case 0: return {0.0, 0.0, 1.0};
  case -1: return {r, -r * I, 0.0};
  default: throw std::invalid_argument("spherical basis index must be -1, 0, +1");
  }
}

std::array<cplx, 3> spherical_components(const CVec3 &v) {
  return {bilinear_dot(v, spherical_basis(+1)), v.z,
          bilinear_dot(v, spherical_basis(-1))};
}

CVec3 from_spherical_components(const std::array<cplx, 3> &c) {
  return c[0] * spherical_basis(+1).conj() + c[1] * spherical_basis(0) +
         c[2] * spherical_basis(-1).conj();
}

SphDirection::SphDirection(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= pi))
    throw std::invalid_argument("polar angle outside [0, pi]: " +
                                std::to_string(theta));
  if (!std::isfinite(phi))
    throw std::invalid_argument("azimuth is not finite");
  double p = std::fmod(phi, 2.0 * pi);
  if (p < 0.0) p += 2.0 * pi;
  if (p >= 2.0 * pi) p = 0.0;
  theta_ = theta;
  phi_ = p;
}

SphDirection SphDirection::from_vector(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (!(r > 0.0)) throw std::invalid_argument("zero vector has no direction");
  const double rho = std::hypot(x, y);
  const double theta = std::atan2(rho, z);
  const double phi = rho > 0.0 ? std::atan2(y, x) : 0.0;
  return SphDirection(theta, phi);
}

CVec3 SphDirection::unit() const {
  const double st = std::sin(theta_);
  return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

CVec3 SphDirection::theta_hat() const {
  const double ct = std::cos(theta_);
  return {ct * std::cos(phi_), ct * std::sin(phi_), -std::sin(theta_)};
}

CVec3 SphDirection::phi_hat() const {
  return {-std::sin(phi_), std::cos(phi_), 0.0};
}

} // namespace mpg
