#pragma once

#include <array>
#include <complex>
#include <numbers>

namespace mpg {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

//! Complex 3-vector in quantization-frame Cartesian components.
struct CVec3 {
  cplx x{}, y{}, z{};

  constexpr CVec3() = default;
  constexpr CVec3(cplx x_, cplx y_, cplx z_) : x(x_), y(y_), z(z_) {}

  cplx &operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const cplx &operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  CVec3 &operator+=(const CVec3 &o) { x += o.x; y += o.y; z += o.z; return *this; }
  CVec3 &operator-=(const CVec3 &o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  CVec3 &operator*=(cplx s) { x *= s; y *= s; z *= s; return *this; }

  friend CVec3 operator+(CVec3 a, const CVec3 &b) { return a += b; }
  friend CVec3 operator-(CVec3 a, const CVec3 &b) { return a -= b; }
  friend CVec3 operator-(CVec3 a) { return a *= -1.0; }
  friend CVec3 operator*(cplx s, CVec3 a) { return a *= s; }
  friend CVec3 operator*(CVec3 a, cplx s) { return a *= s; }
  friend CVec3 operator*(double s, CVec3 a) { return a *= s; }
  friend CVec3 operator/(CVec3 a, cplx s) { return a *= (1.0 / s); }

  CVec3 conj() const { return {std::conj(x), std::conj(y), std::conj(z)}; }
  // Hermitian norm sqrt(v* . v).
  double norm() const;
};

// Sum a_i b_i with no conjugation; this is the product used in couplings.
cplx bilinear_dot(const CVec3 &a, const CVec3 &b);
// Sum conj(a_i) b_i.
cplx hermitian_dot(const CVec3 &a, const CVec3 &b);
// Componentwise complex cross product.
CVec3 cross(const CVec3 &a, const CVec3 &b);
double max_abs_diff(const CVec3 &a, const CVec3 &b);

// Spherical basis of the quantization frame, e_{+1}, e_0, e_{-1}.
CVec3 spherical_basis(int q);

// A_q = A . e_q, returned in the order q = +1, 0, -1.
std::array<cplx, 3> spherical_components(const CVec3 &v);
// Inverse: v = sum_q A_q conj(e_q).
CVec3 from_spherical_components(const std::array<cplx, 3> &c);

//! Polar/azimuthal angles, theta in [0, pi], phi in [0, 2 pi).
class SphDirection {
public:
  SphDirection() = default;
  // phi is wrapped into [0, 2 pi); theta outside [0, pi] throws.
  SphDirection(double theta, double phi);
  static SphDirection from_vector(double x, double y, double z);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  bool at_pole() const { return theta_ == 0.0 || theta_ == pi; }

  CVec3 unit() const;
  CVec3 theta_hat() const;
  CVec3 phi_hat() const;

  bool operator==(const SphDirection &) const = default;

private:
  double theta_ = 0.0, phi_ = 0.0;
};

} // namespace mpg
