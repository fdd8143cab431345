#include "mpgeom/polarization.hpp"

#include <cmath>

namespace mpg {

void require_transverse(const CVec3 &k_hat, const CVec3 &eps) {
  if (std::abs(bilinear_dot(k_hat, eps)) > kTransverseTolerance)
    throw PolarizationError("polarization is not transverse to the beam direction");
}

CVec3 jones_to_cvec(const JonesVector &j, const HelicityFrame &frame) {
  return j.jx * frame.e_xp + j.jy * frame.e_yp;
}

JonesVector cvec_to_jones(const CVec3 &eps, const HelicityFrame &frame) {
  require_transverse(frame.e_zero, eps);
  return {bilinear_dot(eps, frame.e_xp), bilinear_dot(eps, frame.e_yp)};
}

JonesVector apply_waveplate(const JonesVector &j, const WavePlate &plate) {
  const double a = plate.fast_axis_angle;
  if (plate.kind == PlateKind::Half) {
    const double c = std::cos(2 * a), s = std::sin(2 * a);
    return {c * j.jx + s * j.jy, s * j.jx - c * j.jy};
  }
  const double c = std::cos(a), s = std::sin(a);
  const cplx off = cplx(1.0, 1.0) * (c * s);
  const cplx m00 = cplx(c * c, -s * s), m11 = cplx(s * s, -c * c);
  return {m00 * j.jx + off * j.jy, off * j.jx + m11 * j.jy};
}

CVec3 beta_vector(const SphDirection &k_dir, const CVec3 &eps) {
  const CVec3 k = k_dir.unit();
  require_transverse(k, eps);
  return cross(k, eps);
}

cplx helicity_component(const CVec3 &eps, const HelicityFrame &frame, int q) {
  return bilinear_dot(eps, frame.circular(q));
}

JonesVector named_polarization(const std::string &name, const HelicityFrame &frame) {
  if (name == "LCP") return JonesVector::lcp();
  if (name == "RCP") return JonesVector::rcp();
  if (name == "theta-hat") return JonesVector::theta_hat();
  if (name == "phi-hat") return JonesVector::phi_hat();
  if (name == "z-hat") return cvec_to_jones(CVec3{0.0, 0.0, 1.0}, frame);
  throw std::invalid_argument("unknown polarization name: " + name);
}

} // namespace mpg
