#pragma once

#include "mpgeom/cvec.hpp"
#include "mpgeom/frames.hpp"

#include <stdexcept>
#include <string>

namespace mpg {

//! Jones vector in the helicity frame's linear basis (theta-hat, phi-hat).
struct JonesVector {
  cplx jx{1.0}, jy{0.0};

  double norm() const { return std::sqrt(std::norm(jx) + std::norm(jy)); }
  bool operator==(const JonesVector &) const = default;

  static JonesVector lcp() { return {1.0 / std::sqrt(2.0), I / std::sqrt(2.0)}; }
  static JonesVector rcp() { return {1.0 / std::sqrt(2.0), -I / std::sqrt(2.0)}; }
  static JonesVector theta_hat() { return {1.0, 0.0}; }
  static JonesVector phi_hat() { return {0.0, 1.0}; }
};

enum class PlateKind { Half, Quarter };

//! Wave plate rotated about +k by fast_axis_angle from phi-hat.
struct WavePlate {
  PlateKind kind = PlateKind::Half;
  double fast_axis_angle = 0.0;
};

class PolarizationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Allowed |k . eps| for a polarization to count as transverse.
inline constexpr double kTransverseTolerance = 1e-10;

void require_transverse(const CVec3 &k_hat, const CVec3 &eps);

CVec3 jones_to_cvec(const JonesVector &j, const HelicityFrame &frame);
// Throws PolarizationError for polarizations not transverse to the frame.
JonesVector cvec_to_jones(const CVec3 &eps, const HelicityFrame &frame);
JonesVector apply_waveplate(const JonesVector &j, const WavePlate &plate);
// Magnetic polarization khat x eps; throws for non-transverse eps.
CVec3 beta_vector(const SphDirection &k_dir, const CVec3 &eps);

// Helicity components eps'_q = eps . e'_q for q = +1, -1.
cplx helicity_component(const CVec3 &eps, const HelicityFrame &frame, int q);

// LCP, RCP, theta-hat, phi-hat or z-hat (the last needs k perpendicular to z).
JonesVector named_polarization(const std::string &name, const HelicityFrame &frame);

} // namespace mpg
