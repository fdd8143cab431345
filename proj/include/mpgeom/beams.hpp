#pragma once

#include "mpgeom/cvec.hpp"
#include "mpgeom/exec.hpp"
#include "mpgeom/polarization.hpp"

#include <array>
#include <stdexcept>
#include <variant>
#include <vector>

namespace mpg {

struct PlaneWave {
  bool operator==(const PlaneWave &) const = default;
};
struct HermiteGauss {
  int m = 0, n = 0;
  bool operator==(const HermiteGauss &) const = default;
};
struct LaguerreGauss {
  int n = 0, l = 0;
  bool operator==(const LaguerreGauss &) const = default;
};

using ScalarMode = std::variant<PlaneWave, HermiteGauss, LaguerreGauss>;

//! One polarization/profile product in a vector beam.
struct VectorTerm {
  JonesVector jones;
  ScalarMode mode;
  bool operator==(const VectorTerm &) const = default;
};

//! Superposition of scalar modes with their own polarizations. The summed
//! squared Jones norms must be 1.
struct VectorMode {
  std::vector<VectorTerm> terms;
  bool operator==(const VectorMode &) const = default;

  // Radially polarized donut: x' HG10 + y' HG01, each with weight 1/sqrt(2).
  static VectorMode radial_donut();
};

using BeamMode = std::variant<PlaneWave, HermiteGauss, LaguerreGauss, VectorMode>;

//! A paraxial beam focused at the origin. The offset displaces the beam axis
//! within the focal plane, in helicity-frame coordinates (x', y').
struct BeamSpec {
  BeamMode mode = HermiteGauss{};
  double w0 = 1e-6;       // m
  double k_mag = 1e7;     // rad/m
  SphDirection k_dir;
  JonesVector jones;      // ignored for VectorMode
  std::array<double, 2> offset{0.0, 0.0}; // m
  double amplitude_E0 = 1.0; // V/m
  double phase = 0.0;

  // Throws std::invalid_argument; k w0 must exceed 2.
  void validate() const;
  // k w0 < 10: the leading-order series are unreliable.
  bool paraxial_warning() const;
  bool operator==(const BeamSpec &) const = default;
};

class UnsupportedModeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string &what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

private:
  double achieved_;
};

// Throws UnsupportedModeError beyond HG m+n <= 4 and LG |l| <= 3, n <= 2.
void check_supported(const ScalarMode &mode);

// Transverse Fourier transform (1/2 pi) int u(rho) e^{-i k.rho} d^2 rho with
// the offset phase e^{-i k.offset}. Scalar HG/LG modes only.
cplx fourier_profile(const BeamSpec &spec, std::array<double, 2> k_perp);

struct BeamIntegralOptions {
  double rel_tol = 1e-9;
  bool reproject_polarization = false;
  int radial_nodes = 16, azimuthal_nodes = 32;
  int max_radial_nodes = 256, max_azimuthal_nodes = 512;
  Exec exec = Exec::Parallel;
};

struct BeamIntegral {
  cplx value;
  double achieved_change = 0.0; // last relative change between refinements
  int radial_nodes = 0, azimuthal_nodes = 0;
};

// (1/2 pi) int d^2k (eps . Y^(+1)_{K,-delta_m})(l) u~(k), l the on-shell
// direction of each Fourier component. Excludes amplitude and phase. A plane
// wave gives plane_wave_coupling exactly. Throws ConvergenceError when node
// doubling stops short of rel_tol.
BeamIntegral beam_coupling_integral_detail(const BeamSpec &spec, int K, int delta_m,
                                           const BeamIntegralOptions &opts = {});
cplx beam_coupling_integral(const BeamSpec &spec, int K, int delta_m,
                            const BeamIntegralOptions &opts = {});

struct GouyCorrection {
  int mu = 1;
  double factor = 1.0;
};

// mu = m+n+1 (HG) or 2n+|l|+1 (LG); a vector mode needs a common mu.
int gouy_order(const BeamMode &mode);
GouyCorrection gouy_correction(int K, const BeamMode &mode, double k_mag, double w0);

// mu arctan(z / z_R) with z_R = k w0^2 / 2.
double gouy_phase(const BeamMode &mode, double z, double k_mag, double w0);
// w0 sqrt(1 + (z / z_R)^2).
double beam_waist(double z, double k_mag, double w0);

// Real part of the complex paraxial field at lab position r (m) and time t (s),
// with omega = c k.
CVec3 beam_field(const BeamSpec &spec, const std::array<double, 3> &r, double t);

// int |u|^2 d^2 rho for the unit-amplitude mode, closed form and by quadrature
// of |u~|^2 in k-space.
double profile_norm_analytic(const ScalarMode &mode, double w0);
double profile_norm_quadrature(const ScalarMode &mode, double w0, int radial_nodes = 64,
                               int azimuthal_nodes = 64);

} // namespace mpg
