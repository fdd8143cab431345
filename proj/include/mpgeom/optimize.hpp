#pragma once

#include "mpgeom/cvec.hpp"
#include "mpgeom/exec.hpp"
#include "mpgeom/polarization.hpp"

#include <string>

namespace mpg {

enum class Objective { MaxCoupling, MaxCouplingZeroSelectivity };

Objective parse_objective(const std::string &name);
std::string objective_name(Objective o);

struct OptimizeResult {
  bool found = false;
  SphDirection k_dir;   // azimuth fixed at 0; |coupling| does not depend on it
  JonesVector jones;
  CVec3 eps;
  cplx coupling;        // eps . Y^(+1)_{K,-delta_m}
  double value = 0.0;   // |coupling|
  double selectivity = 0.0;
};

// Grid scan over theta_k (181 points), ellipse orientation (73) and ellipticity
// (37), then compass search down to a 1e-10 step. The zero-selectivity
// objective penalises leakage and reports found = false unless the optimum has
// selectivity below 1e-8 with non-negligible coupling.
OptimizeResult optimize_geometry(int K, int delta_m, Objective objective,
                                 Exec exec = Exec::Parallel);

// Jones vector of an ellipse with major-axis angle psi and ellipticity angle
// chi in [-pi/4, pi/4].
JonesVector ellipse_jones(double psi, double chi);

} // namespace mpg
