#pragma once

#include "mpgeom/cvec.hpp"
#include "mpgeom/exec.hpp"
#include "mpgeom/frames.hpp"

#include <vector>

namespace mpg {

//! A vector spherical harmonic split into magnitude and direction.
struct VshValue {
  CVec3 value;
  double magnitude_sq = 0.0; // W_{K,|p|}(theta)
  CVec3 direction;           // unit, or zero where W vanishes
};

// Transverse harmonic Y^(+1)_{K,p} built from the rotated helicity basis.
VshValue vsh_plus1(int K, int p, const SphDirection &dir);
// Quadrature partner Y^(0)_{K,p} = -i khat x Y^(+1)_{K,p}.
VshValue vsh_zero(int K, int p, const SphDirection &dir);
// Same as vsh_plus1 but reuses a precomputed frame (hot loops).
CVec3 vsh_plus1_value(int K, int p, const HelicityFrame &frame);

// Emitted-power pattern W_{K,|p|}(theta) from three |Y|^2 terms.
double vsh_magnitude_W(int K, int p, double theta);

struct VshGridRecord {
  SphDirection dir;
  CVec3 value;
  double W = 0.0;
};

// Row-major over theta_i = pi i/(n_theta-1), phi_j = 2 pi j/n_phi.
// lambda_type is +1 or 0.
std::vector<VshGridRecord> vsh_grid(int K, int p, int lambda_type, int n_theta,
                                    int n_phi, Exec exec = Exec::Parallel);

} // namespace mpg
