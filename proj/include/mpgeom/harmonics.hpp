#pragma once

#include "mpgeom/cvec.hpp"

namespace mpg {

// Y_{l,m}(theta, phi) with the Condon-Shortley phase; zero when |m| > l.
cplx sph_harm(int l, int m, double theta, double phi);
inline cplx sph_harm(int l, int m, const SphDirection &d) {
  return sph_harm(l, m, d.theta(), d.phi());
}

// D^(K)_{sign, m2}(0, theta, phi) for sign = +1 or -1, from the
// spherical-harmonic expansion of the rotation matrix row.
cplx wigner_d_pm1(int K, int sign, int m2, double theta, double phi);

// Same element from the closed cot/sin sum. Singular at theta = 0 and pi, so
// only used as an interior cross-check.
cplx wigner_d_pm1_closed(int K, int sign, int m2, double theta, double phi);

} // namespace mpg
