#pragma once

#include "mpgeom/cvec.hpp"

namespace mpg {

//! Basis attached to a propagation direction: z' along k, x' = theta-hat,
//! y' = phi-hat, plus the circular vectors e'_{+1}, e'_{-1}.
struct HelicityFrame {
  SphDirection k_dir; // azimuth forced to 0 at the poles
  CVec3 e_plus, e_minus, e_zero, e_xp, e_yp;

  // e'_q for q in {+1, 0, -1}.
  const CVec3 &circular(int q) const;
};

HelicityFrame helicity_frame(const SphDirection &k_dir);

} // namespace mpg
