#include "mpgeom/frames.hpp"

#include <cmath>
#include <stdexcept>

namespace mpg {

const CVec3 &HelicityFrame::circular(int q) const {
  switch (q) {
  case +1: return e_plus;
  case 0: return e_zero;
  case -1: return e_minus;
  default: throw std::invalid_argument("helicity index must be -1, 0, +1");
  }
}

HelicityFrame helicity_frame(const SphDirection &k_dir) {
  HelicityFrame f;
  f.k_dir = k_dir.at_pole() ? SphDirection(k_dir.theta(), 0.0) : k_dir;
  const double th = f.k_dir.theta(), ph = f.k_dir.phi();
  const double ct = std::cos(th), st = std::sin(th);
  const cplx em = std::polar(1.0, -ph), ep = std::polar(1.0, ph);
  const CVec3 bp = spherical_basis(+1), b0 = spherical_basis(0),
              bm = spherical_basis(-1);
  const double r = 1.0 / std::sqrt(2.0);

  f.e_plus = bp * (0.5 * (1.0 + ct) * em) + b0 * cplx(st * r) +
             bm * (0.5 * (1.0 - ct) * ep);
  f.e_zero = bp * (-st * r * em) + b0 * cplx(ct) + bm * (st * r * ep);
  f.e_minus = bp * (0.5 * (1.0 - ct) * em) - b0 * cplx(st * r) +
              bm * (0.5 * (1.0 + ct) * ep);
  f.e_xp = f.k_dir.theta_hat();
  f.e_yp = f.k_dir.phi_hat();
  return f;
}

} // namespace mpg
