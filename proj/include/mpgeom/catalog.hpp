#pragma once

// Closed-form low-rank expressions written out term by term, independent of
// the general-rank routines they are checked against.

#include "mpgeom/cvec.hpp"

#include <string>
#include <vector>

namespace mpg::catalog {

// D^(K)_{sign,m2}(0, theta, phi) for K = 1..3, sign = +-1, |m2| <= K.
cplx wigner_d_entry(int K, int sign, int m2, double theta, double phi);
inline constexpr int kWignerDEntries = 30;

// Magnitude sqrt(W) and un-normalised directions of Y^(+1)_{K,p} for K = 1..3.
struct VshEntry {
  double magnitude;
  CVec3 direction_circular; // in e'_{+1}, e'_{-1}
  CVec3 direction_linear;   // in theta-hat, phi-hat
};
VshEntry vsh_entry(int K, int p, double theta, double phi);

// Fully written-out Y^(+1)_{K,p}, K = 1..3, in the linear and circular bases.
CVec3 vsh_listed_linear(int K, int p, double theta, double phi);
CVec3 vsh_listed_circular(int K, int p, double theta, double phi);

//! One principal polarization state with its expected helicity-frame
//! components (up to a global phase).
struct PolarizationRow {
  std::string geometry;
  double theta_k, phi_k;
  CVec3 eps; // built from the geometry description in Cartesian form
  cplx e_plus, e_minus, e_x, e_y;
};
std::vector<PolarizationRow> polarization_rows(double gamma, double beta, double theta_k,
                                               double phi_k);

} // namespace mpg::catalog
