#pragma once

#include "mpgeom/exact.hpp"
#include "mpgeom/halfint.hpp"

namespace mpg {

// Wigner 3j and 6j symbols via the Racah single sums. Arguments violating a
// selection rule give exactly zero.

SqrtRational wigner3j_exact(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1,
                            HalfInt m2, HalfInt m3);
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                HalfInt m3);

// {j1 j2 j3; j4 j5 j6}
SqrtRational wigner6j_exact(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4,
                            HalfInt j5, HalfInt j6);
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                HalfInt j6);

// Integer-argument conveniences.
inline double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  return wigner3j(HalfInt::from_int(j1), HalfInt::from_int(j2),
                  HalfInt::from_int(j3), HalfInt::from_int(m1),
                  HalfInt::from_int(m2), HalfInt::from_int(m3));
}

} // namespace mpg
