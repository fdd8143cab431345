#pragma once

#include "mpgeom/cvec.hpp"

#include <vector>

namespace mpg {

//! Irreducible spherical tensor of rank K with components p = -K..K.
class SphTensor {
public:
  explicit SphTensor(int rank);
  SphTensor(int rank, std::vector<cplx> components);

  int rank() const { return rank_; }
  cplx &operator[](int p) { return comps_.at(static_cast<std::size_t>(p + rank_)); }
  const cplx &operator[](int p) const {
    return comps_.at(static_cast<std::size_t>(p + rank_));
  }
  const std::vector<cplx> &components() const { return comps_; }

private:
  int rank_;
  std::vector<cplx> comps_;
};

// Rank-1 tensor with components a_q = a . e_q (no conjugation).
SphTensor vector_tensor(const CVec3 &a);
// Rank-K tensor whose p component is Y_{K,p}(dir).
SphTensor harmonic_tensor(int K, const SphDirection &dir);

// Rank-K coupling of A and B with Clebsch-Gordan weights
// (-1)^{kA-kB+p} sqrt(2K+1) (kA kB K; mA mB -p). Throws on a rank triangle
// violation.
SphTensor tensor_product(int K, const SphTensor &A, const SphTensor &B);

// T^(K)[a, ..., a] built by K-fold recursion from T^(0) = 1.
SphTensor nested_stretched(int K, const CVec3 &a);

// Max over p of |T^K[T^{K-1}[k..k], eps]_p - c_K (eps . Y^(+1)_{K,p}(k))|
// with c_K = sqrt((K-1)! (K+1) 4 pi / (2K+1)!!). Throws PolarizationError for
// non-transverse eps.
double verify_polarization_identity(int K, const SphDirection &k_dir,
                                    const CVec3 &eps);

} // namespace mpg
