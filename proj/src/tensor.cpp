#include "mpgeom/tensor.hpp"

#include "mpgeom/coupling.hpp"
#include "mpgeom/harmonics.hpp"
#include "mpgeom/polarization.hpp"
#include "mpgeom/vsh.hpp"
#include "mpgeom/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mpg {

SphTensor::SphTensor(int rank)
    : rank_(rank), comps_(static_cast<std::size_t>(2 * rank + 1)) {
  if (rank < 0) throw std::invalid_argument("tensor rank must be >= 0");
}

SphTensor::SphTensor(int rank, std::vector<cplx> components)
    : rank_(rank), comps_(std::move(components)) {
  if (rank < 0 || comps_.size() != static_cast<std::size_t>(2 * rank + 1))
    throw std::invalid_argument("tensor needs 2K+1 components");
}

SphTensor vector_tensor(const CVec3 &a) {
  const auto c = spherical_components(a); // order +1, 0, -1
  return SphTensor(1, {c[2], c[1], c[0]});
}

SphTensor harmonic_tensor(int K, const SphDirection &dir) {
  SphTensor t(K);
  for (int p = -K; p <= K; ++p) t[p] = sph_harm(K, p, dir);
  return t;
}

SphTensor tensor_product(int K, const SphTensor &A, const SphTensor &B) {
  const int ka = A.rank(), kb = B.rank();
  if (K < std::abs(ka - kb) || K > ka + kb)
    throw std::invalid_argument("tensor_product: rank outside |kA-kB|..kA+kB");
  SphTensor out(K);
  const double root = std::sqrt(2.0 * K + 1.0);
  for (int p = -K; p <= K; ++p) {
    cplx sum = 0.0;
    for (int ma = -ka; ma <= ka; ++ma) {
      const int mb = p - ma;
      if (std::abs(mb) > kb) continue;
      const double w = wigner3j(ka, kb, K, ma, mb, -p);
      if (w == 0.0) continue;
      sum += w * A[ma] * B[mb];
    }
    const double phase = ((ka - kb + p) % 2 == 0) ? 1.0 : -1.0;
    out[p] = phase * root * sum;
  }
  return out;
}

SphTensor nested_stretched(int K, const CVec3 &a) {
  if (K < 0) throw std::invalid_argument("nested_stretched: K < 0");
  SphTensor t(0, {1.0});
  const SphTensor v = vector_tensor(a);
  for (int r = 1; r <= K; ++r) t = tensor_product(r, t, v);
  return t;
}

double verify_polarization_identity(int K, const SphDirection &k_dir,
                                    const CVec3 &eps) {
  if (K < 1) throw std::invalid_argument("polarization identity needs K >= 1");
  const CVec3 k = k_dir.unit();
  require_transverse(k, eps);
  const SphTensor lhs =
      tensor_product(K, nested_stretched(K - 1, k), vector_tensor(eps));
  const double factor = multipole_prefactors(K).identity_factor;
  const HelicityFrame f = helicity_frame(k_dir);
  double worst = 0.0;
  for (int p = -K; p <= K; ++p) {
    const cplx rhs = factor * bilinear_dot(eps, vsh_plus1_value(K, p, f));
    worst = std::max(worst, std::abs(lhs[p] - rhs));
  }
  return worst;
}

} // namespace mpg
