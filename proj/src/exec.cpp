#include "mpgeom/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpg {

void set_thread_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

template <class T> T pairwise(std::span<const T> t) {
  if (t.size() <= 8) {
    T s{};
    for (const T &v : t) s += v;
    return s;
  }
  const std::size_t h = t.size() / 2;
  return pairwise(t.first(h)) + pairwise(t.subspan(h));
}

} // namespace

std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) {
  return pairwise(terms);
}

double pairwise_sum(std::span<const double> terms) { return pairwise(terms); }

} // namespace mpg
