#pragma once

#include <complex>
#include <span>

namespace mpg {

// Serial is the reference path kept for testing; Parallel distributes
// independent work items with OpenMP. Both produce bit-identical results
// because reductions always run serially in a fixed order afterwards.
enum class Exec { Serial, Parallel };

void set_thread_count(int n);
int thread_count();

// Pairwise summation in index order; independent of how terms were produced.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms);
double pairwise_sum(std::span<const double> terms);

} // namespace mpg
