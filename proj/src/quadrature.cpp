#include "mpgeom/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace mpg {

namespace {

// Eigenvalues of the symmetric Jacobi matrix are the nodes; the squared first
// eigenvector components times the weight's total mass are the weights.
QuadratureRule golub_welsch(const Eigen::VectorXd &diag, const Eigen::VectorXd &offdiag,
                            double mass) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Golub-Welsch eigen-decomposition failed");
  const auto n = diag.size();
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
  }
  return rule;
}

// L_n(x) and L_{n+1}(x) by the three-term recurrence.
std::pair<double, double> laguerre_pair(int n, double x) {
  double prev = 1.0, cur = 1.0 - x;
  if (n == 0) return {prev, cur};
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  const double next = ((2.0 * n + 1.0 - x) * cur - n * prev) / (n + 1.0);
  return {cur, next};
}

// P_n(x) and P'_n(x).
std::pair<double, double> legendre_pair(int n, double x) {
  double prev = 1.0, cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return {cur, n * (x * cur - prev) / (x * x - 1.0)};
}

QuadratureRule build_laguerre(int n) {
  Eigen::VectorXd diag(n), off(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0;
  for (int i = 1; i < n; ++i) off(i - 1) = i;
  QuadratureRule rule = golub_welsch(diag, off, 1.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 3; ++it) {
      // x L_n'(x) = (x - n - 1) L_n + (n + 1) L_{n+1}.
      const auto [ln, ln1] = laguerre_pair(n, x);
      const double deriv = ((x - n - 1.0) * ln + (n + 1.0) * ln1) / x;
      if (!std::isfinite(deriv) || deriv == 0.0) break;
      const double dx = ln / deriv;
      if (!std::isfinite(dx)) break;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::abs(x)) break;
    }
    rule.nodes[i] = x;
    const double ln1 = laguerre_pair(n, x).second;
    const double denom = (n + 1.0) * ln1;
    const double w = x / (denom * denom);
    rule.weights[i] = std::isfinite(w) ? w : 0.0;
  }
  return rule;
}

QuadratureRule build_legendre(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), off(n > 1 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) off(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
  QuadratureRule rule = golub_welsch(diag, off, 2.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 3; ++it) {
      const auto [p, dp] = legendre_pair(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-17) break;
    }
    rule.nodes[i] = x;
    const double dp = legendre_pair(n, x).second;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

using Builder = QuadratureRule (*)(int);

const QuadratureRule &cached(std::map<int, std::unique_ptr<QuadratureRule>> &cache,
                             std::mutex &mu, int n, Builder build) {
  if (n < 1) throw std::invalid_argument("quadrature needs at least one node");
  std::lock_guard lock(mu);
  auto &slot = cache[n];
  if (!slot) slot = std::make_unique<QuadratureRule>(build(n));
  return *slot;
}

} // namespace

const QuadratureRule &gauss_laguerre(int n) {
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  static std::mutex mu;
  return cached(cache, mu, n, build_laguerre);
}

const QuadratureRule &gauss_legendre(int n) {
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  static std::mutex mu;
  return cached(cache, mu, n, build_legendre);
}

} // namespace mpg
