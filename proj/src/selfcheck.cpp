#include "mpgeom/selfcheck.hpp"

#include "mpgeom/catalog.hpp"
#include "mpgeom/coupling.hpp"
#include "mpgeom/harmonics.hpp"
#include "mpgeom/polarization.hpp"
#include "mpgeom/tensor.hpp"
#include "mpgeom/vsh.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mpg {

namespace {

// Twenty fixed interior directions.
std::vector<SphDirection> sample_directions() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> th(0.05, pi - 0.05), ph(0.0, 2 * pi);
  std::vector<SphDirection> out;
  for (int i = 0; i < 20; ++i) {
    const double t = th(rng);
    out.emplace_back(t, ph(rng));
  }
  return out;
}

CheckOutcome finish(std::string name, std::size_t cases, double err, double tol) {
  return {std::move(name), cases, err, tol, err <= tol};
}

// max_i |u got_i - want_i| for the best unit phase u.
double phase_free_diff(const std::array<cplx, 2> &got, const std::array<cplx, 2> &want) {
  const std::size_t ref = std::abs(want[1]) > std::abs(want[0]) ? 1 : 0;
  if (std::abs(got[ref]) == 0.0) return 1.0;
  const cplx ph = want[ref] / got[ref];
  const cplx unit = ph / std::abs(ph);
  double err = std::abs(std::abs(ph) - 1.0);
  for (std::size_t i = 0; i < 2; ++i) err = std::max(err, std::abs(unit * got[i] - want[i]));
  return err;
}

} // namespace

CheckOutcome check_wigner_d_catalog() {
  double err = 0.0;
  std::size_t cases = 0;
  for (const auto &d : sample_directions())
    for (int K = 1; K <= 3; ++K)
      for (int sign : {-1, 1})
        for (int m2 = -K; m2 <= K; ++m2) {
          const cplx want = catalog::wigner_d_entry(K, sign, m2, d.theta(), d.phi());
          err = std::max(err, std::abs(wigner_d_pm1(K, sign, m2, d.theta(), d.phi()) - want));
          err = std::max(err,
                         std::abs(wigner_d_pm1_closed(K, sign, m2, d.theta(), d.phi()) - want));
          ++cases;
        }
  return finish("wigner-d-table", cases, err, 1e-12);
}

CheckOutcome check_vsh_magnitude_table() {
  double err = 0.0;
  std::size_t cases = 0;
  for (const auto &d : sample_directions())
    for (int K = 1; K <= 3; ++K)
      for (int p = -K; p <= K; ++p) {
        const auto e = catalog::vsh_entry(K, p, d.theta(), d.phi());
        const CVec3 y = vsh_plus1(K, p, d).value;
        err = std::max(err, std::abs(e.magnitude - y.norm()));
        err = std::max(err, std::abs(e.magnitude * e.magnitude - vsh_magnitude_W(K, p, d.theta())));
        for (const CVec3 &dir : {e.direction_circular, e.direction_linear}) {
          const double n = dir.norm();
          if (n < 1e-9) {
            err = std::max(err, y.norm());
            continue;
          }
          err = std::max(err, max_abs_diff((e.magnitude / n) * dir, y));
        }
        ++cases;
      }
  return finish("vsh-magnitude-table", cases, err, 1e-12);
}

CheckOutcome check_vsh_listed() {
  double err = 0.0;
  std::size_t cases = 0;
  for (const auto &d : sample_directions())
    for (int K = 1; K <= 3; ++K)
      for (int p = -K; p <= K; ++p) {
        const CVec3 y = vsh_plus1(K, p, d).value;
        err = std::max(err, max_abs_diff(catalog::vsh_listed_linear(K, p, d.theta(), d.phi()), y));
        err = std::max(err,
                       max_abs_diff(catalog::vsh_listed_circular(K, p, d.theta(), d.phi()), y));
        cases += 2;
      }
  return finish("vsh-listed-forms", cases, err, 1e-12);
}

CheckOutcome check_polarization_rows() {
  double err = 0.0;
  std::size_t cases = 0;
  const double gammas[] = {0.3, 1.1, 2.5}, betas[] = {0.2, 0.9, 2.2};
  const double thetas[] = {0.7, 1.9, 2.8}, phis[] = {0.4, 2.6, 5.0};
  for (int i = 0; i < 3; ++i)
    for (const auto &row : catalog::polarization_rows(gammas[i], betas[i], thetas[i], phis[i])) {
      const HelicityFrame f = helicity_frame(SphDirection(row.theta_k, row.phi_k));
      const JonesVector j = cvec_to_jones(row.eps, f);
      // The circular pair and the Jones pair are each fixed only up to a phase.
      err = std::max(err, phase_free_diff({helicity_component(row.eps, f, +1),
                                           helicity_component(row.eps, f, -1)},
                                          {row.e_plus, row.e_minus}));
      err = std::max(err, phase_free_diff({j.jx, j.jy}, {row.e_x, row.e_y}));
      ++cases;
    }
  return finish("polarization-table", cases, err, 1e-12);
}

CheckOutcome check_polarization_identity() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u(-1.0, 1.0), ph(0.0, 2 * pi);
  double err = 0.0;
  std::size_t cases = 0;
  for (int K = 1; K <= 4; ++K)
    for (int i = 0; i < 100; ++i) {
      const SphDirection k(std::acos(u(rng)), ph(rng));
      const cplx a{u(rng), u(rng)}, b{u(rng), u(rng)};
      const double n = std::sqrt(std::norm(a) + std::norm(b));
      const CVec3 eps = jones_to_cvec({a / n, b / n}, helicity_frame(k));
      err = std::max(err, verify_polarization_identity(K, k, eps));
      ++cases;
    }
  return finish("polarization-identity", cases, err, 1e-10);
}

CheckOutcome check_prefactors() {
  struct Want {
    Rational ham, ein, ident;
  };
  const Want want[] = {{Rational(8, 3), Rational(4, 3), Rational(8, 3)},
                       {Rational(2, 15), Rational(1, 15), Rational(4, 5)},
                       {Rational(16, 4725), Rational(8, 4725), Rational(32, 105)}};
  std::size_t bad = 0;
  for (int K = 1; K <= 3; ++K) {
    const auto m = multipole_prefactors(K);
    const Want &w = want[K - 1];
    bad += m.hamiltonian_radicand_over_pi != w.ham;
    bad += m.einstein_exact != w.ein;
    bad += m.identity_radicand_over_pi != w.ident;
  }
  return finish("prefactors", 9, bad == 0 ? 0.0 : 1.0, 0.0);
}

std::vector<CheckOutcome> run_self_checks() {
  return {check_wigner_d_catalog(), check_vsh_magnitude_table(), check_vsh_listed(),
          check_polarization_rows(), check_polarization_identity(), check_prefactors()};
}

} // namespace mpg
