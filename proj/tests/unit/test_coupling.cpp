#include "doctest.h"
#include "support.hpp"

#include "mpgeom/constants.hpp"
#include "mpgeom/coupling.hpp"
#include "mpgeom/frames.hpp"
#include "mpgeom/optimize.hpp"
#include "mpgeom/polarization.hpp"
#include "mpgeom/vsh.hpp"
#include "mpgeom/wigner.hpp"

#include <cmath>
#include <vector>

using namespace mpg;

namespace {

HalfInt half(int twice) { return HalfInt::from_twice(twice); }

TransitionSpec line(int K, int je2, int jg2, int me2, int mg2, double A = 2.0e7,
                    double omega = 3.0e15) {
  TransitionSpec s;
  s.K = K;
  s.J_e = half(je2);
  s.J_g = half(jg2);
  s.M_e = half(me2);
  s.M_g = half(mg2);
  s.einstein_A = A;
  s.omega = omega;
  return s;
}

// e E0/hbar * sqrt(2 pi A (2J_e+1) (c/omega)^3 / (alpha c)) written out here.
double field_strength(const TransitionSpec &s, double E0) {
  using namespace constants;
  const double cw = speed_of_light / s.omega;
  return elementary_charge * E0 / hbar *
         std::sqrt(2 * pi * s.einstein_A / (fine_structure * speed_of_light) *
                   (s.J_e.twice() + 1.0) * cw * cw * cw);
}

CVec3 jones_eps(const JonesVector &j, const SphDirection &d) {
  return jones_to_cvec(j, helicity_frame(d));
}

} // namespace

TEST_SUITE("coupling") {

TEST_CASE("multipole prefactors") {
  const auto p1 = multipole_prefactors(1), p2 = multipole_prefactors(2),
             p3 = multipole_prefactors(3);
  CHECK(p1.hamiltonian_radicand_over_pi == Rational(8, 3));
  CHECK(p1.einstein_exact == Rational(4, 3));
  CHECK(p1.identity_radicand_over_pi == Rational(8, 3));
  CHECK(p2.hamiltonian_radicand_over_pi == Rational(2, 15));
  CHECK(p2.einstein_exact == Rational(1, 15));
  CHECK(p2.identity_radicand_over_pi == Rational(4, 5));
  CHECK(p3.hamiltonian_radicand_over_pi == Rational(16, 4725));
  CHECK(p3.einstein_exact == Rational(8, 4725));
  CHECK(p3.identity_radicand_over_pi == Rational(32, 105));
  CHECK(p1.hamiltonian_factor == doctest::Approx(std::sqrt(8 * pi / 3)).epsilon(1e-15));
  CHECK(p2.identity_factor == doctest::Approx(std::sqrt(4 * pi / 5)).epsilon(1e-15));
  CHECK(p3.einstein_factor == doctest::Approx(8.0 / 4725).epsilon(1e-15));
  CHECK_THROWS(multipole_prefactors(0));
}

TEST_CASE("reduced matrix element and Einstein A") {
  CHECK(reduced_matrix_element_from_A(line(1, 1, 1, 1, 1, 0.0)) == 0.0);
  auto bad = line(1, 1, 1, 1, 1);
  bad.omega = 0.0;
  CHECK_THROWS(reduced_matrix_element_from_A(bad));

  for (int K = 1; K <= 4; ++K)
    for (Character c : {Character::Electric, Character::Magnetic}) {
      auto s = line(K, 2 * K + 1, 1, 1, 1, 1.234e5, 2.5e15);
      s.character = c;
      const double r = reduced_matrix_element_from_A(s);
      CHECK(einstein_A_from_reduced(s, r) == doctest::Approx(s.einstein_A).epsilon(1e-12));
    }

  // Equal A and omega: the K=1 to K=2 ratio is sqrt((1/15)/(4/3)) omega/c.
  const auto e1 = line(1, 3, 1, 1, 1), e2 = line(2, 3, 1, 1, 1);
  const double ratio = reduced_matrix_element_from_A(e1) / reduced_matrix_element_from_A(e2);
  CHECK(ratio == doctest::Approx(std::sqrt(1.0 / 20) * e1.omega / constants::speed_of_light)
                     .epsilon(1e-13));
  // Sr 461 nm: about 5.2 e a0.
  const auto sr = line(1, 2, 0, 0, 0, 1.9e8, 4.0872e15);
  CHECK(reduced_matrix_element_from_A(sr) / 5.29177210903e-11 ==
        doctest::Approx(5.25).epsilon(0.02));
}

TEST_CASE("plane-wave coupling examples") {
  const SphDirection side(pi / 2, 0.0);
  CHECK(std::abs(plane_wave_coupling(1, 0, side, jones_eps(JonesVector::theta_hat(), side)) +
                 std::sqrt(3 / (8 * pi))) < 1e-15);
  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    const SphDirection eq(pi / 2, 2 * pi * i / 20.0);
    const JonesVector j{testsupport::random_complex(rng), testsupport::random_complex(rng)};
    CHECK(std::abs(plane_wave_coupling(2, 0, eq, jones_eps(j, eq))) < 1e-15);
  }
  for (double tk : {0.3, 1.0, 2.2})
    for (double tq = 0.0; tq < pi / 2; tq += 0.1) {
      const SphDirection d(tk, 0.7);
      const JonesVector j = apply_waveplate(JonesVector::phi_hat(), {PlateKind::Quarter, tq});
      const cplx want = -std::sqrt(3 / (16 * pi)) * std::exp(I * (pi / 4)) * std::sin(2 * tq) *
                        std::sin(tk);
      CHECK(std::abs(plane_wave_coupling(1, 0, d, jones_eps(j, d)) - want) < 1e-15);
    }
  CHECK_THROWS_AS(plane_wave_coupling(1, 0, SphDirection(0.0, 0.0), {0.0, 0.0, 1.0}),
                  PolarizationError);
  CHECK_THROWS(plane_wave_coupling(1, 2, side, {0.0, 1.0, 0.0}));
}

TEST_CASE("Rabi frequency against the written-out formula") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 50; ++i) {
    const int K = 1 + i % 3;
    auto s = line(K, 2 * K + 1, 1, 2 * (i % 3) - 1, 1);
    s.s_J_sign = (i % 2) ? 1 : -1;
    const cplx geo = testsupport::random_complex(rng);
    const double E0 = 150.0 + i;
    const int p2 = s.M_e.twice() - s.M_g.twice();
    const double w3 = wigner3j(s.J_e, HalfInt::from_int(K), s.J_g, -s.M_e, half(p2), s.M_g);
    const double parity = ((s.J_e.twice() - s.M_g.twice()) / 2) % 2 == 0 ? 1.0 : -1.0;
    const cplx sj = std::pow(I, K - 1) * static_cast<double>(s.s_J_sign);
    const cplx want = sj * parity * field_strength(s, E0) * w3 * geo;
    CHECK(std::abs(rabi_frequency(s, geo, E0) - want) < 1e-12 * std::abs(want));
  }
}

TEST_CASE("Rabi frequency zeros and scaling") {
  CHECK(rabi_frequency(line(1, 1, 1, 1, -1, 0.0), 1.0, 100.0) == cplx(0.0));
  CHECK(rabi_frequency(line(1, 3, 1, 3, -1), 1.0, 100.0) == cplx(0.0)); // |dM| = 2 > K
  CHECK(rabi_frequency(line(1, 5, 1, 1, 1), 1.0, 100.0) == cplx(0.0));  // triangle
  CHECK_THROWS(rabi_frequency(line(1, 1, 1, 3, 1), 1.0, 100.0));        // |M_e| > J_e

  const auto s = line(1, 2, 0, 0, 0, 1.9e8, 4.0872e15);
  const SphDirection side(pi / 2, 0.0);
  auto quarter = [&](double tq) {
    const auto j = apply_waveplate(JonesVector::phi_hat(), {PlateKind::Quarter, tq});
    return rabi_frequency(s, plane_wave_coupling(1, 0, side, jones_eps(j, side)), 1000.0);
  };
  CHECK(std::abs(quarter(pi / 4)) / std::abs(quarter(pi / 8)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

  const cplx base = rabi_frequency(s, 0.3, 1000.0);
  CHECK(std::abs(rabi_frequency(s, 0.3, 3000.0) / base - 3.0) < 1e-14);
  auto s4 = s;
  s4.einstein_A *= 4;
  CHECK(std::abs(rabi_frequency(s4, 0.3, 1000.0) / base - 2.0) < 1e-14);
  auto sw = s;
  sw.omega *= 4;
  CHECK(std::abs(rabi_frequency(sw, 0.3, 1000.0) / base - 0.125) < 1e-14);
  auto sneg = s;
  sneg.s_J_sign = -1;
  CHECK(std::abs(rabi_frequency(sneg, 0.3, 1000.0) + base) < 1e-12 * std::abs(base));
}

TEST_CASE("3j sum rule over ground sublevels") {
  for (int K = 1; K <= 3; ++K)
    for (int je2 : {2 * K - 1, 2 * K + 1, 2 * K + 3})
      for (int jg2 = std::max(je2 - 2 * K, 2 * K - je2); jg2 <= je2 + 2 * K; jg2 += 2) {
        for (int me2 = -je2; me2 <= je2; me2 += 2) {
          double sum = 0.0;
          auto s = line(K, je2, jg2, me2, -jg2);
          const double unit = field_strength(s, 1.0);
          for (int mg2 = -jg2; mg2 <= jg2; mg2 += 2) {
            s.M_g = half(mg2);
            sum += std::norm(rabi_frequency(s, 1.0, 1.0) / unit);
          }
          CHECK(sum == doctest::Approx(1.0 / (je2 + 1)).epsilon(1e-12));
        }
      }
}

TEST_CASE("hyperfine Rabi frequency") {
  // I = 0 collapses to the fine-structure result exactly.
  for (int K = 1; K <= 3; ++K) {
    auto s = line(K, 2 * K + 1, 1, 1, -1);
    const cplx fine = rabi_frequency(s, cplx(0.2, -0.4), 500.0);
    s.hyperfine = HyperfineLevels{half(0), s.J_e, s.J_g};
    CHECK(std::abs(rabi_frequency_hyperfine(s, cplx(0.2, -0.4), 500.0) - fine) <
          1e-13 * std::abs(fine));
    CHECK(rabi_for(s, cplx(0.2, -0.4), 500.0) == rabi_frequency_hyperfine(s, cplx(0.2, -0.4), 500.0));
  }

  // Frozen angular factors from exact arithmetic.
  const auto rows = testsupport::read_rows("hyperfine.txt");
  REQUIRE(rows.size() == 400);
  double worst = 0.0;
  for (const auto &r : rows) {
    auto s = line(std::stoi(r[0]), std::stoi(r[1]), std::stoi(r[2]), std::stoi(r[6]),
                  std::stoi(r[7]));
    s.hyperfine = HyperfineLevels{half(std::stoi(r[3])), half(std::stoi(r[4])),
                                  half(std::stoi(r[5]))};
    const double want = testsupport::fixture_value(r[8], r[9], r[10]).to_double();
    const cplx got = rabi_frequency_hyperfine(s, 1.0, 1.0) /
                     (std::pow(I, s.K - 1) * field_strength(s, 1.0));
    worst = std::max(worst, std::abs(got - want));
  }
  CHECK(worst < 1e-13);

  // Branching from F_e = 1 of a spin-1/2 doublet: F_g = 1 gets twice F_g = 0.
  auto branch = [](int fg2) {
    auto s = line(1, 1, 1, 0, 0);
    s.hyperfine = HyperfineLevels{half(1), half(2), half(fg2)};
    double sum = 0.0;
    for (int mg2 = -fg2; mg2 <= fg2; mg2 += 2) {
      s.M_g = half(mg2);
      sum += std::norm(rabi_frequency_hyperfine(s, 1.0, 1.0) / field_strength(s, 1.0));
    }
    return sum;
  };
  CHECK(branch(0) == doctest::Approx(1.0 / 6).epsilon(1e-13));
  CHECK(branch(2) == doctest::Approx(1.0 / 3).epsilon(1e-13));

  auto inconsistent = line(1, 1, 1, 1, 1);
  inconsistent.hyperfine = HyperfineLevels{half(1), half(4), half(2)}; // F_e = 2 from 1/2 + 1/2
  CHECK_THROWS(rabi_frequency_hyperfine(inconsistent, 1.0, 1.0));
  CHECK_THROWS(rabi_frequency_hyperfine(line(1, 1, 1, 1, 1), 1.0, 1.0));
}

TEST_CASE("global rotation only changes the phase") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> ang(0.0, 2 * pi);
  for (int i = 0; i < 20; ++i) {
    const auto d = testsupport::random_direction(rng);
    const double alpha = ang(rng);
    const SphDirection rotated(d.theta(), d.phi() + alpha);
    const JonesVector j{testsupport::random_complex(rng), testsupport::random_complex(rng)};
    for (int K = 1; K <= 3; ++K)
      for (int dm = -K; dm <= K; ++dm) {
        const cplx a = plane_wave_coupling(K, dm, d, jones_eps(j, d));
        const cplx b = plane_wave_coupling(K, dm, rotated, jones_eps(j, rotated));
        CHECK(std::abs(b - std::exp(-I * (dm * alpha)) * a) < 1e-13);
      }
  }
}

TEST_CASE("magnetic lines use the beta polarization and c B0") {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 20; ++i) {
    const auto d = testsupport::random_direction(rng);
    const CVec3 eps = jones_eps({testsupport::random_complex(rng), 0.5}, d);
    const CVec3 beta = beta_vector(d, eps);
    auto m = line(1, 1, 1, 1, -1);
    m.character = Character::Magnetic;
    const auto e = line(1, 1, 1, 1, -1);
    const double B0 = 2e-6;
    const cplx om = rabi_frequency(m, plane_wave_coupling(1, 1, d, beta),
                                   constants::speed_of_light * B0);
    const cplx oe = rabi_frequency(e, bilinear_dot(beta, vsh_plus1(1, -1, d).value),
                                   constants::speed_of_light * B0);
    CHECK(std::abs(om - oe) < 1e-12 * std::abs(oe));
  }
}

TEST_CASE("coherent sums of plane waves") {
  CHECK_THROWS(multi_beam_coupling(1, 0, std::span<const PlaneWaveDrive>{}));
  const SphDirection d(1.1, 0.4);
  const CVec3 eps = jones_eps(JonesVector::lcp(), d);
  const PlaneWaveDrive one{1.0, d, eps, 0.0};
  const std::vector<PlaneWaveDrive> two{one, one};
  CHECK(multi_beam_coupling(2, 1, std::span(&one, 1)) == plane_wave_coupling(2, 1, d, eps));
  CHECK(std::abs(multi_beam_coupling(2, 1, two) - 2.0 * plane_wave_coupling(2, 1, d, eps)) <
        1e-15);
  CHECK_THROWS(multi_beam_coupling(1, 0, two, {1e-7, 0, 0}));
  // Moving the atom by a wavelength along k changes nothing.
  const double k = 2 * pi / 5e-7;
  const CVec3 u = d.unit();
  const cplx moved = multi_beam_coupling(
      2, 1, two, {5e-7 * u.x.real(), 5e-7 * u.y.real(), 5e-7 * u.z.real()}, k);
  CHECK(std::abs(moved - 2.0 * plane_wave_coupling(2, 1, d, eps)) < 1e-12);
}

TEST_CASE("suppression phases") {
  CHECK(suppression_phase(1, 1, 0.0, 0.5) == doctest::Approx(pi + 0.5));
  CHECK(suppression_phase(1, 1, 0.3, 0.3) == doctest::Approx(pi));
  CHECK(suppression_phase(2, -2, 0.0, pi / 4) == doctest::Approx(pi / 2));
  // The quoted E2 value pi + pi/2 is the phase that removes delta_m = +2.
  CHECK(suppression_phase(2, 2, 0.0, pi / 4) == doctest::Approx(pi + pi / 2));
  CHECK_THROWS(suppression_phase(1, 2, 0.0, 1.0));

  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> base(0.0, 2 * pi), gap(0.3, pi - 0.3),
      gap2(0.3, pi / 2 - 0.3);
  for (int i = 0; i < 40; ++i) {
    const int K = 1 + i % 2;
    const int kill = (i / 2) % 2 ? K : -K;
    const double phi1 = base(rng), phi2 = phi1 + (K == 1 ? gap(rng) : gap2(rng));
    const SphDirection d1(pi / 2, phi1), d2(pi / 2, phi2);
    const std::vector<PlaneWaveDrive> drives{
        {1.0, d1, jones_eps(JonesVector::phi_hat(), d1), 0.0},
        {1.0, d2, jones_eps(JonesVector::phi_hat(), d2), suppression_phase(K, kill, phi1, phi2)}};
    CHECK(std::abs(multi_beam_coupling(K, kill, drives)) < 1e-12);
    const double single = std::abs(plane_wave_coupling(K, -kill, d1, drives[0].eps));
    CHECK(std::abs(multi_beam_coupling(K, -kill, drives)) > 0.1 * single);
  }
}

TEST_CASE("selectivity") {
  const SphDirection side(pi / 2, 0.0), up(0.0, 0.0);
  CHECK(selectivity(1, 0, side, jones_eps(JonesVector::theta_hat(), side)) < 1e-15);
  CHECK(selectivity(1, 1, up, jones_eps(JonesVector::lcp(), up)) < 1e-15);
  const double s = selectivity(2, 2, side, jones_eps(JonesVector::phi_hat(), side));
  const double leak = std::abs(plane_wave_coupling(2, -2, side, jones_eps(JonesVector::phi_hat(), side)));
  CHECK(leak > 0.1);
  CHECK(s >= leak);
  // Selectivity plus the wanted term is the total over all components.
  std::mt19937_64 rng(56);
  for (int i = 0; i < 20; ++i) {
    const auto d = testsupport::random_direction(rng);
    const CVec3 eps = jones_eps({testsupport::random_complex(rng), 0.7}, d);
    double total = 0.0;
    for (int p = -2; p <= 2; ++p) total += std::abs(plane_wave_coupling(2, p, d, eps));
    CHECK(selectivity(2, 1, d, eps) + std::abs(plane_wave_coupling(2, 1, d, eps)) ==
          doctest::Approx(total).epsilon(1e-14));
  }
}

TEST_CASE("geometry optimizer") {
  const auto pi_line = optimize_geometry(1, 0, Objective::MaxCoupling);
  CHECK(pi_line.found);
  CHECK(pi_line.k_dir.theta() == doctest::Approx(pi / 2).epsilon(1e-7));
  CHECK(std::abs(pi_line.jones.jx) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(pi_line.value == doctest::Approx(std::sqrt(3 / (8 * pi))).epsilon(1e-12));

  const auto sigma = optimize_geometry(1, 1, Objective::MaxCoupling);
  CHECK(std::min(sigma.k_dir.theta(), pi - sigma.k_dir.theta()) < 1e-6);
  CHECK(sigma.value == doctest::Approx(std::sqrt(3 / (8 * pi))).epsilon(1e-12));
  CHECK(std::abs(std::abs(sigma.jones.jx) - std::abs(sigma.jones.jy)) < 1e-6);

  const auto pure = optimize_geometry(1, 0, Objective::MaxCouplingZeroSelectivity);
  CHECK(pure.found);
  CHECK(pure.selectivity < 1e-8);

  const auto e2 = optimize_geometry(2, 2, Objective::MaxCoupling);
  CHECK(e2.k_dir.theta() == doctest::Approx(pi / 2).epsilon(1e-7));
  CHECK(std::abs(e2.jones.jy) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(e2.selectivity > 0.1);
  CHECK(e2.value == doctest::Approx(std::sqrt(5 / (16 * pi))).epsilon(1e-10));

  CHECK_FALSE(optimize_geometry(2, 2, Objective::MaxCouplingZeroSelectivity).found);

  const auto serial = optimize_geometry(2, 1, Objective::MaxCoupling, Exec::Serial);
  const auto parallel = optimize_geometry(2, 1, Objective::MaxCoupling, Exec::Parallel);
  CHECK(serial.value == parallel.value);
  CHECK(serial.k_dir == parallel.k_dir);
  CHECK_THROWS(parse_objective("fastest"));
  CHECK(parse_objective(objective_name(Objective::MaxCouplingZeroSelectivity)) ==
        Objective::MaxCouplingZeroSelectivity);
}

} // TEST_SUITE
