#include "doctest.h"
#include "support.hpp"

#include "mpgeom/catalog.hpp"
#include "mpgeom/polarization.hpp"

#include <cmath>

using namespace mpg;

namespace {

const CVec3 kX{1.0, 0.0, 0.0}, kY{0.0, 1.0, 0.0}, kZ{0.0, 0.0, 1.0};

// |<a|b>| = |a||b| means equal up to a global phase.
bool same_up_to_phase(cplx a0, cplx a1, cplx b0, cplx b1, double tol) {
  const double na = std::sqrt(std::norm(a0) + std::norm(a1));
  const double nb = std::sqrt(std::norm(b0) + std::norm(b1));
  if (na < tol || nb < tol) return na < tol && nb < tol;
  const cplx overlap = std::conj(a0) * b0 + std::conj(a1) * b1;
  return std::abs(std::abs(overlap) - na * nb) < tol;
}

JonesVector random_jones(std::mt19937_64 &rng) {
  const cplx a = testsupport::random_complex(rng), b = testsupport::random_complex(rng);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

} // namespace

TEST_SUITE("polarization") {

TEST_CASE("Jones vectors map to frame vectors and back") {
  const auto side = helicity_frame(SphDirection(pi / 2, 0.0));
  CHECK(max_abs_diff(jones_to_cvec({1.0, 0.0}, side), -1.0 * kZ) < 1e-15);
  CHECK(max_abs_diff(jones_to_cvec({0.0, 1.0}, side), kY) < 1e-15);
  const auto up = helicity_frame(SphDirection(0.0, 0.0));
  const JonesVector j = cvec_to_jones(kX, up);
  CHECK(std::abs(j.jx - 1.0) < 1e-15);
  CHECK(std::abs(j.jy) < 1e-15);
  CHECK_THROWS_AS(cvec_to_jones(kZ, up), PolarizationError);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto f = helicity_frame(testsupport::random_direction(rng));
    const JonesVector in = random_jones(rng);
    const CVec3 eps = jones_to_cvec(in, f);
    CHECK(std::abs(bilinear_dot(f.e_zero, eps)) < 1e-14);
    CHECK(eps.norm() == doctest::Approx(1.0).epsilon(1e-14));
    const JonesVector back = cvec_to_jones(eps, f);
    CHECK(std::abs(back.jx - in.jx) + std::abs(back.jy - in.jy) < 1e-14);
  }
}

TEST_CASE("wave plate examples") {
  const auto h = apply_waveplate({1.0, 0.0}, {PlateKind::Half, pi / 4});
  CHECK(std::abs(h.jx) < 1e-15);
  CHECK(std::abs(h.jy - 1.0) < 1e-15);

  const auto q0 = apply_waveplate({1.0, 0.0}, {PlateKind::Quarter, 0.0});
  CHECK(same_up_to_phase(q0.jx, q0.jy, 1.0, 0.0, 1e-15));

  for (double t = 0.0; t <= pi / 2 + 1e-12; t += pi / 40) {
    const auto q = apply_waveplate(JonesVector::phi_hat(), {PlateKind::Quarter, t});
    const cplx want_x = std::exp(I * (pi / 4)) * std::sin(2 * t) / std::sqrt(2.0);
    const cplx want_y = cplx(std::pow(std::sin(t), 2), -std::pow(std::cos(t), 2));
    CHECK(std::abs(q.jx - want_x) < 1e-15);
    CHECK(std::abs(q.jy - want_y) < 1e-15);
  }
  // A quarter plate at 45 degrees turns linear light circular.
  const auto c = apply_waveplate(JonesVector::phi_hat(), {PlateKind::Quarter, pi / 4});
  CHECK(std::abs(std::abs(c.jx) - std::abs(c.jy)) < 1e-15);
  CHECK(std::abs(std::arg(c.jy / c.jx)) == doctest::Approx(pi / 2));
}

TEST_CASE("wave plates are unitary and two half plates cancel") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> ang(-pi, pi);
  for (int i = 0; i < 200; ++i) {
    const JonesVector a = random_jones(rng), b = random_jones(rng);
    for (PlateKind kind : {PlateKind::Half, PlateKind::Quarter}) {
      const WavePlate plate{kind, ang(rng)};
      const JonesVector ta = apply_waveplate(a, plate), tb = apply_waveplate(b, plate);
      const cplx before = std::conj(a.jx) * b.jx + std::conj(a.jy) * b.jy;
      const cplx after = std::conj(ta.jx) * tb.jx + std::conj(ta.jy) * tb.jy;
      CHECK(std::abs(before - after) < 1e-14);
    }
    const WavePlate half{PlateKind::Half, ang(rng)};
    const JonesVector twice = apply_waveplate(apply_waveplate(a, half), half);
    CHECK(same_up_to_phase(twice.jx, twice.jy, a.jx, a.jy, 1e-14));
    // Two quarter plates at the same angle act as one half plate.
    const WavePlate quarter{PlateKind::Quarter, half.fast_axis_angle};
    const JonesVector qq = apply_waveplate(apply_waveplate(a, quarter), quarter);
    const JonesVector hh = apply_waveplate(a, half);
    CHECK(same_up_to_phase(qq.jx, qq.jy, hh.jx, hh.jy, 1e-14));
  }
}

TEST_CASE("magnetic polarization") {
  const SphDirection up(0.0, 0.0);
  CHECK(max_abs_diff(beta_vector(up, kX), kY) < 1e-15);
  CHECK(max_abs_diff(beta_vector(up, kY), -1.0 * kX) < 1e-15);
  CHECK_THROWS_AS(beta_vector(up, kZ), PolarizationError);

  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto d = testsupport::random_direction(rng);
    const auto f = helicity_frame(d);
    const JonesVector j = random_jones(rng);
    const CVec3 b = beta_vector(d, jones_to_cvec(j, f));
    // (jx, jy) -> (-jy, jx)
    CHECK(max_abs_diff(b, jones_to_cvec({-j.jy, j.jx}, f)) < 1e-14);
    // Circular light is an eigenstate up to +-i.
    const CVec3 lcp = jones_to_cvec(JonesVector::lcp(), f);
    CHECK(max_abs_diff(beta_vector(d, lcp), -I * lcp) < 1e-14);
  }
}

TEST_CASE("handedness of circular states") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 50; ++i) {
    const auto d = testsupport::random_direction(rng);
    const auto f = helicity_frame(d);
    const CVec3 l = jones_to_cvec(JonesVector::lcp(), f);
    const CVec3 r = jones_to_cvec(JonesVector::rcp(), f);
    CHECK(max_abs_diff(cross(l.conj(), l), I * d.unit()) < 1e-14);
    CHECK(max_abs_diff(cross(r.conj(), r), -I * d.unit()) < 1e-14);
    CHECK(std::abs(helicity_component(l, f, +1)) < 1e-15);
    CHECK(std::abs(helicity_component(l, f, -1) - 1.0) < 1e-14);
    CHECK(std::abs(helicity_component(r, f, +1) + 1.0) < 1e-14);
    CHECK(std::abs(helicity_component(r, f, -1)) < 1e-15);
  }
}

TEST_CASE("named polarizations") {
  const auto side = helicity_frame(SphDirection(pi / 2, 0.3));
  const auto z = named_polarization("z-hat", side);
  CHECK(std::abs(z.jx + 1.0) < 1e-15);
  CHECK(std::abs(z.jy) < 1e-15);
  CHECK(named_polarization("LCP", side) == JonesVector::lcp());
  CHECK(named_polarization("phi-hat", side) == JonesVector::phi_hat());
  CHECK_THROWS_AS(named_polarization("z-hat", helicity_frame(SphDirection(0.3, 0.0))),
                  PolarizationError);
  CHECK_THROWS(named_polarization("diagonal", side));
}

TEST_CASE("principal polarization states") {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> ang(0.0, pi);
  for (int trial = 0; trial < 20; ++trial) {
    const double gamma = ang(rng), beta = ang(rng);
    const auto k = testsupport::random_direction(rng);
    for (const auto &row : catalog::polarization_rows(gamma, beta, k.theta(), k.phi())) {
      CAPTURE(row.geometry);
      const auto f = helicity_frame(SphDirection(row.theta_k, row.phi_k));
      const JonesVector j = cvec_to_jones(row.eps, f);
      CHECK(same_up_to_phase(j.jx, j.jy, row.e_x, row.e_y, 1e-12));
      CHECK(same_up_to_phase(helicity_component(row.eps, f, +1),
                             helicity_component(row.eps, f, -1), row.e_plus, row.e_minus,
                             1e-12));
    }
  }
}

} // TEST_SUITE
