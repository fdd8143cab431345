#pragma once

#include "mpgeom/cvec.hpp"
#include "mpgeom/exact.hpp"
#include "mpgeom/halfint.hpp"

#include <array>
#include <optional>
#include <span>

namespace mpg {

enum class Character { Electric, Magnetic };

struct HyperfineLevels {
  HalfInt I, F_e, F_g;
  bool operator==(const HyperfineLevels &) const = default;
};

//! Upper/lower levels and strength of one 2^K-pole line. With hyperfine
//! levels present, M_e and M_g are projections of F rather than J.
struct TransitionSpec {
  int K = 1;
  Character character = Character::Electric;
  HalfInt J_e, J_g, M_e, M_g;
  std::optional<HyperfineLevels> hyperfine;
  double einstein_A = 0.0; // 1/s
  double omega = 1.0;      // rad/s
  int s_J_sign = 1;

  // Throws std::invalid_argument. The K-triangle is only enforced when
  // require_allowed is set; evaluation treats it as a zero, not an error.
  void validate(bool require_allowed = false) const;
  bool operator==(const TransitionSpec &) const = default;
};

struct PlaneWaveDrive {
  double amplitude_E0 = 1.0; // V/m
  SphDirection k_dir;
  CVec3 eps;
  double phase = 0.0;
};

struct CouplingResult {
  cplx geometric_amplitude;
  cplx rabi; // rad/s
};

//! K-dependent numeric coefficients. The square-rooted ones are also given
//! exactly as sqrt(pi * radicand_over_pi).
struct MultipolePrefactors {
  double hamiltonian_factor = 0.0;
  double einstein_factor = 0.0;
  double identity_factor = 0.0;
  Rational hamiltonian_radicand_over_pi;
  Rational einstein_exact;
  Rational identity_radicand_over_pi;
};

MultipolePrefactors multipole_prefactors(int K);

// |<J_e||T^(K)||J_g>| from the Einstein A coefficient. Electric lines give
// the value divided by e, in m^K; magnetic lines give the moment in
// J/T m^(K-1). Throws for omega <= 0.
double reduced_matrix_element_from_A(const TransitionSpec &spec);
// Inverse of the above, used for round-trip checks.
double einstein_A_from_reduced(const TransitionSpec &spec, double reduced);

// eps . Y^(+1)_{K,-delta_m}(k). Throws PolarizationError for non-transverse eps.
cplx plane_wave_coupling(int K, int delta_m, const SphDirection &k_dir,
                         const CVec3 &eps);

// s_J = i^(K-1) * s_J_sign.
cplx s_J(const TransitionSpec &spec);

// Rabi frequency in rad/s for field amplitude E0 (or c B0 for magnetic lines,
// with the caller supplying the beta-based geometric amplitude).
cplx rabi_frequency(const TransitionSpec &spec, cplx geometric_amplitude,
                    double amplitude_E0);
// Hyperfine-resolved form; spec.hyperfine must be set. Throws when the
// nuclear spin is inconsistent with (J_e, F_e) or (J_g, F_g).
cplx rabi_frequency_hyperfine(const TransitionSpec &spec,
                              cplx geometric_amplitude, double amplitude_E0);
// Dispatches on spec.hyperfine.
cplx rabi_for(const TransitionSpec &spec, cplx geometric_amplitude,
              double amplitude_E0);

// Coherent sum of E0_i (eps_i . Y)(k_i) exp(i (k_i . r + phase_i)).
// wavenumber (rad/m) is only needed for r != 0.
cplx multi_beam_coupling(int K, int delta_m, std::span<const PlaneWaveDrive> drives,
                         const std::array<double, 3> &atom_position = {0, 0, 0},
                         double wavenumber = 0.0);

// Phase of beam 2 that cancels the delta_m = p_kill coupling for two in-plane
// phi-hat polarised beams with azimuths phi_k1, phi_k2. Result in [0, 2 pi).
double suppression_phase(int K, int p_kill, double phi_k1, double phi_k2);

// Sum over p != delta_m of |eps . Y^(+1)_{K,-p}(k)|.
double selectivity(int K, int delta_m, const SphDirection &k_dir, const CVec3 &eps);

} // namespace mpg
