#include "mpgeom/coupling.hpp"

#include "mpgeom/constants.hpp"
#include "mpgeom/frames.hpp"
#include "mpgeom/polarization.hpp"
#include "mpgeom/vsh.hpp"
#include "mpgeom/wigner.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mpg {

namespace {

double pow_int(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// sqrt(2 pi A (2J_e+1) / (alpha c) (c/omega)^3), the field-independent part of
// the Rabi frequency per unit e E0 / hbar.
double strength_factor(const TransitionSpec &spec) {
  using namespace constants;
  const double c_over_w = speed_of_light / spec.omega;
  return std::sqrt(2.0 * pi * spec.einstein_A * (spec.J_e.twice() + 1.0) /
                   (fine_structure * speed_of_light) * pow_int(c_over_w, 3));
}

} // namespace

void TransitionSpec::validate(bool require_allowed) const {
  if (K < 1) throw std::invalid_argument("multipole rank K must be >= 1");
  if (J_e.twice() < 0 || J_g.twice() < 0)
    throw std::invalid_argument("J_e and J_g must be non-negative");
  if (!(einstein_A >= 0.0) || !std::isfinite(einstein_A))
    throw std::invalid_argument("Einstein A must be finite and >= 0");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("omega must be finite and > 0");
  if (s_J_sign != 1 && s_J_sign != -1)
    throw std::invalid_argument("s_J sign must be +1 or -1");
  const HalfInt k = HalfInt::from_int(K);
  if (hyperfine) {
    const auto &h = *hyperfine;
    if (h.I.twice() < 0) throw std::invalid_argument("nuclear spin I must be >= 0");
    if (!triangle(J_e, h.I, h.F_e))
      throw std::invalid_argument("F_e inconsistent with J_e and I");
    if (!triangle(J_g, h.I, h.F_g))
      throw std::invalid_argument("F_g inconsistent with J_g and I");
    if (!valid_projection(h.F_e, M_e) || !valid_projection(h.F_g, M_g))
      throw std::invalid_argument("M_e/M_g must be valid projections of F_e/F_g");
    if (require_allowed && !triangle(h.F_e, k, h.F_g))
      throw std::invalid_argument("triangle(F_e, K, F_g) violated");
  } else {
    if (!valid_projection(J_e, M_e) || !valid_projection(J_g, M_g))
      throw std::invalid_argument("M_e/M_g must be valid projections of J_e/J_g");
  }
  if (require_allowed && !triangle(J_e, k, J_g))
    throw std::invalid_argument("triangle(J_e, K, J_g) violated");
}

MultipolePrefactors multipole_prefactors(int K) {
  if (K < 1) throw std::invalid_argument("prefactors need K >= 1");
  MultipolePrefactors m;
  const BigInt df_lo = double_factorial_odd(2 * K - 1);
  const BigInt df_hi = double_factorial_odd(2 * K + 1);
  m.hamiltonian_radicand_over_pi = Rational(BigInt(4 * (K + 1)), BigInt(K) * df_hi * df_lo);
  m.einstein_exact = Rational(BigInt(2 * (K + 1)), BigInt(K) * df_lo * df_hi);
  m.identity_radicand_over_pi =
      Rational(factorial(static_cast<unsigned>(K - 1)) * (K + 1) * 4, df_hi);
  m.hamiltonian_factor =
      std::sqrt(pi * m.hamiltonian_radicand_over_pi.convert_to<double>());
  m.einstein_factor = m.einstein_exact.convert_to<double>();
  m.identity_factor = std::sqrt(pi * m.identity_radicand_over_pi.convert_to<double>());
  return m;
}

double reduced_matrix_element_from_A(const TransitionSpec &spec) {
  if (!(spec.omega > 0.0)) throw std::invalid_argument("omega must be > 0");
  using namespace constants;
  const int K = spec.K;
  const double einstein = multipole_prefactors(K).einstein_factor;
  const double electric =
      std::sqrt(spec.einstein_A / (fine_structure * speed_of_light) *
                (spec.J_e.twice() + 1.0) *
                pow_int(speed_of_light / spec.omega, 2 * K + 1) / einstein);
  if (spec.character == Character::Electric) return electric;
  return elementary_charge * speed_of_light * electric;
}

double einstein_A_from_reduced(const TransitionSpec &spec, double reduced) {
  if (!(spec.omega > 0.0)) throw std::invalid_argument("omega must be > 0");
  using namespace constants;
  const int K = spec.K;
  double e_form = reduced;
  if (spec.character == Character::Magnetic)
    e_form = reduced / (elementary_charge * speed_of_light);
  return multipole_prefactors(K).einstein_factor *
         pow_int(spec.omega / speed_of_light, 2 * K + 1) * fine_structure *
         speed_of_light * e_form * e_form / (spec.J_e.twice() + 1.0);
}

cplx plane_wave_coupling(int K, int delta_m, const SphDirection &k_dir,
                         const CVec3 &eps) {
  if (std::abs(delta_m) > K)
    throw std::invalid_argument("|delta_m| must not exceed K");
  const HelicityFrame f = helicity_frame(k_dir);
  require_transverse(f.e_zero, eps);
  return bilinear_dot(eps, vsh_plus1_value(K, -delta_m, f));
}

cplx s_J(const TransitionSpec &spec) {
  static const cplx powers[4] = {1.0, I, -1.0, -I};
  return powers[(spec.K - 1) % 4] * static_cast<double>(spec.s_J_sign);
}

cplx rabi_frequency(const TransitionSpec &spec, cplx geometric_amplitude,
                    double amplitude_E0) {
  spec.validate();
  const HalfInt p = spec.M_e - spec.M_g;
  const double w3 = wigner3j(spec.J_e, HalfInt::from_int(spec.K), spec.J_g,
                             -spec.M_e, p, spec.M_g);
  if (w3 == 0.0) return 0.0;
  using namespace constants;
  const double field = elementary_charge * amplitude_E0 / hbar;
  const int phase = parity_sign(spec.J_e - spec.M_g);
  return s_J(spec) * static_cast<double>(phase) * field * strength_factor(spec) *
         w3 * geometric_amplitude;
}

cplx rabi_frequency_hyperfine(const TransitionSpec &spec,
                              cplx geometric_amplitude, double amplitude_E0) {
  if (!spec.hyperfine)
    throw std::invalid_argument("hyperfine Rabi frequency needs I, F_e, F_g");
  spec.validate();
  const auto &h = *spec.hyperfine;
  const HalfInt k = HalfInt::from_int(spec.K);
  const HalfInt p = spec.M_e - spec.M_g;
  const double w3 = wigner3j(h.F_e, k, h.F_g, -spec.M_e, p, spec.M_g);
  if (w3 == 0.0) return 0.0;
  const double w6 = wigner6j(spec.J_e, h.F_e, h.I, h.F_g, spec.J_g, k);
  if (w6 == 0.0) return 0.0;
  using namespace constants;
  const double field = elementary_charge * amplitude_E0 / hbar;
  const int phase = parity_sign(h.F_e - spec.M_g) *
                    parity_sign(spec.J_e + h.I + h.F_g + k);
  const double dims = std::sqrt((h.F_g.twice() + 1.0) * (h.F_e.twice() + 1.0));
  return s_J(spec) * static_cast<double>(phase) * field * strength_factor(spec) *
         w3 * dims * w6 * geometric_amplitude;
}

cplx rabi_for(const TransitionSpec &spec, cplx geometric_amplitude,
              double amplitude_E0) {
  return spec.hyperfine
             ? rabi_frequency_hyperfine(spec, geometric_amplitude, amplitude_E0)
             : rabi_frequency(spec, geometric_amplitude, amplitude_E0);
}

cplx multi_beam_coupling(int K, int delta_m, std::span<const PlaneWaveDrive> drives,
                         const std::array<double, 3> &atom_position,
                         double wavenumber) {
  if (drives.empty()) throw std::invalid_argument("multi_beam_coupling: no drives");
  const bool displaced =
      atom_position[0] != 0.0 || atom_position[1] != 0.0 || atom_position[2] != 0.0;
  if (displaced && !(wavenumber > 0.0))
    throw std::invalid_argument("a displaced atom needs a positive wavenumber");
  cplx sum = 0.0;
  for (const auto &d : drives) {
    const CVec3 k = d.k_dir.unit();
    const double k_dot_r =
        displaced ? wavenumber * (k.x.real() * atom_position[0] +
                                  k.y.real() * atom_position[1] +
                                  k.z.real() * atom_position[2])
                  : 0.0;
    sum += d.amplitude_E0 * plane_wave_coupling(K, delta_m, d.k_dir, d.eps) *
           std::polar(1.0, k_dot_r + d.phase);
  }
  return sum;
}

double suppression_phase(int K, int p_kill, double phi_k1, double phi_k2) {
  if (std::abs(p_kill) > K)
    throw std::invalid_argument("|p_kill| must not exceed K");
  // The coupling to delta_m = p carries exp(-i p phi_k), so the two terms
  // cancel when phi_2 - p (phi_k2 - phi_k1) = pi.
  double phase = std::fmod(pi + p_kill * (phi_k2 - phi_k1), 2.0 * pi);
  if (phase < 0.0) phase += 2.0 * pi;
  return phase;
}

double selectivity(int K, int delta_m, const SphDirection &k_dir, const CVec3 &eps) {
  if (std::abs(delta_m) > K)
    throw std::invalid_argument("|delta_m| must not exceed K");
  const HelicityFrame f = helicity_frame(k_dir);
  require_transverse(f.e_zero, eps);
  double s = 0.0;
  for (int p = -K; p <= K; ++p)
    if (p != delta_m) s += std::abs(bilinear_dot(eps, vsh_plus1_value(K, -p, f)));
  return s;
}

} // namespace mpg
