#include "mpgeom/beams.hpp"

#include "mpgeom/constants.hpp"
#include "mpgeom/coupling.hpp"
#include "mpgeom/frames.hpp"
#include "mpgeom/quadrature.hpp"
#include "mpgeom/vsh.hpp"

#include <cmath>
#include <string>

namespace mpg {

namespace {

template <class... Fs> struct overloaded : Fs... { using Fs::operator()...; };
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

cplx minus_i_pow(int n) {
  static const cplx powers[4] = {1.0, -I, -1.0, I};
  return powers[((n % 4) + 4) % 4];
}

double factorial_d(int n) { return std::tgamma(n + 1.0); }

// u~(k) e^{k^2 w0^2 / 4}: the polynomial and winding part of the transform,
// without offset phase.
cplx reduced_profile(const ScalarMode &mode, double w0, double kx, double ky) {
  const double half_w0sq = 0.5 * w0 * w0;
  return std::visit(
      overloaded{
          [&](const PlaneWave &) -> cplx {
            throw std::invalid_argument("plane waves have no transverse profile");
          },
          [&](const HermiteGauss &hg) -> cplx {
            const double s = w0 / std::sqrt(2.0);
            return half_w0sq * minus_i_pow(hg.m + hg.n) *
                   std::hermite(static_cast<unsigned>(hg.m), kx * s) *
                   std::hermite(static_cast<unsigned>(hg.n), ky * s);
          },
          [&](const LaguerreGauss &lg) -> cplx {
            const int al = std::abs(lg.l);
            const double kperp = std::hypot(kx, ky);
            const double t = kperp * w0 / std::sqrt(2.0);
            cplx winding = 1.0;
            if (lg.l != 0) winding = std::polar(1.0, lg.l * std::atan2(ky, kx));
            return half_w0sq * minus_i_pow(2 * lg.n + al) * std::pow(t, al) *
                   std::assoc_laguerre(static_cast<unsigned>(lg.n),
                                       static_cast<unsigned>(al), t * t) *
                   winding;
          }},
      mode);
}

// Real-space transverse profile at waist w, without Gouy and curvature terms.
cplx real_profile(const ScalarMode &mode, double w, double x, double y) {
  const double rho_sq = x * x + y * y;
  const double envelope = std::exp(-rho_sq / (w * w));
  return std::visit(
      overloaded{
          [&](const PlaneWave &) -> cplx { return 1.0; },
          [&](const HermiteGauss &hg) -> cplx {
            const double s = std::sqrt(2.0) / w;
            return std::hermite(static_cast<unsigned>(hg.m), s * x) *
                   std::hermite(static_cast<unsigned>(hg.n), s * y) * envelope;
          },
          [&](const LaguerreGauss &lg) -> cplx {
            const int al = std::abs(lg.l);
            const double t = 2.0 * rho_sq / (w * w);
            cplx winding = 1.0;
            if (lg.l != 0) winding = std::polar(1.0, lg.l * std::atan2(y, x));
            return std::pow(std::sqrt(t), al) *
                   std::assoc_laguerre(static_cast<unsigned>(lg.n),
                                       static_cast<unsigned>(al), t) *
                   envelope * winding;
          }},
      mode);
}

int scalar_gouy_order(const ScalarMode &mode) {
  return std::visit(overloaded{[](const PlaneWave &) { return 1; },
                               [](const HermiteGauss &hg) { return hg.m + hg.n + 1; },
                               [](const LaguerreGauss &lg) {
                                 return 2 * lg.n + std::abs(lg.l) + 1;
                               }},
                    mode);
}

struct Term {
  CVec3 eps;
  ScalarMode mode;
};

std::vector<Term> expand_terms(const BeamSpec &spec, const HelicityFrame &frame) {
  std::vector<Term> out;
  std::visit(overloaded{[&](const VectorMode &v) {
                          for (const auto &t : v.terms)
                            out.push_back({jones_to_cvec(t.jones, frame), t.mode});
                        },
                        [&](const auto &scalar) {
                          out.push_back({jones_to_cvec(spec.jones, frame), scalar});
                        }},
             spec.mode);
  return out;
}

bool is_plane_wave(const ScalarMode &m) { return std::holds_alternative<PlaneWave>(m); }

CVec3 real_vec(double x, double y, double z) { return {x, y, z}; }

// Sum over (radial x azimuthal) nodes of one scalar term for a fixed rule.
cplx integrate_term(const Term &term, const BeamSpec &spec, const HelicityFrame &frame,
                    int K, int delta_m, int n_rad, int n_az, const BeamIntegralOptions &opts) {
  const QuadratureRule &rule = gauss_laguerre(n_rad);
  const double w0 = spec.w0, k = spec.k_mag;
  const std::size_t total = static_cast<std::size_t>(n_rad) * n_az;
  std::vector<cplx> values(total);
  const double ex[3] = {frame.e_xp.x.real(), frame.e_xp.y.real(), frame.e_xp.z.real()};
  const double ey[3] = {frame.e_yp.x.real(), frame.e_yp.y.real(), frame.e_yp.z.real()};
  const double ez[3] = {frame.e_zero.x.real(), frame.e_zero.y.real(),
                        frame.e_zero.z.real()};

  auto node = [&](std::size_t idx) -> cplx {
    const int i = static_cast<int>(idx / static_cast<std::size_t>(n_az));
    const int j = static_cast<int>(idx % static_cast<std::size_t>(n_az));
    const double w = rule.weights[static_cast<std::size_t>(i)];
    if (w == 0.0) return 0.0;
    const double x = rule.nodes[static_cast<std::size_t>(i)];
    const double kperp = 2.0 * std::sqrt(x) / w0;
    if (kperp >= k) return 0.0; // evanescent
    const double az = 2.0 * pi * j / n_az;
    const double kx = kperp * std::cos(az), ky = kperp * std::sin(az);
    const double kz = std::sqrt(k * k - kperp * kperp);
    const double lx = (kx * ex[0] + ky * ey[0] + kz * ez[0]) / k;
    const double ly = (kx * ex[1] + ky * ey[1] + kz * ez[1]) / k;
    const double lz = (kx * ex[2] + ky * ey[2] + kz * ez[2]) / k;
    const HelicityFrame lf = helicity_frame(SphDirection::from_vector(lx, ly, lz));
    CVec3 eps = term.eps;
    if (opts.reproject_polarization) {
      const CVec3 lhat = real_vec(lx, ly, lz);
      const double before = eps.norm();
      eps -= bilinear_dot(lhat, eps) * lhat;
      const double after = eps.norm();
      if (after > 0.0) eps *= before / after;
    }
    const cplx dot = bilinear_dot(eps, vsh_plus1_value(K, -delta_m, lf));
    cplx profile = reduced_profile(term.mode, w0, kx, ky);
    if (spec.offset[0] != 0.0 || spec.offset[1] != 0.0)
      profile *= std::polar(1.0, -(kx * spec.offset[0] + ky * spec.offset[1]));
    return w * dot * profile;
  };

  if (opts.exec == Exec::Parallel) {
    const long long n = static_cast<long long>(total);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < n; ++idx)
      values[static_cast<std::size_t>(idx)] = node(static_cast<std::size_t>(idx));
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) values[idx] = node(idx);
  }
  // (1/2 pi) (2/w0^2) (2 pi / n_az) sum w_i g_ij
  return pairwise_sum(values) * (2.0 / (w0 * w0 * n_az));
}

} // namespace

VectorMode VectorMode::radial_donut() {
  const double h = 1.0 / std::sqrt(2.0);
  return VectorMode{{VectorTerm{JonesVector{h, 0.0}, HermiteGauss{1, 0}},
                     VectorTerm{JonesVector{0.0, h}, HermiteGauss{0, 1}}}};
}

void check_supported(const ScalarMode &mode) {
  std::visit(overloaded{[](const PlaneWave &) {},
                        [](const HermiteGauss &hg) {
                          if (hg.m < 0 || hg.n < 0 || hg.m + hg.n > 4)
                            throw UnsupportedModeError(
                                "Hermite-Gauss orders need m, n >= 0 and m + n <= 4");
                        },
                        [](const LaguerreGauss &lg) {
                          if (lg.n < 0 || lg.n > 2 || std::abs(lg.l) > 3)
                            throw UnsupportedModeError(
                                "Laguerre-Gauss orders need 0 <= n <= 2 and |l| <= 3");
                        }},
             mode);
}

void BeamSpec::validate() const {
  if (!(w0 > 0.0) || !std::isfinite(w0)) throw std::invalid_argument("w0 must be > 0");
  if (!(k_mag > 0.0) || !std::isfinite(k_mag))
    throw std::invalid_argument("wavenumber must be > 0");
  if (!(amplitude_E0 >= 0.0)) throw std::invalid_argument("E0 must be >= 0");
  if (const auto *v = std::get_if<VectorMode>(&mode)) {
    if (v->terms.empty()) throw std::invalid_argument("vector mode has no terms");
    double total = 0.0;
    for (const auto &t : v->terms) {
      if (is_plane_wave(t.mode))
        throw UnsupportedModeError("vector-mode terms must be HG or LG modes");
      check_supported(t.mode);
      total += std::norm(t.jones.jx) + std::norm(t.jones.jy);
    }
    if (std::abs(total - 1.0) > 1e-9)
      throw std::invalid_argument("vector-mode weights must have unit total norm");
  } else {
    std::visit(overloaded{[](const VectorMode &) {},
                          [](const auto &s) { check_supported(ScalarMode{s}); }},
               mode);
  }
  if (!std::holds_alternative<PlaneWave>(mode) && !(k_mag * w0 > 2.0))
    throw std::invalid_argument("k w0 must exceed 2 for the paraxial model");
}

bool BeamSpec::paraxial_warning() const {
  return !std::holds_alternative<PlaneWave>(mode) && k_mag * w0 < 10.0;
}

cplx fourier_profile(const BeamSpec &spec, std::array<double, 2> k_perp) {
  ScalarMode scalar;
  std::visit(overloaded{[](const VectorMode &) {
                          throw std::invalid_argument(
                              "fourier_profile needs a scalar mode");
                        },
                        [](const PlaneWave &) {
                          throw std::invalid_argument(
                              "plane waves have no transverse profile");
                        },
                        [&](const auto &s) { scalar = s; }},
             spec.mode);
  check_supported(scalar);
  const auto [kx, ky] = k_perp;
  const double x = 0.25 * (kx * kx + ky * ky) * spec.w0 * spec.w0;
  cplx value = reduced_profile(scalar, spec.w0, kx, ky) * std::exp(-x);
  if (spec.offset[0] != 0.0 || spec.offset[1] != 0.0)
    value *= std::polar(1.0, -(kx * spec.offset[0] + ky * spec.offset[1]));
  return value;
}

BeamIntegral beam_coupling_integral_detail(const BeamSpec &spec, int K, int delta_m,
                                           const BeamIntegralOptions &opts) {
  if (std::abs(delta_m) > K) throw std::invalid_argument("|delta_m| must not exceed K");
  spec.validate();
  const HelicityFrame frame = helicity_frame(spec.k_dir);
  if (std::holds_alternative<PlaneWave>(spec.mode)) {
    const CVec3 eps = jones_to_cvec(spec.jones, frame);
    return {plane_wave_coupling(K, delta_m, spec.k_dir, eps), 0.0, 0, 0};
  }
  const std::vector<Term> terms = expand_terms(spec, frame);
  for (const auto &t : terms) require_transverse(frame.e_zero, t.eps);

  auto evaluate = [&](int n_rad, int n_az) {
    cplx sum = 0.0;
    for (const auto &t : terms)
      sum += integrate_term(t, spec, frame, K, delta_m, n_rad, n_az, opts);
    return sum;
  };

  const double floor = 1e-13 * std::sqrt((2.0 * K + 1.0) / (8.0 * pi));
  int n_rad = opts.radial_nodes, n_az = opts.azimuthal_nodes;
  cplx prev = evaluate(n_rad, n_az);
  double change = INFINITY;
  while (n_rad < opts.max_radial_nodes || n_az < opts.max_azimuthal_nodes) {
    n_rad = std::min(2 * n_rad, opts.max_radial_nodes);
    n_az = std::min(2 * n_az, opts.max_azimuthal_nodes);
    const cplx cur = evaluate(n_rad, n_az);
    const double diff = std::abs(cur - prev);
    change = diff / std::max(std::abs(cur), floor);
    prev = cur;
    if (diff <= floor || change < opts.rel_tol) return {cur, change, n_rad, n_az};
  }
  throw ConvergenceError("beam-coupling quadrature did not reach relative tolerance " +
                             std::to_string(opts.rel_tol) + " (achieved " +
                             std::to_string(change) + ")",
                         change);
}

cplx beam_coupling_integral(const BeamSpec &spec, int K, int delta_m,
                            const BeamIntegralOptions &opts) {
  return beam_coupling_integral_detail(spec, K, delta_m, opts).value;
}

int gouy_order(const BeamMode &mode) {
  return std::visit(overloaded{[](const VectorMode &v) {
                                 if (v.terms.empty())
                                   throw std::invalid_argument("empty vector mode");
                                 const int mu = scalar_gouy_order(v.terms.front().mode);
                                 for (const auto &t : v.terms)
                                   if (scalar_gouy_order(t.mode) != mu)
                                     throw std::invalid_argument(
                                         "vector-mode terms have different Gouy orders");
                                 return mu;
                               },
                               [](const auto &s) { return scalar_gouy_order(s); }},
                    mode);
}

GouyCorrection gouy_correction(int K, const BeamMode &mode, double k_mag, double w0) {
  GouyCorrection g;
  g.mu = gouy_order(mode);
  if (std::holds_alternative<PlaneWave>(mode)) return g;
  const double kw = k_mag * w0;
  g.factor = 1.0 - 2.0 * g.mu * (K - 1) / (kw * kw);
  return g;
}

double gouy_phase(const BeamMode &mode, double z, double k_mag, double w0) {
  if (std::holds_alternative<PlaneWave>(mode)) return 0.0;
  return gouy_order(mode) * std::atan(2.0 * z / (k_mag * w0 * w0));
}

double beam_waist(double z, double k_mag, double w0) {
  const double zr = 0.5 * k_mag * w0 * w0;
  return w0 * std::sqrt(1.0 + (z / zr) * (z / zr));
}

CVec3 beam_field(const BeamSpec &spec, const std::array<double, 3> &r, double t) {
  spec.validate();
  const HelicityFrame frame = helicity_frame(spec.k_dir);
  const CVec3 pos{r[0], r[1], r[2]};
  const double xp = bilinear_dot(pos, frame.e_xp).real() - spec.offset[0];
  const double yp = bilinear_dot(pos, frame.e_yp).real() - spec.offset[1];
  const double zp = bilinear_dot(pos, frame.e_zero).real();
  const double k = spec.k_mag;
  const double omega = constants::speed_of_light * k;
  const cplx carrier = std::polar(spec.amplitude_E0, k * zp - omega * t + spec.phase);

  CVec3 field;
  if (std::holds_alternative<PlaneWave>(spec.mode)) {
    field = carrier * jones_to_cvec(spec.jones, frame);
  } else {
    const double w0 = spec.w0;
    const double w = beam_waist(zp, k, w0);
    const double zr = 0.5 * k * w0 * w0;
    const double inv_R = zp / (zp * zp + zr * zr);
    const double rho_sq = xp * xp + yp * yp;
    const cplx curvature = std::polar(1.0, 0.5 * k * rho_sq * inv_R);
    const double arg_g = std::atan(zp / zr);
    for (const auto &term : expand_terms(spec, frame)) {
      const int mu = scalar_gouy_order(term.mode);
      const cplx envelope = (w0 / w) * real_profile(term.mode, w, xp, yp) * curvature *
                            std::polar(1.0, -mu * arg_g);
      field += (carrier * envelope) * term.eps;
    }
  }
  return {field.x.real(), field.y.real(), field.z.real()};
}

double profile_norm_analytic(const ScalarMode &mode, double w0) {
  check_supported(mode);
  const double base = 0.5 * w0 * w0 * pi;
  return std::visit(
      overloaded{[](const PlaneWave &) -> double {
                   throw std::invalid_argument("plane waves are not normalizable");
                 },
                 [&](const HermiteGauss &hg) {
                   return base * std::ldexp(1.0, hg.m + hg.n) * factorial_d(hg.m) *
                          factorial_d(hg.n);
                 },
                 [&](const LaguerreGauss &lg) {
                   return base * factorial_d(lg.n + std::abs(lg.l)) / factorial_d(lg.n);
                 }},
      mode);
}

double profile_norm_quadrature(const ScalarMode &mode, double w0, int radial_nodes,
                               int azimuthal_nodes) {
  check_supported(mode);
  if (is_plane_wave(mode)) throw std::invalid_argument("plane waves are not normalizable");
  // |u~|^2 carries e^{-2x} with x = k^2 w0^2 / 4; substitute y = 2x.
  const QuadratureRule &rule = gauss_laguerre(radial_nodes);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(radial_nodes) * azimuthal_nodes);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = 0.5 * rule.nodes[i];
    const double kperp = 2.0 * std::sqrt(x) / w0;
    for (int j = 0; j < azimuthal_nodes; ++j) {
      const double az = 2.0 * pi * j / azimuthal_nodes;
      const cplx u = reduced_profile(mode, w0, kperp * std::cos(az), kperp * std::sin(az));
      values.push_back(rule.weights[i] * std::norm(u));
    }
  }
  // d^2k = (2 / w0^2) dx dphi = (1 / w0^2) dy dphi
  return pairwise_sum(values) * (2.0 * pi / azimuthal_nodes) / (w0 * w0);
}

} // namespace mpg
