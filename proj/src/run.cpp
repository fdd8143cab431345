#include "mpgeom/run.hpp"

#include "mpgeom/constants.hpp"
#include "mpgeom/frames.hpp"
#include "mpgeom/vsh.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <vector>

namespace mpg {

namespace {

constexpr const char *kToolVersion = "1.0.0";

// k x eps for eps = jx theta-hat + jy phi-hat.
JonesVector magnetic_jones(const JonesVector &j) { return {-j.jy, j.jx}; }

BeamSpec magnetic_beam(BeamSpec b) {
  b.jones = magnetic_jones(b.jones);
  if (auto *v = std::get_if<VectorMode>(&b.mode))
    for (auto &t : v->terms) t.jones = magnetic_jones(t.jones);
  return b;
}

double setting_tolerance(const Scenario &s, const RunOptions &o) {
  return o.tolerance.value_or(s.settings.tolerance);
}

bool setting_reproject(const Scenario &s, const RunOptions &o) {
  return o.reproject_polarization.value_or(s.settings.reproject_polarization);
}

cplx drive_amplitude(const Scenario &s, const BeamSpec &beam, int p, const RunOptions &opts) {
  const int K = s.transition.K;
  if (std::abs(p) > K) return 0.0;
  const BeamSpec b =
      s.transition.character == Character::Magnetic ? magnetic_beam(beam) : beam;
  if (std::holds_alternative<PlaneWave>(b.mode)) {
    const HelicityFrame f = helicity_frame(b.k_dir);
    return plane_wave_coupling(K, p, b.k_dir, jones_to_cvec(b.jones, f));
  }
  BeamIntegralOptions bo;
  bo.rel_tol = setting_tolerance(s, opts);
  bo.reproject_polarization = setting_reproject(s, opts);
  bo.exec = opts.exec;
  cplx g = beam_coupling_integral(b, K, p, bo);
  if (s.settings.apply_gouy_correction) g *= gouy_correction(K, b.mode, b.k_mag, b.w0).factor;
  return g;
}

std::vector<Column> evaluation_columns() {
  return {{"request", CellKind::Text},      {"scan_parameter", CellKind::Text},
          {"scan_value", CellKind::Real},   {"K", CellKind::Integer},
          {"delta_m", CellKind::Integer},   {"coupling", CellKind::Complex},
          {"rabi", CellKind::Complex},      {"rabi_abs", CellKind::Real},
          {"selectivity", CellKind::Real}};
}

std::vector<Cell> evaluation_row(const std::string &request, const std::string &param,
                                 double value, int K, const Evaluation &e) {
  return {request,    param,  value,         static_cast<long long>(K),
          static_cast<long long>(e.delta_m), e.coupling, e.rabi, std::abs(e.rabi),
          e.selectivity};
}

std::string request_label(RequestKind k) {
  switch (k) {
  case RequestKind::Rabi: return "rabi";
  case RequestKind::Coupling: return "coupling";
  case RequestKind::Selectivity: return "selectivity";
  case RequestKind::Scan: return "scan";
  case RequestKind::VshGrid: return "vsh_grid";
  case RequestKind::Optimize: return "optimize";
  }
  return "?";
}

// Re-raises the current exception with the request context prepended,
// keeping the category that decides the CLI exit code.
[[noreturn]] void rethrow_with_context(const std::string &context) {
  try {
    throw;
  } catch (const ConvergenceError &e) {
    throw ConvergenceError(context + ": " + e.what(), e.achieved());
  } catch (const ScenarioError &e) {
    throw ScenarioError(e.path(), e.line(), context + ": " + e.message());
  } catch (const std::exception &e) {
    throw std::runtime_error(context + ": " + e.what());
  }
}

void add_metadata(ResultTable &t, const Scenario &s, Verb verb, const RunOptions &opts) {
  t.set_metadata("tool", "mpgeom");
  t.set_metadata("tool_version", kToolVersion);
  t.set_metadata("constants", constants::kVersion);
  t.set_metadata("verb", verb_name(verb));
  t.set_metadata("quadrature_tolerance", format_real(setting_tolerance(s, opts)));
  t.set_metadata("reproject_polarization", setting_reproject(s, opts) ? "true" : "false");
  t.set_metadata("apply_gouy_correction", s.settings.apply_gouy_correction ? "true" : "false");
}

void run_scan(const Scenario &s, const ScanRequest &scan, const RunOptions &opts,
              ResultTable &table, std::size_t request_index) {
  const std::string context = "outputs[" + std::to_string(request_index) + "] scan";
  const int n = scan.steps + 1;
  std::vector<double> values(static_cast<std::size_t>(n));
  std::vector<Scenario> points;
  points.reserve(values.size());
  for (int j = 0; j < n; ++j) {
    values[static_cast<std::size_t>(j)] =
        j == scan.steps ? scan.to : scan.from + (scan.to - scan.from) * j / scan.steps;
    try {
      points.push_back(with_parameter(s, scan.parameter, values[static_cast<std::size_t>(j)]));
    } catch (...) {
      rethrow_with_context(context + " point " + std::to_string(j));
    }
  }
  std::vector<Evaluation> results(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  RunOptions inner = opts;
  inner.exec = Exec::Serial;
  auto one = [&](int j) {
    const auto idx = static_cast<std::size_t>(j);
    try {
      results[idx] = evaluate(points[idx], inner);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };
  if (opts.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int j = 0; j < n; ++j) one(j);
  } else {
    for (int j = 0; j < n; ++j) one(j);
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (errors[j]) {
      try {
        std::rethrow_exception(errors[j]);
      } catch (...) {
        rethrow_with_context(context + " point " + std::to_string(j));
      }
    }
    table.add_row(evaluation_row("scan", scan.parameter, values[j], s.transition.K, results[j]));
  }
}

} // namespace

Verb parse_verb(const std::string &name) {
  if (name == "rabi") return Verb::Rabi;
  if (name == "coupling") return Verb::Coupling;
  if (name == "scan") return Verb::Scan;
  if (name == "vsh-grid") return Verb::VshGrid;
  if (name == "optimize") return Verb::Optimize;
  throw std::invalid_argument("unknown verb '" + name + "'");
}

std::string verb_name(Verb v) {
  switch (v) {
  case Verb::Rabi: return "rabi";
  case Verb::Coupling: return "coupling";
  case Verb::Scan: return "scan";
  case Verb::VshGrid: return "vsh-grid";
  case Verb::Optimize: return "optimize";
  }
  return "?";
}

Evaluation evaluate(const Scenario &s, const RunOptions &opts) {
  if (s.drives.empty()) throw std::invalid_argument("evaluation needs at least one drive");
  const TransitionSpec &t = s.transition;
  const HalfInt dm = t.M_e - t.M_g;
  if (!dm.is_integer()) throw std::invalid_argument("M_e - M_g must be an integer");
  const int K = t.K;
  const double e0_first = s.drives.front().amplitude_E0;
  const double norm = e0_first > 0.0 ? e0_first : 1.0;

  std::vector<cplx> per_p(static_cast<std::size_t>(2 * K + 1));
  for (int p = -K; p <= K; ++p) {
    cplx sum = 0.0;
    for (const auto &b : s.drives) {
      const CVec3 k = b.k_dir.unit();
      const double k_dot_r = b.k_mag * (k.x.real() * s.atom_position[0] +
                                        k.y.real() * s.atom_position[1] +
                                        k.z.real() * s.atom_position[2]);
      sum += (b.amplitude_E0 / norm) * drive_amplitude(s, b, p, opts) *
             std::polar(1.0, b.phase + k_dot_r);
    }
    per_p[static_cast<std::size_t>(p + K)] = sum;
  }

  Evaluation e;
  e.delta_m = dm.as_int();
  if (std::abs(e.delta_m) <= K) e.coupling = per_p[static_cast<std::size_t>(e.delta_m + K)];
  for (int p = -K; p <= K; ++p)
    if (p != e.delta_m) e.selectivity += std::abs(per_p[static_cast<std::size_t>(p + K)]);
  e.rabi = rabi_for(t, e.coupling, e0_first);
  return e;
}

RunOutcome run_scenario(const Scenario &s, Verb verb, const RunOptions &opts) {
  RunOutcome out;
  auto matches = [&](RequestKind k) {
    switch (verb) {
    case Verb::Rabi: return k == RequestKind::Rabi;
    case Verb::Coupling: return k == RequestKind::Coupling || k == RequestKind::Selectivity;
    case Verb::Scan: return k == RequestKind::Scan;
    case Verb::VshGrid: return k == RequestKind::VshGrid;
    case Verb::Optimize: return k == RequestKind::Optimize;
    }
    return false;
  };
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < s.outputs.size(); ++i)
    if (matches(s.outputs[i].kind)) selected.push_back(i);

  switch (verb) {
  case Verb::Rabi:
  case Verb::Coupling: {
    out.table = ResultTable(evaluation_columns());
    if (selected.empty()) selected.push_back(s.outputs.size()); // default request
    for (std::size_t i : selected) {
      const RequestKind kind = i < s.outputs.size()
                                   ? s.outputs[i].kind
                                   : (verb == Verb::Rabi ? RequestKind::Rabi : RequestKind::Coupling);
      Evaluation e;
      try {
        e = evaluate(s, opts);
      } catch (...) {
        rethrow_with_context("outputs[" + std::to_string(i) + "] " + request_label(kind));
      }
      out.table.add_row(evaluation_row(request_label(kind), "", 0.0, s.transition.K, e));
    }
    break;
  }
  case Verb::Scan:
    if (selected.empty()) throw ScenarioError("outputs", 0, "no scan request in the scenario");
    out.table = ResultTable(evaluation_columns());
    for (std::size_t i : selected) run_scan(s, s.outputs[i].scan, opts, out.table, i);
    break;
  case Verb::VshGrid:
    if (selected.empty()) throw ScenarioError("outputs", 0, "no vsh_grid request in the scenario");
    out.table = ResultTable({{"theta", CellKind::Real},
                             {"phi", CellKind::Real},
                             {"x", CellKind::Complex},
                             {"y", CellKind::Complex},
                             {"z", CellKind::Complex},
                             {"W", CellKind::Real}});
    for (std::size_t i : selected) {
      const auto &g = s.outputs[i].grid;
      for (const auto &rec : vsh_grid(g.K, g.p, g.lambda, g.n_theta, g.n_phi, opts.exec))
        out.table.add_row({rec.dir.theta(), rec.dir.phi(), rec.value.x, rec.value.y, rec.value.z,
                           rec.W});
    }
    break;
  case Verb::Optimize: {
    if (selected.empty()) throw ScenarioError("outputs", 0, "no optimize request in the scenario");
    const HalfInt dm = s.transition.M_e - s.transition.M_g;
    out.table = ResultTable({{"objective", CellKind::Text},
                             {"K", CellKind::Integer},
                             {"delta_m", CellKind::Integer},
                             {"theta_k", CellKind::Real},
                             {"phi_k", CellKind::Real},
                             {"jones_x", CellKind::Complex},
                             {"jones_y", CellKind::Complex},
                             {"value", CellKind::Real},
                             {"selectivity", CellKind::Real},
                             {"found", CellKind::Boolean}});
    for (std::size_t i : selected) {
      const Objective obj = s.outputs[i].objective;
      OptimizeResult r;
      try {
        r = optimize_geometry(s.transition.K, dm.as_int(), obj, opts.exec);
      } catch (...) {
        rethrow_with_context("outputs[" + std::to_string(i) + "] optimize");
      }
      if (!r.found) out.infeasible = true;
      out.table.add_row({objective_name(obj), static_cast<long long>(s.transition.K),
                         static_cast<long long>(dm.as_int()), r.k_dir.theta(), r.k_dir.phi(),
                         r.jones.jx, r.jones.jy, r.value, r.selectivity, r.found});
    }
    break;
  }
  }
  add_metadata(out.table, s, verb, opts);
  return out;
}

} // namespace mpg
