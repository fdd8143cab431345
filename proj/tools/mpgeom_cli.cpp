#include "mpgeom/exec.hpp"
#include "mpgeom/run.hpp"
#include "mpgeom/selfcheck.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kParseError = 2, kNoConvergence = 3, kInfeasible = 4 };

struct Options {
  std::string scenario;
  std::string format = "csv";
  std::string out;
  std::optional<double> tolerance;
  int threads = 0;
  bool reproject = false;
};

void warn_paraxial(const mpg::Scenario &s) {
  for (std::size_t i = 0; i < s.drives.size(); ++i)
    if (s.drives[i].paraxial_warning())
      std::cerr << "warning: drives[" << i << "]: k*w0 = "
                << mpg::format_real(s.drives[i].k_mag * s.drives[i].w0)
                << " is below 10; the paraxial description is marginal\n";
}

// Writes to --out when given, stdout otherwise.
int emit(const mpg::ResultTable &table, const Options &o) {
  const mpg::TableFormat fmt = mpg::parse_table_format(o.format);
  if (o.out.empty()) {
    mpg::write_table(std::cout, table, fmt);
    std::cout.flush();
    return std::cout ? kOk : kFailure;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file '" << o.out << "'\n";
    return kFailure;
  }
  mpg::write_table(f, table, fmt);
  f.close();
  if (!f) {
    std::cerr << "error: failed writing '" << o.out << "'\n";
    return kFailure;
  }
  return kOk;
}

int run_verb(const std::string &verb, const Options &o) {
  if (o.threads > 0) mpg::set_thread_count(o.threads);
  if (verb == "verify") {
    mpg::ResultTable t({{"suite", mpg::CellKind::Text},
                        {"cases", mpg::CellKind::Integer},
                        {"max_error", mpg::CellKind::Real},
                        {"tolerance", mpg::CellKind::Real},
                        {"passed", mpg::CellKind::Boolean}});
    bool all = true;
    for (const auto &c : mpg::run_self_checks()) {
      all = all && c.passed;
      t.add_row({c.suite, static_cast<long long>(c.cases), c.max_error, c.tolerance, c.passed});
      std::cerr << (c.passed ? "PASS " : "FAIL ") << c.suite << '\n';
    }
    t.set_metadata("tool", "mpgeom");
    t.set_metadata("verb", "verify");
    const int rc = emit(t, o);
    return rc != kOk ? rc : (all ? kOk : kFailure);
  }
  if (o.scenario.empty()) {
    std::cerr << "error: --scenario is required for '" << verb << "'\n";
    return kParseError;
  }
  const mpg::Scenario s = mpg::load_scenario_file(o.scenario);
  warn_paraxial(s);
  mpg::RunOptions ro;
  ro.tolerance = o.tolerance;
  if (o.reproject) ro.reproject_polarization = true;
  const mpg::RunOutcome outcome = mpg::run_scenario(s, mpg::parse_verb(verb), ro);
  const int rc = emit(outcome.table, o);
  if (rc != kOk) return rc;
  return outcome.infeasible ? kInfeasible : kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Angular geometry and Rabi frequencies of multipole transitions"};
  app.require_subcommand(1);
  Options o;
  const char *verbs[][2] = {
      {"rabi", "Rabi frequency for each rabi request"},
      {"coupling", "Geometric coupling and selectivity"},
      {"scan", "Sweep one scenario parameter"},
      {"vsh-grid", "Tabulate a vector spherical harmonic on a grid"},
      {"optimize", "Search for the best beam direction and polarization"},
      {"verify", "Run the built-in consistency suites"},
  };
  for (const auto &v : verbs) {
    CLI::App *sub = app.add_subcommand(v[0], v[1]);
    sub->add_option("--scenario", o.scenario, "Scenario file (YAML)")->check(CLI::ExistingFile);
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_option("--tolerance", o.tolerance, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--reproject-polarization", o.reproject,
                  "Project the beam polarization transverse to each plane-wave component");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return run_verb(verb, o);
  } catch (const mpg::ScenarioError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const mpg::ConvergenceError &e) {
    std::cerr << "error: " << e.what() << " (achieved " << mpg::format_real(e.achieved())
              << ")\n";
    return kNoConvergence;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
