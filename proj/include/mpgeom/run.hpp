#pragma once

#include "mpgeom/exec.hpp"
#include "mpgeom/scenario.hpp"
#include "mpgeom/table.hpp"

#include <optional>
#include <string>

namespace mpg {

enum class Verb { Rabi, Coupling, Scan, VshGrid, Optimize };

Verb parse_verb(const std::string &name);
std::string verb_name(Verb v);

struct RunOptions {
  Exec exec = Exec::Parallel;
  std::optional<double> tolerance;              // overrides settings.tolerance
  std::optional<bool> reproject_polarization;   // overrides the scenario setting
};

struct RunOutcome {
  ResultTable table;
  bool infeasible = false; // an optimize request found no admissible point
};

//! Coupling of all drives for one delta_m, normalised to the first drive's
//! amplitude, and the matching Rabi frequency.
struct Evaluation {
  int delta_m = 0;
  cplx coupling;
  cplx rabi;
  double selectivity = 0.0;
};

Evaluation evaluate(const Scenario &s, const RunOptions &opts = {});

// rabi: rows for each rabi request (one default row if there are none).
// coupling: rows for each coupling and selectivity request (default one row).
// scan/vsh-grid/optimize: rows for each such request; none present is an error.
// Errors from inner operations are rethrown with the request attached.
RunOutcome run_scenario(const Scenario &s, Verb verb, const RunOptions &opts = {});

} // namespace mpg
