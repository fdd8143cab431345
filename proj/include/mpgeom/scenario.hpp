#pragma once

#include "mpgeom/beams.hpp"
#include "mpgeom/coupling.hpp"
#include "mpgeom/optimize.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpg {

//! Parse failure with the offending key path and 1-based line (0 if unknown).
class ScenarioError : public std::runtime_error {
public:
  ScenarioError(std::string path, int line, const std::string &message);
  const std::string &path() const { return path_; }
  int line() const { return line_; }
  const std::string &message() const { return message_; }

private:
  std::string path_;
  int line_;
  std::string message_;
};

enum class RequestKind { Rabi, Coupling, Selectivity, Scan, VshGrid, Optimize };

struct ScanRequest {
  std::string parameter; // e.g. drives[0].waveplate.angle_deg
  double from = 0.0, to = 0.0;
  int steps = 1;         // intervals; steps + 1 points including both ends
  bool operator==(const ScanRequest &) const = default;
};

struct VshGridRequest {
  int K = 1, p = 0, lambda = 1, n_theta = 19, n_phi = 36;
  bool operator==(const VshGridRequest &) const = default;
};

struct OutputRequest {
  RequestKind kind = RequestKind::Rabi;
  ScanRequest scan;
  VshGridRequest grid;
  Objective objective = Objective::MaxCoupling;
  bool operator==(const OutputRequest &) const = default;
};

struct ScenarioSettings {
  double tolerance = 1e-9;
  bool reproject_polarization = false;
  bool apply_gouy_correction = false;
  bool operator==(const ScenarioSettings &) const = default;
};

//! A validated scenario. Drives hold the resolved polarization (after any
//! named state or wave plate) and k = omega / c.
struct Scenario {
  TransitionSpec transition;
  std::vector<BeamSpec> drives;
  std::array<double, 3> atom_position{0.0, 0.0, 0.0};
  std::vector<OutputRequest> outputs;
  ScenarioSettings settings;
  std::string source; // original document, used to re-parse scan points

  bool operator==(const Scenario &o) const;
};

// Throws ScenarioError. `origin` names the document in messages.
Scenario parse_scenario(const std::string &text, const std::string &origin = "<scenario>");
Scenario load_scenario_file(const std::string &path);

// Canonical document (JSON, which the parser accepts as YAML) using radians,
// metres and shortest round-trip numbers. A drive or section that a scan
// request points into is copied from the source unchanged, so the scan path
// stays valid. parse(emit(s)) == s.
std::string emit_scenario(const Scenario &s);

// Copy of the source document with the numeric field at `path` replaced,
// re-parsed. Throws ScenarioError for paths that do not name a number.
Scenario with_parameter(const Scenario &s, const std::string &path, double value);

} // namespace mpg
