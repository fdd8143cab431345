#include "mpgeom/scenario.hpp"

#include "mpgeom/constants.hpp"
#include "mpgeom/frames.hpp"

#include "json.hpp"
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <variant>

namespace mpg {

ScenarioError::ScenarioError(std::string path, int line, const std::string &message)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         (path.empty() ? "" : path + ": ") + message),
      path_(std::move(path)), line_(line), message_(message) {}

bool Scenario::operator==(const Scenario &o) const {
  return transition == o.transition && drives == o.drives &&
         atom_position == o.atom_position && outputs == o.outputs && settings == o.settings;
}

namespace {

constexpr double kDegree = pi / 180.0;
constexpr double kMicron = 1e-6;
constexpr double kUnitTolerance = 1e-6;

int line_of(const YAML::Node &n) {
  const YAML::Mark m = n.Mark();
  return m.line >= 0 ? m.line + 1 : 0;
}

[[noreturn]] void fail(const std::string &path, const YAML::Node &n, const std::string &msg) {
  throw ScenarioError(path, line_of(n), msg);
}

std::string join(const std::string &path, const std::string &key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string &path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double as_number(const YAML::Node &n, const std::string &path) {
  if (!n.IsScalar()) fail(path, n, "expected a number");
  try {
    const double v = n.as<double>();
    if (!std::isfinite(v)) fail(path, n, "expected a finite number");
    return v;
  } catch (const YAML::Exception &) {
    fail(path, n, "expected a number, got '" + n.Scalar() + "'");
  }
}

int as_int(const YAML::Node &n, const std::string &path) {
  const double v = as_number(n, path);
  if (v != std::floor(v) || std::abs(v) > 1e9) fail(path, n, "expected an integer");
  return static_cast<int>(v);
}

bool as_bool(const YAML::Node &n, const std::string &path) {
  if (!n.IsScalar()) fail(path, n, "expected true or false");
  try {
    return n.as<bool>();
  } catch (const YAML::Exception &) {
    fail(path, n, "expected true or false, got '" + n.Scalar() + "'");
  }
}

std::string as_string(const YAML::Node &n, const std::string &path) {
  if (!n.IsScalar()) fail(path, n, "expected a string");
  return n.Scalar();
}

// Accepts 2.5 or "5/2".
HalfInt as_halfint(const YAML::Node &n, const std::string &path) {
  if (!n.IsScalar()) fail(path, n, "expected a half-integer");
  const std::string &s = n.Scalar();
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    int num = 0, den = 0;
    const auto r1 = std::from_chars(s.data(), s.data() + slash, num);
    const auto r2 = std::from_chars(s.data() + slash + 1, s.data() + s.size(), den);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != s.data() + slash ||
        r2.ptr != s.data() + s.size() || (den != 1 && den != 2))
      fail(path, n, "expected a half-integer such as 5/2, got '" + s + "'");
    return HalfInt::from_twice(den == 1 ? 2 * num : num);
  }
  try {
    return HalfInt::from_double(as_number(n, path));
  } catch (const std::invalid_argument &) {
    fail(path, n, "'" + s + "' is not an integer or half-integer");
  }
}

cplx as_complex(const YAML::Node &n, const std::string &path) {
  if (n.IsScalar()) return as_number(n, path);
  if (n.IsSequence() && n.size() == 2)
    return {as_number(n[0], index_path(path, 0)), as_number(n[1], index_path(path, 1))};
  fail(path, n, "expected a number or a [re, im] pair");
}

std::vector<double> as_numbers(const YAML::Node &n, const std::string &path, std::size_t count) {
  if (!n.IsSequence() || n.size() != count)
    fail(path, n, "expected a list of " + std::to_string(count) + " numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(as_number(n[i], index_path(path, i)));
  return out;
}

//! Map accessor that records which keys were read so leftovers can be
//! reported as unknown.
class MapReader {
public:
  MapReader(const YAML::Node &node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.IsMap()) fail(path_, node_, "expected a mapping");
  }

  std::optional<YAML::Node> get(const std::string &key) {
    used_.insert(key);
    const YAML::Node child = node_[key];
    if (!child) return std::nullopt;
    return child;
  }
  YAML::Node require(const std::string &key) {
    auto c = get(key);
    if (!c) fail(path_, node_, "missing required key '" + key + "'");
    return *c;
  }
  std::string path(const std::string &key) const { return join(path_, key); }
  const YAML::Node &node() const { return node_; }

  void finish() const {
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      const std::string key = it->first.Scalar();
      if (!used_.count(key)) fail(join(path_, key), it->first, "unknown key '" + key + "'");
    }
  }

private:
  const YAML::Node node_;
  std::string path_;
  std::set<std::string> used_;
};

// Reads base_deg / base_rad; exactly one may be present.
std::optional<double> read_angle(MapReader &r, const std::string &base) {
  const auto deg = r.get(base + "_deg");
  const auto rad = r.get(base + "_rad");
  if (deg && rad) fail(r.path(base), *deg, "give either " + base + "_deg or " + base + "_rad");
  if (deg) return as_number(*deg, r.path(base + "_deg")) * kDegree;
  if (rad) return as_number(*rad, r.path(base + "_rad"));
  if (r.node()[base]) fail(r.path(base), r.node()[base], "missing unit suffix (_deg or _rad)");
  return std::nullopt;
}

// Reads base_um / base_m as `count` numbers (count 1 means a scalar).
std::optional<std::vector<double>> read_length(MapReader &r, const std::string &base,
                                               std::size_t count) {
  const auto um = r.get(base + "_um");
  const auto m = r.get(base + "_m");
  if (um && m) fail(r.path(base), *um, "give either " + base + "_um or " + base + "_m");
  auto read = [&](const YAML::Node &n, const std::string &p, double scale) {
    std::vector<double> v =
        count == 1 ? std::vector<double>{as_number(n, p)} : as_numbers(n, p, count);
    for (double &x : v) x *= scale;
    return v;
  };
  if (um) return read(*um, r.path(base + "_um"), kMicron);
  if (m) return read(*m, r.path(base + "_m"), 1.0);
  if (r.node()[base]) fail(r.path(base), r.node()[base], "missing unit suffix (_um or _m)");
  return std::nullopt;
}

JonesVector read_jones(const YAML::Node &n, const std::string &path, bool require_unit) {
  if (!n.IsSequence() || n.size() != 2) fail(path, n, "expected [jx, jy]");
  JonesVector j{as_complex(n[0], index_path(path, 0)), as_complex(n[1], index_path(path, 1))};
  if (require_unit && std::abs(j.norm() - 1.0) > kUnitTolerance)
    fail(path, n, "Jones vector must have unit norm");
  return j;
}

JonesVector read_polarization(const YAML::Node &n, const std::string &path,
                              const HelicityFrame &frame) {
  try {
    if (n.IsScalar()) return named_polarization(n.Scalar(), frame);
    MapReader r(n, path);
    const auto jones = r.get("jones");
    const auto cart = r.get("cartesian");
    r.finish();
    if (jones && cart) fail(path, n, "give either jones or cartesian");
    if (jones) return read_jones(*jones, r.path("jones"), true);
    if (cart) {
      const std::string cp = r.path("cartesian");
      if (!cart->IsSequence() || cart->size() != 3) fail(cp, *cart, "expected [x, y, z]");
      const CVec3 eps{as_complex((*cart)[0], index_path(cp, 0)),
                      as_complex((*cart)[1], index_path(cp, 1)),
                      as_complex((*cart)[2], index_path(cp, 2))};
      if (std::abs(eps.norm() - 1.0) > kUnitTolerance)
        fail(cp, *cart, "polarization vector must have unit norm");
      return cvec_to_jones(eps, frame);
    }
    fail(path, n, "expected a named polarization, jones or cartesian");
  } catch (const ScenarioError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    fail(path, n, e.what());
  }
}

WavePlate read_waveplate(const YAML::Node &n, const std::string &path) {
  MapReader r(n, path);
  WavePlate plate;
  const std::string kind = as_string(r.require("kind"), r.path("kind"));
  if (kind == "half")
    plate.kind = PlateKind::Half;
  else if (kind == "quarter")
    plate.kind = PlateKind::Quarter;
  else
    fail(r.path("kind"), n, "wave plate kind must be half or quarter");
  const auto angle = read_angle(r, "angle");
  if (!angle) fail(path, n, "missing angle_deg or angle_rad");
  plate.fast_axis_angle = *angle;
  r.finish();
  return plate;
}

ScalarMode read_scalar_mode(MapReader &r, const std::string &mode_name, const YAML::Node &at) {
  if (mode_name == "hermite_gauss") {
    HermiteGauss hg;
    if (auto m = r.get("m")) hg.m = as_int(*m, r.path("m"));
    if (auto n = r.get("n")) hg.n = as_int(*n, r.path("n"));
    return hg;
  }
  if (mode_name == "laguerre_gauss") {
    LaguerreGauss lg;
    if (auto n = r.get("n")) lg.n = as_int(*n, r.path("n"));
    if (auto l = r.get("l")) lg.l = as_int(*l, r.path("l"));
    return lg;
  }
  if (mode_name == "plane_wave") return PlaneWave{};
  fail(r.path("mode"), at, "unknown mode '" + mode_name + "'");
}

BeamSpec read_drive(const YAML::Node &n, const std::string &path, double k_mag) {
  MapReader r(n, path);
  BeamSpec b;
  b.k_mag = k_mag;
  std::string mode_name = "plane_wave";
  if (auto m = r.get("mode")) mode_name = as_string(*m, r.path("mode"));

  b.amplitude_E0 = as_number(r.require("E0_V_per_m"), r.path("E0_V_per_m"));
  const auto theta = read_angle(r, "theta_k");
  if (!theta) fail(path, n, "missing theta_k_deg or theta_k_rad");
  const double phi = read_angle(r, "phi_k").value_or(0.0);
  try {
    b.k_dir = SphDirection(*theta, phi);
  } catch (const std::invalid_argument &e) {
    fail(r.path("theta_k"), n, e.what());
  }
  b.phase = read_angle(r, "phase").value_or(0.0);
  const HelicityFrame frame = helicity_frame(b.k_dir);

  if (mode_name == "vector") {
    VectorMode v;
    const auto preset = r.get("preset");
    const auto terms = r.get("terms");
    if (preset && terms) fail(path, n, "give either preset or terms");
    if (preset) {
      const std::string name = as_string(*preset, r.path("preset"));
      if (name != "radial_donut") fail(r.path("preset"), *preset, "unknown preset '" + name + "'");
      v = VectorMode::radial_donut();
    } else if (terms) {
      if (!terms->IsSequence() || terms->size() == 0)
        fail(r.path("terms"), *terms, "expected a non-empty list");
      for (std::size_t i = 0; i < terms->size(); ++i) {
        const std::string tp = index_path(r.path("terms"), i);
        MapReader tr((*terms)[i], tp);
        VectorTerm t;
        t.jones = read_jones(tr.require("jones"), tr.path("jones"), false);
        const std::string tm = as_string(tr.require("mode"), tr.path("mode"));
        if (tm == "plane_wave") fail(tr.path("mode"), (*terms)[i], "vector terms must be HG or LG");
        t.mode = read_scalar_mode(tr, tm, (*terms)[i]);
        tr.finish();
        v.terms.push_back(t);
      }
    } else {
      fail(path, n, "vector mode needs preset or terms");
    }
    b.mode = v;
  } else {
    const ScalarMode scalar = read_scalar_mode(r, mode_name, n);
    std::visit([&](const auto &s) { b.mode = s; }, scalar);
    JonesVector j = read_polarization(r.require("polarization"), r.path("polarization"), frame);
    if (auto wp = r.get("waveplate")) j = apply_waveplate(j, read_waveplate(*wp, r.path("waveplate")));
    b.jones = j;
  }

  if (!std::holds_alternative<PlaneWave>(b.mode)) {
    const auto w0 = read_length(r, "w0", 1);
    if (!w0) fail(path, n, "missing w0_um or w0_m");
    b.w0 = (*w0)[0];
    if (auto off = read_length(r, "offset", 2)) b.offset = {(*off)[0], (*off)[1]};
  }
  r.finish();
  try {
    b.validate();
  } catch (const std::invalid_argument &e) {
    fail(path, n, e.what());
  }
  return b;
}

TransitionSpec read_transition(const YAML::Node &n, const std::string &path) {
  MapReader r(n, path);
  TransitionSpec t;
  t.K = as_int(r.require("K"), r.path("K"));
  const std::string ch = as_string(r.require("character"), r.path("character"));
  if (ch == "E")
    t.character = Character::Electric;
  else if (ch == "M")
    t.character = Character::Magnetic;
  else
    fail(r.path("character"), n, "character must be E or M");
  t.J_e = as_halfint(r.require("J_e"), r.path("J_e"));
  t.J_g = as_halfint(r.require("J_g"), r.path("J_g"));
  t.M_e = as_halfint(r.require("M_e"), r.path("M_e"));
  t.M_g = as_halfint(r.require("M_g"), r.path("M_g"));
  t.einstein_A = as_number(r.require("einstein_A_per_s"), r.path("einstein_A_per_s"));
  t.omega = as_number(r.require("omega_rad_per_s"), r.path("omega_rad_per_s"));
  if (auto s = r.get("s_J_sign")) t.s_J_sign = as_int(*s, r.path("s_J_sign"));
  if (auto h = r.get("hyperfine")) {
    MapReader hr(*h, r.path("hyperfine"));
    HyperfineLevels levels;
    levels.I = as_halfint(hr.require("I"), hr.path("I"));
    levels.F_e = as_halfint(hr.require("F_e"), hr.path("F_e"));
    levels.F_g = as_halfint(hr.require("F_g"), hr.path("F_g"));
    hr.finish();
    t.hyperfine = levels;
  }
  r.finish();
  try {
    t.validate(true);
  } catch (const std::invalid_argument &e) {
    fail(path, n, e.what());
  }
  return t;
}

using PathToken = std::variant<std::string, std::size_t>;

std::vector<PathToken> split_path(const std::string &path) {
  std::vector<PathToken> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (std::all_of(cur.begin(), cur.end(), [](char c) { return c >= '0' && c <= '9'; }))
      out.emplace_back(static_cast<std::size_t>(std::stoul(cur)));
    else
      out.emplace_back(cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < path.size(); ++i) {
    const char c = path[i];
    if (c == '.') {
      flush();
    } else if (c == '[') {
      flush();
      const auto close = path.find(']', i);
      if (close == std::string::npos) throw ScenarioError(path, 0, "unbalanced '['");
      out.emplace_back(static_cast<std::size_t>(std::stoul(path.substr(i + 1, close - i - 1))));
      i = close;
    } else {
      cur += c;
    }
  }
  flush();
  if (out.empty()) throw ScenarioError(path, 0, "empty parameter path");
  return out;
}

// Walks `path` from root; returns the node (a handle sharing root's memory).
YAML::Node resolve(YAML::Node root, const std::string &path) {
  YAML::Node cur = root;
  for (const auto &tok : split_path(path)) {
    if (const auto *key = std::get_if<std::string>(&tok)) {
      if (!cur.IsMap() || !static_cast<const YAML::Node &>(cur)[*key])
        throw ScenarioError(path, line_of(cur), "no such key '" + *key + "'");
      const YAML::Node next = cur[*key];
      cur.reset(next);
    } else {
      const std::size_t idx = std::get<std::size_t>(tok);
      if (!cur.IsSequence() || idx >= cur.size())
        throw ScenarioError(path, line_of(cur), "index " + std::to_string(idx) + " out of range");
      const YAML::Node next = cur[idx];
      cur.reset(next);
    }
  }
  return cur;
}

void check_numeric_path(const YAML::Node &root, const std::string &path, const YAML::Node &at) {
  YAML::Node copy = YAML::Clone(root);
  YAML::Node target;
  try {
    target = resolve(copy, path);
  } catch (const ScenarioError &e) {
    fail(path, at, std::string("scan parameter does not exist (") + e.what() + ")");
  }
  double v = 0.0;
  if (!target.IsScalar() || !YAML::convert<double>::decode(target, v))
    fail(path, at, "scan parameter must name a numeric field");
}

OutputRequest read_output(const YAML::Node &n, const std::string &path, const YAML::Node &root) {
  OutputRequest req;
  if (n.IsScalar()) {
    const std::string name = n.Scalar();
    if (name == "rabi")
      req.kind = RequestKind::Rabi;
    else if (name == "coupling")
      req.kind = RequestKind::Coupling;
    else if (name == "selectivity")
      req.kind = RequestKind::Selectivity;
    else
      fail(path, n, "unknown output '" + name + "'");
    return req;
  }
  if (!n.IsMap() || n.size() != 1) fail(path, n, "expected an output name or a single-key mapping");
  const std::string key = n.begin()->first.Scalar();
  const YAML::Node body = n.begin()->second;
  const std::string bp = join(path, key);
  MapReader r(body, bp);
  if (key == "scan") {
    req.kind = RequestKind::Scan;
    req.scan.parameter = as_string(r.require("parameter"), r.path("parameter"));
    req.scan.from = as_number(r.require("from"), r.path("from"));
    req.scan.to = as_number(r.require("to"), r.path("to"));
    req.scan.steps = as_int(r.require("steps"), r.path("steps"));
    if (req.scan.steps < 1) fail(r.path("steps"), body, "steps must be >= 1");
    check_numeric_path(root, req.scan.parameter, body);
  } else if (key == "vsh_grid") {
    req.kind = RequestKind::VshGrid;
    auto &g = req.grid;
    g.K = as_int(r.require("K"), r.path("K"));
    g.p = as_int(r.require("p"), r.path("p"));
    if (auto l = r.get("lambda")) g.lambda = as_int(*l, r.path("lambda"));
    if (auto t = r.get("n_theta")) g.n_theta = as_int(*t, r.path("n_theta"));
    if (auto p = r.get("n_phi")) g.n_phi = as_int(*p, r.path("n_phi"));
    if (g.K < 1 || std::abs(g.p) > g.K) fail(bp, body, "need K >= 1 and |p| <= K");
    if (g.lambda != 0 && g.lambda != 1) fail(r.path("lambda"), body, "lambda must be 0 or 1");
    if (g.n_theta < 2 || g.n_phi < 1) fail(bp, body, "need n_theta >= 2 and n_phi >= 1");
  } else if (key == "optimize") {
    req.kind = RequestKind::Optimize;
    try {
      req.objective = parse_objective(as_string(r.require("objective"), r.path("objective")));
    } catch (const std::invalid_argument &e) {
      fail(r.path("objective"), body, e.what());
    }
  } else {
    fail(path, n, "unknown output '" + key + "'");
  }
  r.finish();
  return req;
}

ScenarioSettings read_settings(const YAML::Node &n, const std::string &path) {
  MapReader r(n, path);
  ScenarioSettings s;
  if (auto t = r.get("tolerance")) {
    s.tolerance = as_number(*t, r.path("tolerance"));
    if (!(s.tolerance > 0.0)) fail(r.path("tolerance"), *t, "tolerance must be > 0");
  }
  if (auto v = r.get("reproject_polarization"))
    s.reproject_polarization = as_bool(*v, r.path("reproject_polarization"));
  if (auto v = r.get("apply_gouy_correction"))
    s.apply_gouy_correction = as_bool(*v, r.path("apply_gouy_correction"));
  r.finish();
  return s;
}

Scenario parse_root(const YAML::Node &root, std::string source) {
  if (!root || root.IsNull()) throw ScenarioError("", 0, "empty scenario document");
  MapReader r(root, "");
  Scenario s;
  s.source = std::move(source);
  s.transition = read_transition(r.require("transition"), "transition");
  const double k_mag = s.transition.omega / constants::speed_of_light;

  if (auto drives = r.get("drives")) {
    if (!drives->IsSequence()) fail("drives", *drives, "expected a list");
    for (std::size_t i = 0; i < drives->size(); ++i)
      s.drives.push_back(read_drive((*drives)[i], index_path("drives", i), k_mag));
  }
  if (auto pos = r.get("atom_position_m")) {
    const auto v = as_numbers(*pos, "atom_position_m", 3);
    s.atom_position = {v[0], v[1], v[2]};
  }
  const YAML::Node outputs = r.require("outputs");
  if (!outputs.IsSequence() || outputs.size() == 0)
    fail("outputs", outputs, "at least one output request is required");
  for (std::size_t i = 0; i < outputs.size(); ++i)
    s.outputs.push_back(read_output(outputs[i], index_path("outputs", i), root));
  if (auto st = r.get("settings")) s.settings = read_settings(*st, "settings");
  r.finish();

  const bool needs_drives = std::any_of(s.outputs.begin(), s.outputs.end(), [](const auto &o) {
    return o.kind != RequestKind::VshGrid && o.kind != RequestKind::Optimize;
  });
  if (needs_drives && s.drives.empty())
    fail("drives", root, "coupling, rabi, selectivity and scan outputs need at least one drive");
  return s;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

using json = nlohmann::ordered_json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json jones_json(const JonesVector &j) {
  return json::array({complex_json(j.jx), complex_json(j.jy)});
}

void scalar_mode_json(json &obj, const ScalarMode &mode) {
  std::visit(
      [&](const auto &m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PlaneWave>) {
          obj["mode"] = "plane_wave";
        } else if constexpr (std::is_same_v<T, HermiteGauss>) {
          obj["mode"] = "hermite_gauss";
          obj["m"] = m.m;
          obj["n"] = m.n;
        } else {
          obj["mode"] = "laguerre_gauss";
          obj["n"] = m.n;
          obj["l"] = m.l;
        }
      },
      mode);
}

// Plain data copy of a YAML subtree. Scalars become integers, reals or
// booleans where they parse as such; quoted scalars stay strings.
json yaml_to_json(const YAML::Node &n) {
  if (n.IsSequence()) {
    json a = json::array();
    for (const auto &item : n) a.push_back(yaml_to_json(item));
    return a;
  }
  if (n.IsMap()) {
    json o = json::object();
    for (const auto &kv : n) o[kv.first.Scalar()] = yaml_to_json(kv.second);
    return o;
  }
  if (!n.IsScalar()) return nullptr;
  const std::string &text = n.Scalar();
  if (n.Tag() == "!") return text;
  long long i = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
  if (ec == std::errc() && end == text.data() + text.size()) return i;
  double d = 0.0;
  if (YAML::convert<double>::decode(n, d)) return d;
  bool b = false;
  if (YAML::convert<bool>::decode(n, b)) return b;
  return text;
}

} // namespace

Scenario parse_scenario(const std::string &text, const std::string &origin) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException &e) {
    throw ScenarioError(origin, e.mark.line >= 0 ? e.mark.line + 1 : 0, e.msg);
  }
  return parse_root(root, text);
}

Scenario load_scenario_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path, 0, "cannot open scenario file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

std::string emit_scenario(const Scenario &s) {
  json doc = json::object();
  const auto &t = s.transition;
  json tr = json::object();
  tr["K"] = t.K;
  tr["character"] = t.character == Character::Electric ? "E" : "M";
  tr["J_e"] = t.J_e.value();
  tr["J_g"] = t.J_g.value();
  tr["M_e"] = t.M_e.value();
  tr["M_g"] = t.M_g.value();
  tr["einstein_A_per_s"] = t.einstein_A;
  tr["omega_rad_per_s"] = t.omega;
  tr["s_J_sign"] = t.s_J_sign;
  if (t.hyperfine)
    tr["hyperfine"] = {{"I", t.hyperfine->I.value()},
                       {"F_e", t.hyperfine->F_e.value()},
                       {"F_g", t.hyperfine->F_g.value()}};
  doc["transition"] = tr;

  json drives = json::array();
  for (const auto &b : s.drives) {
    json d = json::object();
    if (const auto *v = std::get_if<VectorMode>(&b.mode)) {
      d["mode"] = "vector";
      json terms = json::array();
      for (const auto &term : v->terms) {
        json tj = json::object();
        tj["jones"] = jones_json(term.jones);
        scalar_mode_json(tj, term.mode);
        terms.push_back(tj);
      }
      d["terms"] = terms;
    } else {
      std::visit([&](const auto &m) {
        if constexpr (!std::is_same_v<std::decay_t<decltype(m)>, VectorMode>)
          scalar_mode_json(d, ScalarMode{m});
      }, b.mode);
      d["polarization"] = {{"jones", jones_json(b.jones)}};
    }
    d["E0_V_per_m"] = b.amplitude_E0;
    d["theta_k_rad"] = b.k_dir.theta();
    d["phi_k_rad"] = b.k_dir.phi();
    d["phase_rad"] = b.phase;
    if (!std::holds_alternative<PlaneWave>(b.mode)) {
      d["w0_m"] = b.w0;
      d["offset_m"] = json::array({b.offset[0], b.offset[1]});
    }
    drives.push_back(d);
  }
  doc["drives"] = drives;
  doc["atom_position_m"] = json::array({s.atom_position[0], s.atom_position[1], s.atom_position[2]});

  json outputs = json::array();
  for (const auto &o : s.outputs) {
    switch (o.kind) {
    case RequestKind::Rabi: outputs.push_back("rabi"); break;
    case RequestKind::Coupling: outputs.push_back("coupling"); break;
    case RequestKind::Selectivity: outputs.push_back("selectivity"); break;
    case RequestKind::Scan:
      outputs.push_back({{"scan", {{"parameter", o.scan.parameter},
                                   {"from", o.scan.from},
                                   {"to", o.scan.to},
                                   {"steps", o.scan.steps}}}});
      break;
    case RequestKind::VshGrid:
      outputs.push_back({{"vsh_grid", {{"K", o.grid.K},
                                       {"p", o.grid.p},
                                       {"lambda", o.grid.lambda},
                                       {"n_theta", o.grid.n_theta},
                                       {"n_phi", o.grid.n_phi}}}});
      break;
    case RequestKind::Optimize:
      outputs.push_back({{"optimize", {{"objective", objective_name(o.objective)}}}});
      break;
    }
  }
  doc["outputs"] = outputs;
  doc["settings"] = {{"tolerance", s.settings.tolerance},
                     {"reproject_polarization", s.settings.reproject_polarization},
                     {"apply_gouy_correction", s.settings.apply_gouy_correction}};

  // A scan names a field in the user's units (angle_deg, offset_um, ...), so
  // the section it points into is carried over from the source as written.
  if (!s.source.empty()) {
    const YAML::Node root = YAML::Load(s.source);
    for (const auto &o : s.outputs) {
      if (o.kind != RequestKind::Scan) continue;
      const auto tokens = split_path(o.scan.parameter);
      const auto *section = std::get_if<std::string>(&tokens.front());
      if (!section || !root[*section]) continue;
      if (*section == "drives" && tokens.size() > 1) {
        if (const auto *idx = std::get_if<std::size_t>(&tokens[1]))
          doc["drives"][*idx] = yaml_to_json(root["drives"][*idx]);
      } else if (*section != "outputs") {
        doc[*section] = yaml_to_json(root[*section]);
      }
    }
  }
  return doc.dump(2) + "\n";
}

Scenario with_parameter(const Scenario &s, const std::string &path, double value) {
  YAML::Node root = YAML::Load(s.source);
  YAML::Node target = resolve(root, path);
  double old = 0.0;
  if (!target.IsScalar() || !YAML::convert<double>::decode(target, old))
    throw ScenarioError(path, line_of(target), "scan parameter must name a numeric field");
  target = shortest(value);
  YAML::Emitter out;
  out << root;
  return parse_scenario(out.c_str(), path);
}

} // namespace mpg
