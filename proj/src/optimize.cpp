#include "mpgeom/optimize.hpp"

#include "mpgeom/coupling.hpp"
#include "mpgeom/frames.hpp"
#include "mpgeom/vsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mpg {

namespace {

constexpr int kThetaPoints = 181;
constexpr int kPsiPoints = 73;
constexpr int kChiPoints = 37;
constexpr double kStepTolerance = 1e-10;
constexpr double kPenalty = 10.0;
constexpr double kZeroSelectivity = 1e-8;
constexpr double kMinCoupling = 1e-6;

// theta-hat and phi-hat projections of Y^(+1)_{K,-p} for every p at one theta.
struct ThetaTable {
  std::vector<cplx> a, b; // index p + K
};

ThetaTable theta_table(int K, double theta) {
  const HelicityFrame f = helicity_frame(SphDirection(theta, 0.0));
  ThetaTable t;
  t.a.resize(static_cast<std::size_t>(2 * K + 1));
  t.b.resize(t.a.size());
  for (int p = -K; p <= K; ++p) {
    const CVec3 y = vsh_plus1_value(K, -p, f);
    t.a[static_cast<std::size_t>(p + K)] = bilinear_dot(f.e_xp, y);
    t.b[static_cast<std::size_t>(p + K)] = bilinear_dot(f.e_yp, y);
  }
  return t;
}

struct Score {
  double objective;
  double magnitude;
  double leak;
};

Score score(const ThetaTable &t, int K, int delta_m, const JonesVector &j,
            Objective obj) {
  double leak = 0.0, mag = 0.0;
  for (int p = -K; p <= K; ++p) {
    const auto i = static_cast<std::size_t>(p + K);
    const double v = std::abs(j.jx * t.a[i] + j.jy * t.b[i]);
    if (p == delta_m)
      mag = v;
    else
      leak += v;
  }
  const double o = obj == Objective::MaxCoupling ? mag : mag - kPenalty * leak;
  return {o, mag, leak};
}

struct Point {
  double theta, psi, chi;
};

Point clamp(Point q) {
  q.theta = std::clamp(q.theta, 0.0, pi);
  q.chi = std::clamp(q.chi, -pi / 4, pi / 4);
  q.psi = std::fmod(q.psi, pi);
  if (q.psi < 0.0) q.psi += pi;
  return q;
}

} // namespace

Objective parse_objective(const std::string &name) {
  if (name == "max_coupling") return Objective::MaxCoupling;
  if (name == "max_coupling_zero_selectivity") return Objective::MaxCouplingZeroSelectivity;
  throw std::invalid_argument("unknown objective '" + name + "'");
}

std::string objective_name(Objective o) {
  return o == Objective::MaxCoupling ? "max_coupling" : "max_coupling_zero_selectivity";
}

JonesVector ellipse_jones(double psi, double chi) {
  const double c = std::cos(chi), s = std::sin(chi);
  const double cp = std::cos(psi), sp = std::sin(psi);
  return {cp * c - I * (sp * s), sp * c + I * (cp * s)};
}

OptimizeResult optimize_geometry(int K, int delta_m, Objective objective, Exec exec) {
  if (K < 1) throw std::invalid_argument("optimize_geometry needs K >= 1");
  if (std::abs(delta_m) > K) throw std::invalid_argument("|delta_m| must not exceed K");

  auto theta_at = [](int i) { return pi * i / (kThetaPoints - 1); };
  auto psi_at = [](int i) { return pi * i / kPsiPoints; };
  auto chi_at = [](int i) { return -pi / 4 + (pi / 2) * i / (kChiPoints - 1); };

  // Best cell per theta row, then a serial first-wins reduction over rows.
  std::vector<Point> row_best(kThetaPoints);
  std::vector<double> row_value(kThetaPoints);
  auto scan_row = [&](int it) {
    const ThetaTable t = theta_table(K, theta_at(it));
    double best = -INFINITY;
    Point bp{};
    for (int ip = 0; ip < kPsiPoints; ++ip)
      for (int ic = 0; ic < kChiPoints; ++ic) {
        const Score s = score(t, K, delta_m, ellipse_jones(psi_at(ip), chi_at(ic)), objective);
        if (s.objective > best) {
          best = s.objective;
          bp = {theta_at(it), psi_at(ip), chi_at(ic)};
        }
      }
    row_best[static_cast<std::size_t>(it)] = bp;
    row_value[static_cast<std::size_t>(it)] = best;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int it = 0; it < kThetaPoints; ++it) scan_row(it);
  } else {
    for (int it = 0; it < kThetaPoints; ++it) scan_row(it);
  }
  std::size_t winner = 0;
  for (std::size_t i = 1; i < row_value.size(); ++i)
    if (row_value[i] > row_value[winner]) winner = i;

  Point cur = row_best[winner];
  auto eval = [&](const Point &q) {
    return score(theta_table(K, q.theta), K, delta_m, ellipse_jones(q.psi, q.chi),
                 objective);
  };
  Score cur_score = eval(cur);
  double steps[3] = {pi / (kThetaPoints - 1), pi / kPsiPoints,
                     (pi / 2) / (kChiPoints - 1)};
  for (int guard = 0; guard < 100000; ++guard) {
    if (std::max({steps[0], steps[1], steps[2]}) < kStepTolerance) break;
    bool improved = false;
    for (int axis = 0; axis < 3; ++axis) {
      for (double dir : {1.0, -1.0}) {
        Point trial = cur;
        double *coord = axis == 0 ? &trial.theta : axis == 1 ? &trial.psi : &trial.chi;
        *coord += dir * steps[axis];
        trial = clamp(trial);
        const Score s = eval(trial);
        if (s.objective > cur_score.objective) {
          cur = trial;
          cur_score = s;
          improved = true;
          break;
        }
      }
    }
    if (!improved)
      for (double &s : steps) s *= 0.5;
  }

  OptimizeResult r;
  r.k_dir = SphDirection(cur.theta, 0.0);
  r.jones = ellipse_jones(cur.psi, cur.chi);
  const HelicityFrame f = helicity_frame(r.k_dir);
  r.eps = jones_to_cvec(r.jones, f);
  r.coupling = bilinear_dot(r.eps, vsh_plus1_value(K, -delta_m, f));
  r.value = std::abs(r.coupling);
  r.selectivity = cur_score.leak;
  r.found = objective == Objective::MaxCoupling ||
            (r.selectivity < kZeroSelectivity && r.value > kMinCoupling);
  return r;
}

} // namespace mpg
