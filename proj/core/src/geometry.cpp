#include "qcorr/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

constexpr double kPi = 3.14159265358979323846;

double fidelity_at(double p0, double p1, const Vec3& n0, const Vec3& n1, double xi,
                   const Vec3& s0, const Vec3& s1) {
  const double a = p0 * (1.0 + xi) * (1.0 + n0.dot(s0));
  const double b = p1 * (1.0 - xi) * (1.0 + n1.dot(s1));
  return 0.5 * (std::sqrt(std::max(0.0, a)) + std::sqrt(std::max(0.0, b)));
}

NearestCCResult case_formula(double p0, double p1, const Vec3& n0, const Vec3& n1,
                             CaseTag tag) {
  const double d = std::clamp(n0.dot(n1), -1.0, 1.0);
  const double sign = (tag == CaseTag::aligned) ? 1.0 : -1.0;
  const double denom2 = 1.0 - 2.0 * p0 * p1 * (1.0 - sign * d);
  if (denom2 <= 1e-15)
    throw DegenerateInputError("nearest-CC denominator vanished");
  const double denom = std::sqrt(denom2);

  NearestCCResult r;
  r.case_tag = tag;
  r.s0 = (n0 * p0 + n1 * (sign * p1)) / denom;
  r.s1 = (tag == CaseTag::aligned) ? r.s0 : -r.s0;
  r.xi = (p0 - p1) / denom;
  r.f_max = std::min(1.0, fidelity_at(p0, p1, n0, n1, r.xi, r.s0, r.s1));
  r.q_geometric = 1.0 - r.f_max;

  // Planar angle of s0 in the frame (bisector, difference direction).
  const Vec3 sum = n0 + n1;
  const Vec3 dif = n1 - n0;
  if (sum.norm() > 1e-8 && dif.norm() > 1e-8) {
    const Vec3 ec = sum.normalized();
    const Vec3 es = dif.normalized();
    r.theta = std::atan2(r.s0.dot(es), r.s0.dot(ec));
  } else {
    r.theta = 0.0;
  }
  return r;
}

}  // namespace

NearestCCResult nearest_cc(double p0, double p1, const Vec3& n0, const Vec3& n1,
                           const ToleranceConfig& tol) {
  PureQCState q{p0, p1, n0, n1};
  validate_pure_qc(q, tol);

  // Single-block states are already classically correlated.
  if (p0 >= 1.0 - tol.trace_one || p1 >= 1.0 - tol.trace_one) {
    NearestCCResult r;
    r.s0 = (p0 >= p1) ? n0 : n1;
    r.s1 = r.s0;
    r.xi = p0 - p1;
    r.f_max = 1.0;
    r.q_geometric = 0.0;
    return r;
  }

  const double d = n0.dot(n1);
  if (d > tol.trace_one) return case_formula(p0, p1, n0, n1, CaseTag::aligned);
  if (d < -tol.trace_one) return case_formula(p0, p1, n0, n1, CaseTag::anti);
  const NearestCCResult aligned = case_formula(p0, p1, n0, n1, CaseTag::aligned);
  const NearestCCResult anti = case_formula(p0, p1, n0, n1, CaseTag::anti);
  return aligned.f_max >= anti.f_max ? aligned : anti;
}

double geometric_measure(double p0, double p1, const Vec3& n0, const Vec3& n1,
                         const ToleranceConfig& tol) {
  return nearest_cc(p0, p1, n0, n1, tol).q_geometric;
}

std::pair<double, double> stationarity_residuals(double theta, double xi, double p0, double p1,
                                                 double alpha, CaseTag case_tag) {
  // Nonnegative square roots of the overlap factors; on the principal branch
  // these are cos((theta+alpha)/2) and friends.
  const double cp = std::sqrt(std::max(0.0, (1.0 + std::cos(theta + alpha)) / 2.0));
  const double denom_p = std::max(cp, 1e-14);
  const double a0 = std::sqrt(std::max(1e-300, p0 / (1.0 + xi)));
  const double b0 = std::sqrt(std::max(1e-300, p1 / (1.0 - xi)));
  const double a1 = std::sqrt(std::max(0.0, p0 * (1.0 + xi)));
  const double b1 = std::sqrt(std::max(0.0, p1 * (1.0 - xi)));

  if (case_tag == CaseTag::aligned) {
    const double cm = std::sqrt(std::max(0.0, (1.0 + std::cos(theta - alpha)) / 2.0));
    const double denom_m = std::max(cm, 1e-14);
    const double r1 = a0 * cp - b0 * cm;
    const double r2 = a1 * std::sin(theta + alpha) / (2.0 * denom_p) +
                      b1 * std::sin(theta - alpha) / (2.0 * denom_m);
    return {r1, r2};
  }
  const double sm = std::sqrt(std::max(0.0, (1.0 - std::cos(theta - alpha)) / 2.0));
  const double denom_m = std::max(sm, 1e-14);
  const double r1 = a0 * cp - b0 * sm;
  const double r2 = a1 * std::sin(theta + alpha) / (2.0 * denom_p) -
                    b1 * std::sin(theta - alpha) / (2.0 * denom_m);
  return {r1, r2};
}

namespace {

Vec3 sphere_point(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

struct OracleParams {
  // Axes as polar/azimuthal pairs, then four nonnegative weights.
  double u_theta = 0.0, u_phi = 0.0;
  double v_theta = 0.0, v_phi = 0.0;
  std::array<double, 4> w{0.25, 0.25, 0.25, 0.25};

  CCState to_state() const {
    CCState c;
    c.u_axis = sphere_point(u_theta, u_phi);
    c.v_axis = sphere_point(v_theta, v_phi);
    const double sum = w[0] + w[1] + w[2] + w[3];
    c.p[0][0] = w[0] / sum;
    c.p[0][1] = w[1] / sum;
    c.p[1][0] = w[2] / sum;
    c.p[1][1] = w[3] / sum;
    return c;
  }
};

}  // namespace

OracleResult oracle_nearest_cc(const PureQCState& q, long budget, const ToleranceConfig& tol) {
  if (budget < 10000) throw BudgetError("oracle budget must be at least 10^4");
  validate_pure_qc(q, tol);
  const DensityMatrix rho = assemble_pure_qc(q, tol);

  long evaluations = 0;
  const auto eval = [&](const CCState& c) {
    ++evaluations;
    return fidelity(rho, assemble_cc(c, tol), tol);
  };

  // Grid sizes from the budget: fixed 3-division simplex grid (20 points),
  // the rest split evenly between the two axis grids, each n_theta x
  // 2*n_theta with poles included.
  constexpr int kSimplexDiv = 3;
  std::vector<std::array<double, 4>> simplex;
  for (int a = 0; a <= kSimplexDiv; ++a)
    for (int b = 0; b <= kSimplexDiv - a; ++b)
      for (int c = 0; c <= kSimplexDiv - a - b; ++c) {
        const int d = kSimplexDiv - a - b - c;
        simplex.push_back({static_cast<double>(a), static_cast<double>(b),
                           static_cast<double>(c), static_cast<double>(d)});
      }

  // Each axis grid holds about 2 n_theta^2 points, so the scan costs
  // (2 n_theta^2)^2 * |simplex| evaluations; solve for n_theta under budget.
  const double per_axis = std::sqrt(static_cast<double>(budget) / simplex.size());
  const int n_theta = std::max(4, static_cast<int>(std::lround(std::sqrt(per_axis / 2.0))));
  const int n_phi = 2 * n_theta;

  std::vector<std::pair<double, double>> axis_grid;  // (theta, phi)
  axis_grid.emplace_back(0.0, 0.0);
  for (int i = 1; i + 1 < n_theta; ++i) {
    const double th = kPi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) axis_grid.emplace_back(th, 2.0 * kPi * j / n_phi);
  }
  axis_grid.emplace_back(kPi, 0.0);

  // The scan keeps several well-separated leaders, not just the best point:
  // near the aligned/anti boundary two distinct basins compete and greedy
  // descent from a single start can finish in the wrong one.
  struct Candidate {
    double f = -1.0;
    OracleParams params;
  };
  constexpr std::size_t kStarts = 8;
  std::vector<Candidate> leaders;
  double best_f = -1.0;
  int tie_count = 0;

  const double axis_sep = 1.2 * kPi / (n_theta - 1);
  const auto same_basin = [&](const OracleParams& a, const OracleParams& b) {
    const double du = std::acos(std::clamp(
        sphere_point(a.u_theta, a.u_phi).dot(sphere_point(b.u_theta, b.u_phi)), -1.0, 1.0));
    const double dv = std::acos(std::clamp(
        sphere_point(a.v_theta, a.v_phi).dot(sphere_point(b.v_theta, b.v_phi)), -1.0, 1.0));
    if (du > axis_sep || dv > axis_sep) return false;
    const CCState ca = a.to_state(), cb = b.to_state();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (std::abs(ca.p[i][j] - cb.p[i][j]) > 0.34) return false;
    return true;
  };

  for (const auto& [ut, up] : axis_grid) {
    for (const auto& [vt, vp] : axis_grid) {
      for (const auto& w : simplex) {
        OracleParams params;
        params.u_theta = ut;
        params.u_phi = up;
        params.v_theta = vt;
        params.v_phi = vp;
        params.w = w;
        const double f = eval(params.to_state());
        if (f > best_f + 1e-12) {
          best_f = f;
          tie_count = 0;
        } else if (f > best_f - 1e-12) {
          ++tie_count;
        }
        bool placed = false;
        for (Candidate& c : leaders) {
          if (same_basin(c.params, params)) {
            if (f > c.f) c = {f, params};
            placed = true;
            break;
          }
        }
        if (!placed) {
          if (leaders.size() < kStarts) {
            leaders.push_back({f, params});
          } else {
            auto worst = std::min_element(
                leaders.begin(), leaders.end(),
                [](const Candidate& a, const Candidate& b) { return a.f < b.f; });
            if (f > worst->f) *worst = {f, params};
          }
        }
      }
    }
  }

  // Coordinate descent with step halving on the eight free parameters, run
  // from every leader. A second pass restarts from mid-scale steps to undo
  // premature halvings in coupled directions.
  const double angle_step0 = kPi / (n_theta - 1);
  constexpr int kRounds = 40;
  const auto descend = [&](Candidate state, double angle_step, double weight_step) {
    std::array<double*, 8> coords{&state.params.u_theta, &state.params.u_phi,
                                  &state.params.v_theta, &state.params.v_phi,
                                  &state.params.w[0],    &state.params.w[1],
                                  &state.params.w[2],    &state.params.w[3]};
    std::array<double, 8> steps{angle_step, angle_step, angle_step, angle_step,
                                weight_step, weight_step, weight_step, weight_step};
    for (int round = 0; round < kRounds; ++round) {
      bool improved = false;
      for (std::size_t k = 0; k < coords.size(); ++k) {
        const double saved = *coords[k];
        for (const double delta : {steps[k], -steps[k]}) {
          double candidate = saved + delta;
          if (k >= 4) candidate = std::max(0.0, candidate);  // weights stay nonnegative
          *coords[k] = candidate;
          if (state.params.w[0] + state.params.w[1] + state.params.w[2] + state.params.w[3] <
              1e-12) {
            *coords[k] = saved;
            continue;
          }
          const double f = eval(state.params.to_state());
          if (f > state.f) {
            state.f = f;
            improved = true;
            break;
          }
          *coords[k] = saved;
        }
      }
      if (!improved)
        for (double& s : steps) s *= 0.5;
    }
    return state;
  };

  std::stable_sort(leaders.begin(), leaders.end(),
                   [](const Candidate& a, const Candidate& b) { return a.f > b.f; });
  Candidate best{-1.0, OracleParams{}};
  for (const Candidate& start : leaders) {
    Candidate refined = descend(start, angle_step0, 0.5);
    refined = descend(refined, angle_step0 / 8.0, 1.0 / 16.0);
    if (refined.f > best.f) best = refined;
  }

  OracleResult out;
  out.cc_state = best.params.to_state();
  out.fidelity = best.f;
  out.evaluations = evaluations;
  out.tie_count = tie_count;
  return out;
}

}  // namespace qcorr
