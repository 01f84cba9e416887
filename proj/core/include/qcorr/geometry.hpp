// Nearest classically-correlated state for pure-block QC states, the
// geometric measure built on it, and a brute-force fidelity oracle.
#pragma once

#include <cstdint>
#include <utility>

#include "qcorr/states.hpp"
#include "qcorr/tolerances.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

enum class CaseTag { aligned, anti };

struct NearestCCResult {
  Vec3 s0;
  Vec3 s1;
  double xi = 0.0;
  double f_max = 1.0;
  CaseTag case_tag = CaseTag::aligned;
  double theta = 0.0;      // planar angle of s0, zero when the frame degenerates
  double q_geometric = 0.0;
};

// Closed-form nearest CC state. Case dispatch on the sign of n0.n1; at the
// boundary both cases are evaluated and the better fidelity wins.
NearestCCResult nearest_cc(double p0, double p1, const Vec3& n0, const Vec3& n1,
                           const ToleranceConfig& tol = kTol);

// 1 - f_max.
double geometric_measure(double p0, double p1, const Vec3& n0, const Vec3& n1,
                         const ToleranceConfig& tol = kTol);

// Signed defects of the two stationarity conditions at (theta, xi), written
// in branch-safe form so they vanish at the closed-form optimum for any
// atan2 representative of theta. alpha is the planar half-angle between the
// block vectors.
std::pair<double, double> stationarity_residuals(double theta, double xi, double p0, double p1,
                                                 double alpha, CaseTag case_tag);

struct OracleResult {
  CCState cc_state;
  double fidelity = 0.0;
  long evaluations = 0;
  int tie_count = 0;
};

// Grid scan over the full CC family (A axis, B axis, probability simplex)
// followed by coordinate-descent refinement; budget steers the grid sizes.
OracleResult oracle_nearest_cc(const PureQCState& q, long budget = 100000,
                               const ToleranceConfig& tol = kTol);

}  // namespace qcorr
