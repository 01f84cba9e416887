// Correlation measures: classical correlation C, the commutator trace-norm
// measure Q, the created-correlation formula, and channel-level maxima.
#pragma once

#include "qcorr/channels.hpp"
#include "qcorr/states.hpp"
#include "qcorr/tolerances.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

enum class MeasureMethod { commutator, bloch_cross, affine_formula };

struct CorrelationReport {
  double q_value = 0.0;
  double c_value = 0.0;
  MeasureMethod method = MeasureMethod::commutator;
};

// Q of a QC state via the commutator trace norm.
CorrelationReport correlation_report(const QCState& q, const ToleranceConfig& tol = kTol);

// C of a CC state plus the (vanishing) Q of its assembled blocks.
CorrelationReport correlation_report(const CCState& c, const ToleranceConfig& tol = kTol);

// C = 4 |p00 p11 - p01 p10|.
double classical_correlation(const CCState& c, const ToleranceConfig& tol = kTol);

// Q = 4 ||[X0, X1]||_1.
double quantum_correlation(const QCState& q, const ToleranceConfig& tol = kTol);

// Q = 4 p0 p1 |r0 x r1| for Bloch-ball blocks.
double quantum_correlation_bloch(double p0, double p1, const Vec3& r0, const Vec3& r1);

// Q created by (E (x) I) on a CC input: 2 |t x lambda u| C(sigma).
double created_correlation(const AffineChannel& ch, const CCState& c,
                           const ToleranceConfig& tol = kTol);

// Same with the maximally correlated input along axis n: 2 |t x lambda n|.
double created_correlation_max_state(const AffineChannel& ch, const Vec3& n);

struct QMaxResult {
  double value = 0.0;             // dense-search maximum of 2 |t x lambda n|
  Vec3 argmax_n = Vec3::unit_z();
  double closed_form_value = 0.0;  // 2 |t| sqrt(sum l^4 / sum l^2), reported alongside
};

// Maximum created correlation over input axes, by Fibonacci-lattice sampling
// plus golden-section refinement in spherical coordinates.
QMaxResult q_max(const AffineChannel& ch, int lattice_points = 4096,
                 int refine_iterations = 50, const ToleranceConfig& tol = kTol);

}  // namespace qcorr
