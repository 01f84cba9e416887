#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double classical_correlation(const CCState& c, const ToleranceConfig& tol) {
  validate_cc(c, tol);
  return 4.0 * std::abs(c.p[0][0] * c.p[1][1] - c.p[0][1] * c.p[1][0]);
}

double quantum_correlation(const QCState& q, const ToleranceConfig& tol) {
  validate_qc(q, tol);
  const ComplexMatrix commutator = q.x0 * q.x1 - q.x1 * q.x0;
  return 4.0 * trace_norm(commutator, tol);
}

CorrelationReport correlation_report(const QCState& q, const ToleranceConfig& tol) {
  CorrelationReport report;
  report.q_value = quantum_correlation(q, tol);
  report.method = MeasureMethod::commutator;
  return report;
}

CorrelationReport correlation_report(const CCState& c, const ToleranceConfig& tol) {
  CorrelationReport report;
  const AffineChannel identity;
  report.q_value = quantum_correlation(apply_to_cc(identity, c, tol), tol);
  report.c_value = classical_correlation(c, tol);
  report.method = MeasureMethod::commutator;
  return report;
}

double quantum_correlation_bloch(double p0, double p1, const Vec3& r0, const Vec3& r1) {
  if (std::abs(p0 + p1 - 1.0) > 1e-10 || p0 < -1e-12 || p1 < -1e-12)
    throw DomainError("block probabilities must be nonnegative and sum to one");
  if (r0.norm() > 1.0 + kTol.bloch_norm || r1.norm() > 1.0 + kTol.bloch_norm)
    throw BlochNormError("Bloch vectors must lie in the unit ball");
  return 4.0 * p0 * p1 * cross(r0, r1).norm();
}

double created_correlation(const AffineChannel& ch, const CCState& c,
                           const ToleranceConfig& tol) {
  if (!ch.lambda.is_finite() || !ch.t.is_finite())
    throw InvalidChannelError("affine channel has non-finite parameters");
  const Vec3 n = c.u_axis.normalized();
  return 2.0 * cross(ch.t, ch.lambda * n).norm() * classical_correlation(c, tol);
}

double created_correlation_max_state(const AffineChannel& ch, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-9)
    throw NonUnitVectorError("input axis must be a unit vector");
  return 2.0 * cross(ch.t, ch.lambda * n).norm();
}

namespace {

Vec3 sphere_point(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

// One golden-section pass over [lo, hi], keeping the better interior point.
template <typename F>
void golden_step(F&& f, double& lo, double& hi, double& best_x, double& best_f) {
  constexpr double inv_phi = 0.6180339887498949;
  const double x1 = hi - inv_phi * (hi - lo);
  const double x2 = lo + inv_phi * (hi - lo);
  const double f1 = f(x1);
  const double f2 = f(x2);
  if (f1 >= f2) {
    hi = x2;
    if (f1 > best_f) {
      best_f = f1;
      best_x = x1;
    }
  } else {
    lo = x1;
    if (f2 > best_f) {
      best_f = f2;
      best_x = x2;
    }
  }
}

}  // namespace

QMaxResult q_max(const AffineChannel& ch, int lattice_points, int refine_iterations,
                 const ToleranceConfig& tol) {
  if (!ch.lambda.is_finite() || !ch.t.is_finite())
    throw InvalidChannelError("affine channel has non-finite parameters");
  lattice_points = std::max(lattice_points, 16);

  const auto objective = [&](const Vec3& n) { return 2.0 * cross(ch.t, ch.lambda * n).norm(); };

  // Fibonacci lattice scan.
  constexpr double golden_angle = 2.39996322972865332;  // pi (3 - sqrt 5)
  Vec3 best_n = Vec3::unit_z();
  double best = objective(best_n);
  for (int k = 0; k < lattice_points; ++k) {
    const double z = 1.0 - 2.0 * (k + 0.5) / lattice_points;
    const double phi = golden_angle * k;
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 n{s * std::cos(phi), s * std::sin(phi), z};
    const double val = objective(n);
    if (val > best) {
      best = val;
      best_n = n;
    }
  }

  // Local refinement in spherical coordinates around the best node.
  double theta = std::acos(std::clamp(best_n.z, -1.0, 1.0));
  double phi = std::atan2(best_n.y, best_n.x);
  const double spacing = 2.0 * kPi / std::sqrt(static_cast<double>(lattice_points));
  double th_lo = theta - spacing, th_hi = theta + spacing;
  double ph_lo = phi - spacing, ph_hi = phi + spacing;
  for (int it = 0; it < refine_iterations; ++it) {
    golden_step([&](double th) { return objective(sphere_point(th, phi)); }, th_lo, th_hi, theta,
                best);
    golden_step([&](double ph) { return objective(sphere_point(theta, ph)); }, ph_lo, ph_hi, phi,
                best);
  }
  best_n = sphere_point(theta, phi);
  best = std::max(best, objective(best_n));

  QMaxResult out;
  out.value = best;
  out.argmax_n = best_n;
  const CanonicalForm cf = canonical_form(ch, tol);
  const Vec3 l = cf.lambda_d;
  const double sum2 = l.x * l.x + l.y * l.y + l.z * l.z;
  const double sum4 =
      l.x * l.x * l.x * l.x + l.y * l.y * l.y * l.y + l.z * l.z * l.z * l.z;
  out.closed_form_value = sum2 > 0.0 ? 2.0 * ch.t.norm() * std::sqrt(sum4 / sum2) : 0.0;
  return out;
}

}  // namespace qcorr
