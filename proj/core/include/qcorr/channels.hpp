// Qubit channels: Kraus and affine forms, CPTP validation, canonical form,
// unital / semi-classical classification, and example channel constructors.
#pragma once

#include <string>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/states.hpp"
#include "qcorr/tolerances.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

struct KrausChannel {
  std::vector<ComplexMatrix> kraus;
  std::string name;
};

// Affine action on Bloch vectors, r -> lambda r + t.
struct AffineChannel {
  Mat3 lambda = Mat3::identity();
  Vec3 t;
  std::string name;
};

// lambda = S diag(lambda_d) T with proper rotations S, T; t_c = S^T t.
struct CanonicalForm {
  Mat3 s_rot;
  Mat3 t_rot;
  Vec3 lambda_d;
  Vec3 t_c;
};

struct ValidityReport {
  double trace_residual = 0.0;
  double min_choi_eigenvalue = 0.0;
  bool valid = false;
};

// lambda_ij = tr(sigma_i E(sigma_j))/2, t_i = tr(sigma_i E(I))/2.
AffineChannel affine_from_kraus(const KrausChannel& k, const ToleranceConfig& tol = kTol);

// Trace-preservation residual plus the minimum eigenvalue of the Choi matrix
// C = sum_ij |i><j| (x) E(|i><j|).
ValidityReport validate_cptp(const KrausChannel& k, const ToleranceConfig& tol = kTol);

DensityMatrix apply(const KrausChannel& k, const DensityMatrix& rho,
                    const ToleranceConfig& tol = kTol);
DensityMatrix apply(const AffineChannel& a, const DensityMatrix& rho,
                    const ToleranceConfig& tol = kTol);

// (E (x) I) on a two-qubit state, acting on the A side.
DensityMatrix apply_to_a_side(const KrausChannel& k, const DensityMatrix& rho,
                              const ToleranceConfig& tol = kTol);
DensityMatrix apply_to_a_side(const AffineChannel& a, const DensityMatrix& rho,
                              const ToleranceConfig& tol = kTol);

// Blocks of (E (x) I)(sigma_cc) in the B basis of the CC state.
QCState apply_to_cc(const AffineChannel& a, const CCState& c,
                    const ToleranceConfig& tol = kTol);

CanonicalForm canonical_form(const AffineChannel& a, const ToleranceConfig& tol = kTol);

bool is_unital(const AffineChannel& a, double tol = kTol.classify);

// Rank-one lambda (vectorized lambda is a product) with t along the output
// axis; constant channels count as semi-classical.
bool is_semiclassical(const AffineChannel& a, double tol = kTol.classify);

KrausChannel amplitude_damping(double gamma);

// Projective measurement along a, preparing |m0> or |m1> on the two outcomes.
KrausChannel measure_prepare(const Vec3& a, const Vec3& m0, const Vec3& m1,
                             const ToleranceConfig& tol = kTol);

// lambda r = (a.r) c with translation t b; screens the image of the Bloch
// ball and rejects maps that leave it.
AffineChannel semiclassical_example(const Vec3& a, const Vec3& b, const Vec3& c, double t,
                                    const ToleranceConfig& tol = kTol);

// Random CPTP channel from a Haar-ish random isometry into qubit (x) env.
KrausChannel random_cptp(RngStream& rng, int env_dim = 4);

// Random mixed-unitary (hence unital) channel.
KrausChannel random_unital(RngStream& rng, int num_unitaries = 3);

// Random semi-classical channel, c = b and |a| + |t| < 1.
AffineChannel random_semiclassical(RngStream& rng);

}  // namespace qcorr
