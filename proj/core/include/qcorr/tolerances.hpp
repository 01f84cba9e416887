// Central tolerance configuration shared by all numerical kernels.
#pragma once

namespace qcorr {

struct ToleranceConfig {
  // Hermiticity gate for eigensolver inputs, max-entry norm of M - M^dag.
  double hermiticity = 1e-12;
  // Relative off-diagonal Frobenius mass at which Jacobi sweeps stop.
  double jacobi_off_diagonal = 1e-14;
  // Residuals of eigen/SVD reconstructions.
  double reconstruction = 1e-10;
  // Density-matrix trace and probability-sum checks.
  double trace_one = 1e-12;
  // Eigenvalues of positive operators may dip this far below zero.
  double psd_floor = 1e-10;
  // Bloch vectors may exceed unit norm by this much.
  double bloch_norm = 1e-12;
  // Unit-vector norm checks (axes, pure-state directions).
  double unit_vector = 1e-12;
  // Trace-preservation residual and Choi eigenvalue floor for CPTP checks.
  double cptp = 1e-10;
  // Two vectors count as parallel when |sin(angle)| is below this band.
  double parallel_sin = 1e-8;
  // Default rank / classification tolerance exposed on the CLI as --tol.
  double classify = 1e-8;
};

inline constexpr ToleranceConfig kTol{};

}  // namespace qcorr
