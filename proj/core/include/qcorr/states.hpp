// Qubit and two-qubit state representations plus Uhlmann fidelity.
//
// Two-qubit matrices use the A-major convention: the A factor of A (x) B owns
// the slow index, so entry (2a+b, 2a'+b') couples |a b> with |a' b'|.
#pragma once

#include "qcorr/linalg.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/tolerances.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

// Positive unit-trace Hermitian matrix (2x2 or 4x4), validated on entry.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const ComplexMatrix& m, const ToleranceConfig& tol = kTol);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  explicit DensityMatrix(const ComplexMatrix& m) : m_(m) {}
  ComplexMatrix m_;
};

// Quantum-classical state rho = X0 (x) |0><0| + X1 (x) |1><1|.
struct QCState {
  ComplexMatrix x0{2};
  ComplexMatrix x1{2};
};

// Pure-block QC state: blocks p_i |n_i><n_i| with unit Bloch vectors n_i.
struct PureQCState {
  double p0 = 0.5;
  double p1 = 0.5;
  Vec3 n0 = Vec3::unit_z();
  Vec3 n1 = Vec3::unit_z();
};

// Classically correlated state, probabilities over two product bases.
struct CCState {
  std::array<std::array<double, 2>, 2> p{{{0.0, 0.0}, {0.0, 0.0}}};
  Vec3 u_axis = Vec3::unit_z();
  Vec3 v_axis = Vec3::unit_z();
};

void validate_qc(const QCState& q, const ToleranceConfig& tol = kTol);
void validate_cc(const CCState& c, const ToleranceConfig& tol = kTol);
void validate_pure_qc(const PureQCState& q, const ToleranceConfig& tol = kTol);

// QC state with Bloch-ball blocks p_i (I + r_i . sigma)/2.
QCState qc_from_bloch(double p0, const Vec3& r0, double p1, const Vec3& r1);

DensityMatrix density_from_bloch(const Vec3& r, const ToleranceConfig& tol = kTol);
Vec3 bloch_from_density(const DensityMatrix& rho);

DensityMatrix assemble_qc(const QCState& q, const ToleranceConfig& tol = kTol);
DensityMatrix assemble_cc(const CCState& c, const ToleranceConfig& tol = kTol);
DensityMatrix assemble_pure_qc(const PureQCState& q, const ToleranceConfig& tol = kTol);

// Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), computed as the trace
// norm of sqrt(rho) sqrt(sigma).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma,
                const ToleranceConfig& tol = kTol);

}  // namespace qcorr
