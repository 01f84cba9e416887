#include "qcorr/states.hpp"

#include <cmath>

namespace qcorr {

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, const ToleranceConfig& tol) {
  if (m.dim() != 2 && m.dim() != 4)
    throw DimensionMismatchError("density matrix must be 2x2 or 4x4");
  if (!m.is_finite()) throw DomainError("density matrix has non-finite entries");
  if (m.hermiticity_defect() > tol.hermiticity)
    throw NonHermitianError("density matrix is not Hermitian within tolerance");
  if (std::abs(m.trace() - cplx(1.0, 0.0)) > tol.trace_one * 10.0)
    throw DomainError("density matrix trace differs from one");
  const EigenSystem es = hermitian_eigensystem(m, tol);
  if (es.eigenvalues.front() < -tol.psd_floor)
    throw NotPositiveError("density matrix has a negative eigenvalue");
  return DensityMatrix(m.hermitized());
}

void validate_qc(const QCState& q, const ToleranceConfig& tol) {
  for (const ComplexMatrix* x : {&q.x0, &q.x1}) {
    if (x->dim() != 2) throw DimensionMismatchError("QC blocks must be 2x2");
    if (x->hermiticity_defect() > tol.hermiticity)
      throw NonHermitianError("QC block is not Hermitian");
    const EigenSystem es = hermitian_eigensystem(*x, tol);
    if (es.eigenvalues.front() < -tol.psd_floor)
      throw NotPositiveError("QC block has a negative eigenvalue");
  }
  const double tr = (q.x0.trace() + q.x1.trace()).real();
  if (std::abs(tr - 1.0) > tol.trace_one * 10.0)
    throw DomainError("QC block traces must sum to one");
}

void validate_cc(const CCState& c, const ToleranceConfig& tol) {
  double sum = 0.0;
  for (const auto& row : c.p)
    for (double pij : row) {
      if (!(pij >= -0.0) || !std::isfinite(pij))
        throw DomainError("CC probabilities must be nonnegative");
      sum += pij;
    }
  if (std::abs(sum - 1.0) > tol.trace_one * 10.0)
    throw DomainError("CC probabilities must sum to one");
  for (const Vec3* axis : {&c.u_axis, &c.v_axis})
    if (std::abs(axis->norm() - 1.0) > 1e-9)
      throw NonUnitVectorError("CC basis axis is not unit length");
}

void validate_pure_qc(const PureQCState& q, const ToleranceConfig& tol) {
  if (q.p0 < -tol.trace_one || q.p1 < -tol.trace_one || std::abs(q.p0 + q.p1 - 1.0) > tol.trace_one * 10.0)
    throw DomainError("block probabilities must be nonnegative and sum to one");
  for (const Vec3* n : {&q.n0, &q.n1})
    if (std::abs(n->norm() - 1.0) > 1e-9)
      throw NonUnitVectorError("pure-block Bloch vector is not unit length");
}

QCState qc_from_bloch(double p0, const Vec3& r0, double p1, const Vec3& r1) {
  QCState q;
  q.x0 = dot_sigma(r0 * p0);
  q.x0(0, 0) += p0;
  q.x0(1, 1) += p0;
  q.x0 = q.x0 * cplx(0.5, 0.0);
  q.x1 = dot_sigma(r1 * p1);
  q.x1(0, 0) += p1;
  q.x1(1, 1) += p1;
  q.x1 = q.x1 * cplx(0.5, 0.0);
  return q;
}

DensityMatrix density_from_bloch(const Vec3& r, const ToleranceConfig& tol) {
  if (!r.is_finite()) throw DomainError("Bloch vector has non-finite components");
  if (r.norm() > 1.0 + tol.bloch_norm)
    throw BlochNormError("Bloch vector lies outside the unit ball");
  ComplexMatrix m = dot_sigma(r);
  m(0, 0) += 1.0;
  m(1, 1) += 1.0;
  return DensityMatrix::from_matrix(m * cplx(0.5, 0.0), tol);
}

Vec3 bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionMismatchError("Bloch vector requires a 2x2 state");
  Vec3 r;
  r.x = (rho.matrix() * pauli(1)).trace().real();
  r.y = (rho.matrix() * pauli(2)).trace().real();
  r.z = (rho.matrix() * pauli(3)).trace().real();
  return r;
}

DensityMatrix assemble_qc(const QCState& q, const ToleranceConfig& tol) {
  validate_qc(q, tol);
  ComplexMatrix m(4);
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap) {
      m(2 * a + 0, 2 * ap + 0) = q.x0(a, ap);
      m(2 * a + 1, 2 * ap + 1) = q.x1(a, ap);
    }
  return DensityMatrix::from_matrix(m, tol);
}

DensityMatrix assemble_cc(const CCState& c, const ToleranceConfig& tol) {
  validate_cc(c, tol);
  const Vec3 u = c.u_axis.normalized();
  const Vec3 v = c.v_axis.normalized();
  ComplexMatrix m(4);
  for (int i = 0; i < 2; ++i) {
    const ComplexMatrix pu = bloch_projector(i == 0 ? u : -u);
    for (int j = 0; j < 2; ++j) {
      const ComplexMatrix pv = bloch_projector(j == 0 ? v : -v);
      m = m + cplx(c.p[i][j], 0.0) * kron(pu, pv);
    }
  }
  return DensityMatrix::from_matrix(m, tol);
}

DensityMatrix assemble_pure_qc(const PureQCState& q, const ToleranceConfig& tol) {
  validate_pure_qc(q, tol);
  QCState blocks;
  blocks.x0 = bloch_projector(q.n0.normalized()) * cplx(q.p0, 0.0);
  blocks.x1 = bloch_projector(q.n1.normalized()) * cplx(q.p1, 0.0);
  return assemble_qc(blocks, tol);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma,
                const ToleranceConfig& tol) {
  if (rho.dim() != sigma.dim())
    throw DimensionMismatchError("fidelity requires states of equal dimension");
  const ComplexMatrix product = sqrt_psd(rho.matrix(), tol) * sqrt_psd(sigma.matrix(), tol);
  return std::min(1.0, trace_norm(product, tol));
}

}  // namespace qcorr
