// Dense linear-algebra kernel: Hermitian eigensolver (cyclic Jacobi),
// trace norm, and a real 3x3 SVD with proper-rotation factors.
#pragma once

#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/tolerances.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

struct EigenSystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, matching order

  explicit EigenSystem(int dim) : eigenvalues(dim), eigenvectors(dim) {}
};

// Eigendecomposition of a Hermitian matrix (dim <= 4) by cyclic Jacobi
// sweeps. Throws NonHermitianError when the input fails the gate.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m,
                                  const ToleranceConfig& tol = kTol);

// Sum of singular values, tr sqrt(M^dag M).
double trace_norm(const ComplexMatrix& m, const ToleranceConfig& tol = kTol);

// L = S diag(d) T with det(S) = det(T) = +1; sign surplus lives in d, whose
// entries are ordered by descending magnitude.
struct Svd3 {
  Mat3 s;
  Vec3 d;
  Mat3 t;
};

Svd3 svd3_rotations(const Mat3& l, const ToleranceConfig& tol = kTol);

// sqrt of a positive semidefinite matrix; eigenvalues inside the psd floor
// are clamped to zero.
ComplexMatrix sqrt_psd(const ComplexMatrix& m, const ToleranceConfig& tol = kTol);

}  // namespace qcorr
