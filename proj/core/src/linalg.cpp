#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcorr {

namespace {

double off_diagonal_mass(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const ToleranceConfig& tol) {
  if (!m.is_finite()) throw NonHermitianError("eigensystem input has non-finite entries");
  if (m.hermiticity_defect() > tol.hermiticity)
    throw NonHermitianError("matrix is not Hermitian within tolerance");

  const int n = m.dim();
  ComplexMatrix a = m.hermitized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = tol.jacobi_off_diagonal * std::max(1.0, a.frobenius_norm());
  constexpr int kMaxSweeps = 64;

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass(a) > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double abs_apq = std::abs(apq);
        if (abs_apq == 0.0) continue;

        // Phase-reduce the 2x2 block to a real symmetric one, then rotate.
        const cplx phase = apq / abs_apq;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * abs_apq);
        const double tt = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, tt);
        const double s = tt * c;

        // Unitary U = diag(phase, 1) * [[c, s], [-s, c]] acting on (p, q).
        const cplx upp = phase * c, upq = phase * s;
        const cplx uqp = -s, uqq = c;

        for (int k = 0; k < n; ++k) {  // columns: A <- A U
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (int k = 0; k < n; ++k) {  // rows: A <- U^dag A
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (int k = 0; k < n; ++k) {  // accumulate V <- V U
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  // Ascending eigenvalue order; ties keep the original column order.
  std::array<int, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.begin() + n,
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(idx[k], idx[k]).real();
    // Deterministic phase: largest component made real positive.
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double mag = std::abs(v(i, idx[k]));
      if (mag > best) {
        best = mag;
        imax = i;
      }
    }
    cplx ph(1.0, 0.0);
    if (best > 0.0) ph = std::conj(v(imax, idx[k])) / best;
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, idx[k]) * ph;
  }
  return out;
}

double trace_norm(const ComplexMatrix& m, const ToleranceConfig& tol) {
  if (!m.is_finite()) throw DomainError("trace_norm input has non-finite entries");
  const ComplexMatrix gram = (m.adjoint() * m).hermitized();
  const EigenSystem es = hermitian_eigensystem(gram, tol);
  // Eigenvalues at the rounding floor of the Gram matrix are noise; their
  // square roots would otherwise pollute the sum at the 1e-8 scale.
  const double floor = es.eigenvalues.back() * 1e-15;
  double sum = 0.0;
  for (double lam : es.eigenvalues)
    if (lam > floor) sum += std::sqrt(lam);
  return sum;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, const ToleranceConfig& tol) {
  const EigenSystem es = hermitian_eigensystem(m, tol);
  const int n = m.dim();
  const double floor = std::max(0.0, es.eigenvalues.back()) * 1e-15;
  ComplexMatrix r(n);
  for (int k = 0; k < n; ++k) {
    const double lam = es.eigenvalues[k];
    if (lam < -tol.psd_floor)
      throw NotPositiveError("matrix is not positive semidefinite within tolerance");
    if (lam <= floor) continue;
    const double root = std::sqrt(lam);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r(i, j) += root * es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k));
  }
  return r;
}

namespace {

// Deterministic unit vector orthogonal to u.
Vec3 orthogonal_unit(const Vec3& u) {
  const Vec3 axes[3] = {Vec3::unit_x(), Vec3::unit_y(), Vec3::unit_z()};
  int best = 0;
  double bestdot = 2.0;
  for (int k = 0; k < 3; ++k) {
    const double d = std::abs(u.dot(axes[k]));
    if (d < bestdot) {
      bestdot = d;
      best = k;
    }
  }
  const Vec3 w = axes[best] - u * u.dot(axes[best]);
  return w.normalized();
}

}  // namespace

Svd3 svd3_rotations(const Mat3& l, const ToleranceConfig& tol) {
  if (!l.is_finite()) throw DomainError("svd3 input has non-finite entries");

  // Right singular vectors from the spectral decomposition of L^T L.
  const Mat3 lt = l.transpose();
  const Mat3 gram = lt * l;
  ComplexMatrix g(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = 0.5 * (gram(i, j) + gram(j, i));
  const EigenSystem es = hermitian_eigensystem(g, tol);

  // Descending singular values; ties keep the eigensystem's column order so
  // degenerate inputs (identity and friends) stay in natural position.
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return es.eigenvalues[i] > es.eigenvalues[j]; });
  Vec3 sigma{std::sqrt(std::max(0.0, es.eigenvalues[order[0]])),
             std::sqrt(std::max(0.0, es.eigenvalues[order[1]])),
             std::sqrt(std::max(0.0, es.eigenvalues[order[2]]))};
  Vec3 v[3];
  for (int k = 0; k < 3; ++k) {
    const int col = order[k];
    v[k] = Vec3{es.eigenvectors(0, col).real(), es.eigenvectors(1, col).real(),
                es.eigenvectors(2, col).real()}
               .normalized();
  }

  // Sign convention: first nonzero component of each right singular vector
  // made positive; proper rotation restored on the last column if needed.
  for (auto& vk : v) {
    const double comp[3] = {vk.x, vk.y, vk.z};
    for (double ci : comp) {
      if (std::abs(ci) > 1e-12) {
        if (ci < 0.0) vk = -vk;
        break;
      }
    }
  }
  if (Mat3::from_columns(v[0], v[1], v[2]).det() < 0.0) v[2] = -v[2];

  // Left factor: u0 along L v0, u1 orthogonalized, u2 completes the frame,
  // so S is always proper and any sign surplus lands in d.
  const double scale = std::max(1.0, sigma.x);
  Vec3 u[3];
  const Vec3 lv0 = l * v[0];
  if (lv0.norm() > 1e-14 * scale) {
    u[0] = lv0.normalized();
  } else {
    u[0] = Vec3::unit_x();
  }
  const Vec3 lv1 = l * v[1];
  const Vec3 w1 = lv1 - u[0] * u[0].dot(lv1);
  if (w1.norm() > 1e-14 * scale) {
    u[1] = w1.normalized();
  } else {
    u[1] = orthogonal_unit(u[0]);
  }
  u[2] = cross(u[0], u[1]);

  Svd3 out;
  out.s = Mat3::from_columns(u[0], u[1], u[2]);
  out.t = Mat3::from_columns(v[0], v[1], v[2]).transpose();
  out.d = Vec3{u[0].dot(l * v[0]), u[1].dot(l * v[1]), u[2].dot(l * v[2])};
  return out;
}

}  // namespace qcorr
