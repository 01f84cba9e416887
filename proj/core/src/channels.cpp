#include "qcorr/channels.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

ComplexMatrix kraus_apply(const KrausChannel& k, const ComplexMatrix& x) {
  ComplexMatrix out(2);
  for (const ComplexMatrix& kk : k.kraus) out = out + kk * x * kk.adjoint();
  return out;
}

double trace_preservation_residual(const KrausChannel& k) {
  ComplexMatrix sum(2);
  for (const ComplexMatrix& kk : k.kraus) sum = sum + kk.adjoint() * kk;
  return (sum - ComplexMatrix::identity(2)).max_abs();
}

// Linear extension of the affine action to arbitrary 2x2 inputs:
// E(X) = x0 (I + t.sigma) + sum_j x_j (lambda e_j).sigma, X = x0 I + x.sigma.
ComplexMatrix affine_apply_linear(const AffineChannel& a, const ComplexMatrix& x) {
  const cplx x0 = 0.5 * x.trace();
  cplx comp[3];
  for (int j = 0; j < 3; ++j) comp[j] = 0.5 * (pauli(j + 1) * x).trace();

  ComplexMatrix out = ComplexMatrix::identity(2) * x0;
  out = out + dot_sigma(a.t) * x0;
  for (int j = 0; j < 3; ++j) {
    const Vec3 col = a.lambda.column(j);
    out = out + dot_sigma(col) * comp[j];
  }
  return out;
}

}  // namespace

AffineChannel affine_from_kraus(const KrausChannel& k, const ToleranceConfig& tol) {
  if (k.kraus.empty()) throw InvalidChannelError("channel has no Kraus operators");
  for (const ComplexMatrix& kk : k.kraus)
    if (kk.dim() != 2) throw DimensionMismatchError("Kraus operators must be 2x2");
  if (trace_preservation_residual(k) > tol.cptp)
    throw NotTracePreservingError("Kraus set does not preserve the trace");

  AffineChannel a;
  a.name = k.name;
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix image = kraus_apply(k, pauli(j + 1));
    for (int i = 0; i < 3; ++i)
      a.lambda(i, j) = 0.5 * (pauli(i + 1) * image).trace().real();
  }
  const ComplexMatrix image_id = kraus_apply(k, pauli(0));
  a.t = Vec3{0.5 * (pauli(1) * image_id).trace().real(),
             0.5 * (pauli(2) * image_id).trace().real(),
             0.5 * (pauli(3) * image_id).trace().real()};
  return a;
}

ValidityReport validate_cptp(const KrausChannel& k, const ToleranceConfig& tol) {
  for (const ComplexMatrix& kk : k.kraus)
    if (kk.dim() != 2) throw DimensionMismatchError("Kraus operators must be 2x2");
  ValidityReport report;
  report.trace_residual = trace_preservation_residual(k);

  ComplexMatrix choi(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix eij(2);
      eij(i, j) = 1.0;
      const ComplexMatrix image = kraus_apply(k, eij);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) choi(2 * i + r, 2 * j + c) = image(r, c);
    }
  const EigenSystem es = hermitian_eigensystem(choi.hermitized(), tol);
  report.min_choi_eigenvalue = es.eigenvalues.front();
  report.valid = report.trace_residual <= tol.cptp && report.min_choi_eigenvalue >= -tol.cptp;
  return report;
}

DensityMatrix apply(const KrausChannel& k, const DensityMatrix& rho, const ToleranceConfig& tol) {
  if (rho.dim() != 2) throw DimensionMismatchError("expected a single-qubit state");
  if (trace_preservation_residual(k) > tol.cptp)
    throw InvalidChannelError("Kraus set does not preserve the trace");
  return DensityMatrix::from_matrix(kraus_apply(k, rho.matrix()).hermitized(), tol);
}

DensityMatrix apply(const AffineChannel& a, const DensityMatrix& rho, const ToleranceConfig& tol) {
  if (rho.dim() != 2) throw DimensionMismatchError("expected a single-qubit state");
  if (!a.lambda.is_finite() || !a.t.is_finite())
    throw InvalidChannelError("affine channel has non-finite parameters");
  const Vec3 image = a.lambda * bloch_from_density(rho) + a.t;
  if (image.norm() > 1.0 + 1e-8)
    throw InvalidChannelError("affine map sends the state outside the Bloch ball");
  ComplexMatrix m = dot_sigma(image);
  m(0, 0) += 1.0;
  m(1, 1) += 1.0;
  return DensityMatrix::from_matrix(m * cplx(0.5, 0.0), tol);
}

DensityMatrix apply_to_a_side(const KrausChannel& k, const DensityMatrix& rho,
                              const ToleranceConfig& tol) {
  if (rho.dim() != 4) throw DimensionMismatchError("expected a two-qubit state");
  if (trace_preservation_residual(k) > tol.cptp)
    throw InvalidChannelError("Kraus set does not preserve the trace");
  ComplexMatrix out(4);
  for (const ComplexMatrix& kk : k.kraus) {
    const ComplexMatrix big = kron(kk, ComplexMatrix::identity(2));
    out = out + big * rho.matrix() * big.adjoint();
  }
  return DensityMatrix::from_matrix(out.hermitized(), tol);
}

DensityMatrix apply_to_a_side(const AffineChannel& a, const DensityMatrix& rho,
                              const ToleranceConfig& tol) {
  if (rho.dim() != 4) throw DimensionMismatchError("expected a two-qubit state");
  if (!a.lambda.is_finite() || !a.t.is_finite())
    throw InvalidChannelError("affine channel has non-finite parameters");
  // rho = sum_ij |i><j|_A (x) B_ij; map each A-side dyad through the channel.
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix dyad(2);
      dyad(i, j) = 1.0;
      const ComplexMatrix mapped = affine_apply_linear(a, dyad);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          const cplx factor = mapped(r, c);
          if (factor == cplx{}) continue;
          for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp)
              out(2 * r + b, 2 * c + bp) += factor * rho.matrix()(2 * i + b, 2 * j + bp);
        }
    }
  return DensityMatrix::from_matrix(out.hermitized(), tol);
}

QCState apply_to_cc(const AffineChannel& a, const CCState& c, const ToleranceConfig& tol) {
  validate_cc(c, tol);
  if (!a.lambda.is_finite() || !a.t.is_finite())
    throw InvalidChannelError("affine channel has non-finite parameters");
  const Vec3 n = c.u_axis.normalized();
  const Vec3 plus = a.lambda * n + a.t;
  const Vec3 minus = a.lambda * (-n) + a.t;

  // E(|u_i><u_i|) = (I + (lambda u_i + t).sigma)/2, gathered per B outcome.
  auto block = [&](double w_plus, double w_minus) {
    ComplexMatrix m = dot_sigma(plus * w_plus + minus * w_minus);
    m(0, 0) += w_plus + w_minus;
    m(1, 1) += w_plus + w_minus;
    return m * cplx(0.5, 0.0);
  };
  QCState out;
  out.x0 = block(c.p[0][0], c.p[1][0]);
  out.x1 = block(c.p[0][1], c.p[1][1]);
  return out;
}

CanonicalForm canonical_form(const AffineChannel& a, const ToleranceConfig& tol) {
  if (!a.lambda.is_finite() || !a.t.is_finite())
    throw InvalidChannelError("affine channel has non-finite parameters");
  const Svd3 svd = svd3_rotations(a.lambda, tol);
  CanonicalForm cf;
  cf.s_rot = svd.s;
  cf.t_rot = svd.t;
  cf.lambda_d = svd.d;
  cf.t_c = svd.s.transpose() * a.t;
  return cf;
}

bool is_unital(const AffineChannel& a, double tol) { return a.t.norm() <= tol; }

bool is_semiclassical(const AffineChannel& a, double tol) {
  const Svd3 svd = svd3_rotations(a.lambda);
  const double s1 = std::abs(svd.d.x);
  const double s2 = std::abs(svd.d.y);
  if (s1 <= tol) return true;  // constant channel, outputs fixed by t alone
  if (s2 > tol) return false;  // lambda has rank > 1
  const double tnorm = a.t.norm();
  if (tnorm <= tol) return true;
  const Vec3 b = svd.s.column(0);
  return cross(a.t, b).norm() / tnorm <= kTol.parallel_sin;
}

KrausChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw GammaRangeError("damping parameter must lie in [0, 1]");
  KrausChannel k;
  k.name = "amplitude_damping";
  ComplexMatrix e0(2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - gamma);
  ComplexMatrix e1(2);
  e1(0, 1) = std::sqrt(gamma);
  k.kraus = {e0, e1};
  return k;
}

KrausChannel measure_prepare(const Vec3& a, const Vec3& m0, const Vec3& m1,
                             const ToleranceConfig& tol) {
  for (const Vec3* v : {&a, &m0, &m1})
    if (std::abs(v->norm() - 1.0) > 1e-9 || !v->is_finite())
      throw NonUnitVectorError("measure_prepare arguments must be unit vectors");
  (void)tol;
  KrausChannel k;
  k.name = "measure_prepare";
  k.kraus = {ket_bra(ket_from_bloch(m0), ket_from_bloch(a)),
             ket_bra(ket_from_bloch(m1), ket_from_bloch(-a))};
  return k;
}

AffineChannel semiclassical_example(const Vec3& a, const Vec3& b, const Vec3& c, double t,
                                    const ToleranceConfig& tol) {
  if (!a.is_finite() || !std::isfinite(t)) throw DomainError("non-finite parameters");
  for (const Vec3* v : {&b, &c})
    if (std::abs(v->norm() - 1.0) > 1e-9)
      throw NonUnitVectorError("axes b and c must be unit vectors");

  AffineChannel ch;
  ch.name = "rank_one_example";
  ch.lambda = outer(c, a);
  ch.t = b * t;
  // Image of the Bloch ball is the segment (a.r) c + t b, |a.r| <= |a|.
  const double reach = std::max((c * a.norm() + ch.t).norm(), (c * (-a.norm()) + ch.t).norm());
  if (reach > 1.0 + tol.reconstruction)
    throw NotPositiveError("map sends the Bloch ball outside the state space");
  return ch;
}

KrausChannel random_cptp(RngStream& rng, int env_dim) {
  env_dim = std::clamp(env_dim, 1, 4);
  // Random isometry: orthonormalize two Gaussian columns in C^(2*env).
  const int rows = 2 * env_dim;
  std::array<std::array<cplx, 8>, 2> col{};
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < rows; ++i) col[j][i] = cplx(rng.normal(), rng.normal());
  // Modified Gram-Schmidt.
  auto dot = [rows](const auto& u, const auto& v) {
    cplx s{};
    for (int i = 0; i < rows; ++i) s += std::conj(u[i]) * v[i];
    return s;
  };
  auto scale = [rows](auto& u, double s) {
    for (int i = 0; i < rows; ++i) u[i] *= s;
  };
  scale(col[0], 1.0 / std::sqrt(dot(col[0], col[0]).real()));
  const cplx proj = dot(col[0], col[1]);
  for (int i = 0; i < rows; ++i) col[1][i] -= proj * col[0][i];
  scale(col[1], 1.0 / std::sqrt(dot(col[1], col[1]).real()));

  KrausChannel k;
  k.name = "random_cptp";
  for (int e = 0; e < env_dim; ++e) {
    ComplexMatrix kk(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) kk(i, j) = col[j][2 * e + i];
    k.kraus.push_back(kk);
  }
  return k;
}

KrausChannel random_unital(RngStream& rng, int num_unitaries) {
  num_unitaries = std::clamp(num_unitaries, 1, 8);
  std::vector<double> w(num_unitaries);
  double sum = 0.0;
  for (double& wi : w) {
    wi = -std::log(std::max(rng.uniform(), 0x1.0p-60));
    sum += wi;
  }
  KrausChannel k;
  k.name = "random_unital";
  for (int u = 0; u < num_unitaries; ++u) {
    // Random SU(2) via a Haar-ish quaternion.
    double q[4];
    double n2 = 0.0;
    for (double& qi : q) {
      qi = rng.normal();
      n2 += qi * qi;
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (double& qi : q) qi *= inv;
    ComplexMatrix uu(2);
    uu(0, 0) = cplx(q[0], q[1]);
    uu(0, 1) = cplx(q[2], q[3]);
    uu(1, 0) = cplx(-q[2], q[3]);
    uu(1, 1) = cplx(q[0], -q[1]);
    k.kraus.push_back(uu * cplx(std::sqrt(w[u] / sum), 0.0));
  }
  return k;
}

AffineChannel random_semiclassical(RngStream& rng) {
  const Vec3 a_dir = rng.unit_vector();
  const Vec3 b = rng.unit_vector();
  const double u = rng.uniform();
  const double v = rng.uniform();
  const double a_len = 0.95 * u * (1.0 - v);
  const double t_len = 0.95 * v;
  AffineChannel ch = semiclassical_example(a_dir * a_len, b, b, t_len);
  ch.name = "random_semiclassical";
  return ch;
}

}  // namespace qcorr
