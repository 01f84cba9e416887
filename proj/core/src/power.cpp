#include "qcorr/power.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/linalg.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    // Tricomi-style initial guess, then Newton on P_n.
    double xi = std::cos(kPi * (4.0 * k + 3.0) / (4.0 * n + 2.0));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = xi;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * xi * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      const double dx = p1 / pp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[k] = -xi;
    x[n - 1 - k] = xi;
    const double wk = 2.0 / ((1.0 - xi * xi) * pp * pp);
    w[k] = wk;
    w[n - 1 - k] = wk;
  }
  if (n % 2 == 1) {
    // Central node of odd rules sits at zero exactly.
    x[n / 2] = 0.0;
    double p0 = 1.0, p1 = 0.0;
    for (int j = 2; j <= n; ++j) {
      const double p2 = (-(j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    const double pp = n * (0.0 * p1 - p0) / (0.0 - 1.0);
    w[n / 2] = 2.0 / (pp * pp);
  }
}

std::vector<SphereNode> sphere_quadrature(int order) {
  if (order < 2) throw OrderError("quadrature order must be at least 2");
  std::vector<double> x, w;
  gauss_legendre(order, x, w);

  std::vector<double> theta(order), wtheta(order);
  double norm = 0.0;
  for (int i = 0; i < order; ++i) {
    theta[i] = 0.5 * kPi * (x[i] + 1.0);
    wtheta[i] = w[i] * std::sin(theta[i]);
    norm += wtheta[i];
  }

  const int nphi = 2 * order;
  std::vector<SphereNode> nodes;
  nodes.reserve(static_cast<std::size_t>(order) * nphi);
  for (int i = 0; i < order; ++i) {
    const double s = std::sin(theta[i]);
    const double c = std::cos(theta[i]);
    const double wt = wtheta[i] / (norm * nphi);
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2.0 * kPi * j / nphi;
      nodes.push_back({Vec3{s * std::cos(phi), s * std::sin(phi), c}, wt});
    }
  }
  return nodes;
}

namespace {

// Frame whose poles sit on the kernel of M = lambda^T (|t|^2 I - t t^T) lambda
// and whose azimuthal panels align with M's principal axes. In this frame the
// integrand 2 |t x lambda n| is analytic on every quadrature panel, so the
// product rule converges spectrally instead of stalling on the |.| kinks.
Mat3 alignment_frame(const AffineChannel& ch) {
  const double t2 = ch.t.dot(ch.t);
  Mat3 p = Mat3::identity() * t2 - outer(ch.t, ch.t);
  const Mat3 m = ch.lambda.transpose() * (p * ch.lambda);

  ComplexMatrix g(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = 0.5 * (m(i, j) + m(j, i));
  const EigenSystem es = hermitian_eigensystem(g);

  // Columns ordered by descending eigenvalue; kernel direction at the pole.
  Vec3 cols[3];
  for (int k = 0; k < 3; ++k) {
    const int src = 2 - k;
    cols[k] = Vec3{es.eigenvectors(0, src).real(), es.eigenvectors(1, src).real(),
                   es.eigenvectors(2, src).real()}
                  .normalized();
  }
  Mat3 r = Mat3::from_columns(cols[0], cols[1], cols[2]);
  if (r.det() < 0.0) {
    cols[2] = -cols[2];
    r = Mat3::from_columns(cols[0], cols[1], cols[2]);
  }
  return r;
}

double gauss_product_power(const AffineChannel& ch, int order) {
  const Mat3 frame = alignment_frame(ch);

  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  std::vector<double> theta(order), wtheta(order);
  double norm = 0.0;
  for (int i = 0; i < order; ++i) {
    theta[i] = 0.5 * kPi * (x[i] + 1.0);
    wtheta[i] = w[i] * std::sin(theta[i]);
    norm += wtheta[i];
  }

  const int per_panel = std::max(1, (order + 1) / 2);
  std::vector<double> px, pw;
  gauss_legendre(per_panel, px, pw);

  double total = 0.0;
  for (int panel = 0; panel < 4; ++panel) {
    const double lo = panel * kPi / 2.0;
    for (int j = 0; j < per_panel; ++j) {
      const double phi = lo + 0.25 * kPi * (px[j] + 1.0);
      const double wphi = pw[j] * 0.25 * kPi / (2.0 * kPi);
      const double cp = std::cos(phi), sp = std::sin(phi);
      for (int i = 0; i < order; ++i) {
        const double s = std::sin(theta[i]);
        const Vec3 n = frame * Vec3{s * cp, s * sp, std::cos(theta[i])};
        total += (wtheta[i] / norm) * wphi * 2.0 * cross(ch.t, ch.lambda * n).norm();
      }
    }
  }
  return total;
}

}  // namespace

PowerResult correlating_power(const AffineChannel& ch, const SphereScheme& scheme,
                              const ToleranceConfig& tol) {
  if (!ch.lambda.is_finite() || !ch.t.is_finite())
    throw InvalidChannelError("affine channel has non-finite parameters");
  (void)tol;

  PowerResult out;
  out.scheme = scheme;
  if (scheme.kind == SphereScheme::Kind::gauss_product) {
    const int order = scheme.order_or_samples;
    if (order < 2) throw OrderError("quadrature order must be at least 2");
    out.value = gauss_product_power(ch, order);
    const int half = std::max(2, order / 2);
    out.estimated_error = std::abs(out.value - gauss_product_power(ch, half));
  } else {
    const long samples = scheme.order_or_samples;
    if (samples < 2) throw OrderError("monte carlo needs at least 2 samples");
    RngStream rng(scheme.seed);
    double sum = 0.0, sum2 = 0.0;
    for (long k = 0; k < samples; ++k) {
      const double f = 2.0 * cross(ch.t, ch.lambda * rng.unit_vector()).norm();
      sum += f;
      sum2 += f * f;
    }
    const double mean = sum / samples;
    const double var = std::max(0.0, sum2 / samples - mean * mean);
    out.value = mean;
    out.estimated_error = std::sqrt(var / samples);
  }
  return out;
}

double power_ad_closed_form(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw GammaRangeError("damping parameter must lie in [0, 1]");
  return 0.5 * kPi * gamma * std::sqrt(1.0 - gamma);
}

double power_mp_closed_form(const Vec3& m0, const Vec3& m1) {
  for (const Vec3* v : {&m0, &m1})
    if (std::abs(v->norm() - 1.0) > 1e-9)
      throw NonUnitVectorError("preparation vectors must be unit length");
  return 0.5 * cross(m0, m1).norm();
}

double power_nsc_closed_form(const Vec3& a, const Vec3& b, const Vec3& c, double t) {
  return std::abs(t) * a.norm() * cross(b, c).norm();
}

InvariancePair power_invariance_check(const AffineChannel& ch, const SphereScheme& scheme,
                                      const ToleranceConfig& tol) {
  const CanonicalForm cf = canonical_form(ch, tol);
  AffineChannel canonical;
  canonical.lambda = Mat3::diagonal(cf.lambda_d);
  canonical.t = cf.t_c;
  canonical.name = ch.name.empty() ? "canonical" : ch.name + "_canonical";

  InvariancePair pair;
  pair.p_raw = correlating_power(ch, scheme, tol).value;
  pair.p_canonical = correlating_power(canonical, scheme, tol).value;
  return pair;
}

}  // namespace qcorr
