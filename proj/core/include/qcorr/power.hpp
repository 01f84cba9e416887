// Correlating power: average created correlation over maximally classically
// correlated inputs, by spherical quadrature or Monte Carlo.
#pragma once

#include <cstdint>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/tolerances.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

struct SphereScheme {
  enum class Kind { gauss_product, monte_carlo };
  Kind kind = Kind::gauss_product;
  int order_or_samples = 64;
  std::uint64_t seed = 0;  // monte_carlo only

  static SphereScheme gauss(int order) { return {Kind::gauss_product, order, 0}; }
  static SphereScheme monte_carlo_scheme(int samples, std::uint64_t seed) {
    return {Kind::monte_carlo, samples, seed};
  }
};

struct PowerResult {
  double value = 0.0;
  SphereScheme scheme;
  double estimated_error = 0.0;
};

struct SphereNode {
  Vec3 n;
  double weight;
};

// Gauss-Legendre nodes in the polar angle times a uniform azimuthal grid of
// 2*order points; weights carry the sin(theta) measure and sum to one.
std::vector<SphereNode> sphere_quadrature(int order);

// Gauss-Legendre abscissas and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// P(E) = avg over the unit sphere of 2 |t x lambda n|.
PowerResult correlating_power(const AffineChannel& ch, const SphereScheme& scheme,
                              const ToleranceConfig& tol = kTol);

double power_ad_closed_form(double gamma);
double power_mp_closed_form(const Vec3& m0, const Vec3& m1);
double power_nsc_closed_form(const Vec3& a, const Vec3& b, const Vec3& c, double t);

struct InvariancePair {
  double p_raw = 0.0;
  double p_canonical = 0.0;
};

// Power of the channel against the power of its canonical form.
InvariancePair power_invariance_check(const AffineChannel& ch, const SphereScheme& scheme,
                                      const ToleranceConfig& tol = kTol);

}  // namespace qcorr
