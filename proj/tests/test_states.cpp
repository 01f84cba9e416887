#include <doctest.h>

#include <cmath>

#include "qcorr/measures.hpp"
#include "qcorr/states.hpp"
#include "test_support.hpp"

using namespace qcorr;
using qcorr::testing::max_abs_diff;
using qcorr::testing::random_cc;
using qcorr::testing::random_density;
using qcorr::testing::random_pure_qc;
using qcorr::testing::random_unitary;

TEST_SUITE_BEGIN("states");

TEST_CASE("density matrices from Bloch vectors") {
  const DensityMatrix mixed = density_from_bloch(Vec3{});
  CHECK(mixed.matrix()(0, 0).real() == doctest::Approx(0.5));
  CHECK(mixed.matrix()(1, 1).real() == doctest::Approx(0.5));
  CHECK(std::abs(mixed.matrix()(0, 1)) == doctest::Approx(0.0));

  const DensityMatrix up = density_from_bloch(Vec3::unit_z());
  CHECK(up.matrix()(0, 0).real() == doctest::Approx(1.0));
  CHECK(up.matrix()(1, 1).real() == doctest::Approx(0.0));

  // |+> = (|0> + |1>)/sqrt(2): all entries 1/2.
  const DensityMatrix plus = density_from_bloch(Vec3::unit_x());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(plus.matrix()(i, j).real() == doctest::Approx(0.5));
}

TEST_CASE("Bloch vectors outside the ball are rejected") {
  CHECK_THROWS_AS(density_from_bloch(Vec3{1.1, 0.0, 0.0}), BlochNormError);
}

TEST_CASE("Bloch round trip") {
  RngStream rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 r = rng.unit_vector() * rng.uniform();
    const Vec3 back = bloch_from_density(density_from_bloch(r));
    CHECK((back - r).norm() < 1e-12);
  }
  CHECK((bloch_from_density(density_from_bloch(Vec3{})) - Vec3{}).norm() < 1e-14);
  const Vec3 down = bloch_from_density(density_from_bloch(-Vec3::unit_z()));
  CHECK((down - Vec3{0, 0, -1}).norm() < 1e-14);
}

TEST_CASE("assemble_qc block placement") {
  QCState q;
  q.x0 = bloch_projector(Vec3::unit_z()) * cplx(0.5, 0.0);   // |0><0| / 2
  q.x1 = bloch_projector(-Vec3::unit_z()) * cplx(0.5, 0.0);  // |1><1| / 2
  const DensityMatrix rho = assemble_qc(q);
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.5));
  CHECK(rho.matrix()(3, 3).real() == doctest::Approx(0.5));
  CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.0));
  CHECK(rho.matrix()(2, 2).real() == doctest::Approx(0.0));
}

TEST_CASE("assemble_qc of the maximally quantum-correlated example") {
  QCState q;
  q.x0 = bloch_projector(Vec3::unit_z()) * cplx(0.5, 0.0);
  q.x1 = bloch_projector(Vec3::unit_x()) * cplx(0.5, 0.0);
  const DensityMatrix rho = assemble_qc(q);
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
  // Block X1 = |+><+|/2 sits on odd indices.
  CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.25));
  CHECK(rho.matrix()(3, 3).real() == doctest::Approx(0.25));
  CHECK(rho.matrix()(1, 3).real() == doctest::Approx(0.25));
  CHECK(quantum_correlation(q) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random QC states assemble to valid densities") {
  RngStream rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const PureQCState pq = random_pure_qc(rng);
    const DensityMatrix rho = assemble_pure_qc(pq);  // throws if not PSD / trace-one
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("assemble_cc reproduces the maximally classically correlated state") {
  CCState c;
  c.p[0][0] = 0.5;
  c.p[1][1] = 0.5;
  const DensityMatrix rho = assemble_cc(c);
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.5));
  CHECK(rho.matrix()(3, 3).real() == doctest::Approx(0.5));
  CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.0));
}

TEST_CASE("product probabilities assemble to a product state") {
  RngStream rng(23);
  CCState c;
  const double pa = 0.3, pb = 0.8;
  c.p[0][0] = pa * pb;
  c.p[0][1] = pa * (1 - pb);
  c.p[1][0] = (1 - pa) * pb;
  c.p[1][1] = (1 - pa) * (1 - pb);
  c.u_axis = rng.unit_vector();
  c.v_axis = rng.unit_vector();
  const ComplexMatrix marginal_a =
      bloch_projector(c.u_axis) * cplx(pa, 0) + bloch_projector(-c.u_axis) * cplx(1 - pa, 0);
  const ComplexMatrix marginal_b =
      bloch_projector(c.v_axis) * cplx(pb, 0) + bloch_projector(-c.v_axis) * cplx(1 - pb, 0);
  CHECK(max_abs_diff(assemble_cc(c).matrix(), kron(marginal_a, marginal_b)) < 1e-12);
}

TEST_CASE("fidelity basics") {
  RngStream rng(24);
  for (int dim : {2, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityMatrix rho = random_density(rng, dim);
      CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));
      const DensityMatrix sigma = random_density(rng, dim);
      CHECK(fidelity(rho, sigma) == doctest::Approx(fidelity(sigma, rho)).epsilon(1e-10));
    }
  }
  CHECK(fidelity(density_from_bloch(Vec3::unit_z()), density_from_bloch(-Vec3::unit_z())) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(fidelity(density_from_bloch(Vec3::unit_z()), density_from_bloch(Vec3::unit_x())) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK_THROWS_AS(fidelity(random_density(rng, 2), random_density(rng, 4)),
                  DimensionMismatchError);
}

TEST_CASE("pure-state fidelity equals the overlap formula") {
  RngStream rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 m = rng.unit_vector();
    const Vec3 n = rng.unit_vector();
    const double expect = std::sqrt(std::max(0.0, (1.0 + m.dot(n)) / 2.0));
    CHECK(fidelity(density_from_bloch(m), density_from_bloch(n)) ==
          doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("fidelity is invariant under joint unitaries") {
  RngStream rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(rng, 4);
    const DensityMatrix sigma = random_density(rng, 4);
    const ComplexMatrix u = random_unitary(rng, 4);
    const DensityMatrix rho_u = DensityMatrix::from_matrix((u * rho.matrix() * u.adjoint()).hermitized());
    const DensityMatrix sigma_u =
        DensityMatrix::from_matrix((u * sigma.matrix() * u.adjoint()).hermitized());
    CHECK(fidelity(rho_u, sigma_u) == doctest::Approx(fidelity(rho, sigma)).epsilon(1e-10));
  }
}

TEST_CASE("fidelity concavity spot-check") {
  RngStream rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(rng, 4);
    const DensityMatrix s1 = random_density(rng, 4);
    const DensityMatrix s2 = random_density(rng, 4);
    const double lam = rng.uniform();
    const ComplexMatrix mix =
        s1.matrix() * cplx(lam, 0.0) + s2.matrix() * cplx(1.0 - lam, 0.0);
    const double lhs = fidelity(rho, DensityMatrix::from_matrix(mix.hermitized()));
    const double rhs = lam * fidelity(rho, s1) + (1.0 - lam) * fidelity(rho, s2);
    CHECK(lhs >= rhs - 1e-10);
  }
}

TEST_CASE("assembled CC states carry no quantum correlations") {
  RngStream rng(28);
  for (int trial = 0; trial < 50; ++trial) {
    const CCState c = random_cc(rng);
    AffineChannel identity;
    CHECK(quantum_correlation(apply_to_cc(identity, c)) < 1e-12);
  }
}

TEST_CASE("assembled pure-block QC states are invariant under I (x) Z") {
  RngStream rng(29);
  const ComplexMatrix z = pauli(3);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho = assemble_pure_qc(random_pure_qc(rng));
    const ComplexMatrix big_z = kron(ComplexMatrix::identity(2), z);
    CHECK(max_abs_diff(big_z * rho.matrix() * big_z, rho.matrix()) < 1e-12);
  }
}

TEST_CASE("commuting QC blocks carry no quantum correlations") {
  RngStream rng(30);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec3 axis = rng.unit_vector();
    const double p0 = rng.uniform();
    const QCState q = qc_from_bloch(p0, axis * rng.uniform(), 1.0 - p0,
                                    axis * -rng.uniform());
    CHECK(quantum_correlation(q) < 1e-12);
  }
}

TEST_SUITE_END();
