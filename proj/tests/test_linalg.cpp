#include <doctest.h>

#include <cmath>

#include "qcorr/linalg.hpp"
#include "qcorr/rng.hpp"
#include "test_support.hpp"

using namespace qcorr;
using qcorr::testing::max_abs_diff;
using qcorr::testing::random_hermitian;
using qcorr::testing::random_unitary;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("eigensystem of a diagonal matrix") {
  ComplexMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  const EigenSystem es = hermitian_eigensystem(m);
  CHECK(es.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(es.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(es.eigenvectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(es.eigenvectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("pure-state projector has spectrum {0, 1}") {
  const ComplexMatrix proj = bloch_projector(Vec3::unit_x());
  const EigenSystem es = hermitian_eigensystem(proj);
  CHECK(es.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random Hermitian matrices reconstruct and stay orthonormal") {
  RngStream rng(101);
  for (int dim : {2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix h = random_hermitian(rng, dim);
      const EigenSystem es = hermitian_eigensystem(h);
      for (int k = 1; k < dim; ++k) CHECK(es.eigenvalues[k - 1] <= es.eigenvalues[k]);

      ComplexMatrix rec(dim);
      for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j)
            rec(i, j) += es.eigenvalues[k] * es.eigenvectors(i, k) *
                         std::conj(es.eigenvectors(j, k));
      CHECK(max_abs_diff(rec, h) < 1e-10);

      const ComplexMatrix gram = es.eigenvectors.adjoint() * es.eigenvectors;
      CHECK(max_abs_diff(gram, ComplexMatrix::identity(dim)) < 1e-10);
    }
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigensystem(m), NonHermitianError);
}

TEST_CASE("trace norm basics") {
  CHECK(trace_norm(ComplexMatrix::zero(3)) == doctest::Approx(0.0));
  RngStream rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec3 n = rng.unit_vector();
    CHECK(trace_norm(dot_sigma(n)) == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("trace norm of the commutator generator") {
  // (i/2) (r0 x r1).sigma has singular values |r0 x r1|/2 twice.
  RngStream rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 r0 = rng.unit_vector() * rng.uniform();
    const Vec3 r1 = rng.unit_vector() * rng.uniform();
    const ComplexMatrix m = dot_sigma(cross(r0, r1)) * cplx(0.0, 0.5);
    CHECK(trace_norm(m) == doctest::Approx(cross(r0, r1).norm()).epsilon(1e-12));
  }
}

TEST_CASE("trace norm equals the absolute eigenvalue sum on Hermitian input") {
  RngStream rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 4);
    const EigenSystem es = hermitian_eigensystem(h);
    double expect = 0.0;
    for (double lam : es.eigenvalues) expect += std::abs(lam);
    CHECK(trace_norm(h) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("trace norm is unitarily invariant") {
  RngStream rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix m = random_hermitian(rng, 4) * cplx(0.3, 0.7);
    const ComplexMatrix u = random_unitary(rng, 4);
    const ComplexMatrix v = random_unitary(rng, 4);
    CHECK(trace_norm(u * m * v) == doctest::Approx(trace_norm(m)).epsilon(1e-10));
  }
}

TEST_CASE("svd3 of the identity") {
  const Svd3 s = svd3_rotations(Mat3::identity());
  CHECK((s.s - Mat3::identity()).max_abs() < 1e-12);
  CHECK((s.t - Mat3::identity()).max_abs() < 1e-12);
  CHECK(s.d.x == doctest::Approx(1.0));
  CHECK(s.d.y == doctest::Approx(1.0));
  CHECK(s.d.z == doctest::Approx(1.0));
}

TEST_CASE("svd3 singular values of a damping-style diagonal") {
  const double g = 0.5;
  const Mat3 l = Mat3::diagonal({std::sqrt(1 - g), std::sqrt(1 - g), 1 - g});
  const Svd3 s = svd3_rotations(l);
  CHECK(std::abs(s.d.x) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(std::abs(s.d.y) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(std::abs(s.d.z) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.s.det() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.t.det() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("svd3 handles negative determinants with proper rotations") {
  RngStream rng(11);
  int negative_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Mat3 l;
    for (double& v : l.a) v = rng.normal();
    const bool neg = l.det() < 0.0;
    negative_seen += neg;
    const Svd3 s = svd3_rotations(l);
    CHECK(s.s.det() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s.t.det() == doctest::Approx(1.0).epsilon(1e-10));
    int negatives = (s.d.x < 0) + (s.d.y < 0) + (s.d.z < 0);
    CHECK(negatives % 2 == (neg ? 1 : 0));
  }
  CHECK(negative_seen > 10);
}

TEST_CASE("svd3 reconstructs 1000 random matrices including rank-deficient ones") {
  RngStream rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    Mat3 l;
    if (trial % 4 == 1) {
      l = outer(rng.unit_vector(), rng.unit_vector()) * rng.uniform(0.0, 2.0);
    } else if (trial % 4 == 2) {
      l = outer(rng.unit_vector(), rng.unit_vector()) +
          outer(rng.unit_vector(), rng.unit_vector()) * 0.4;
    } else if (trial % 4 == 3 && trial % 8 == 3) {
      l = Mat3::zero();
    } else {
      for (double& v : l.a) v = rng.normal();
    }
    const Svd3 s = svd3_rotations(l);
    const Mat3 rec = s.s * Mat3::diagonal(s.d) * s.t;
    CHECK((rec - l).max_abs() < 1e-10);
    CHECK(std::abs(s.d.x) + 1e-12 >= std::abs(s.d.y));
    CHECK(std::abs(s.d.y) + 1e-12 >= std::abs(s.d.z));
  }
}

TEST_CASE("cross product identities") {
  CHECK((cross(Vec3::unit_x(), Vec3::unit_y()) - Vec3::unit_z()).norm() == doctest::Approx(0.0));
  RngStream rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 a = rng.unit_vector() * rng.uniform(0.0, 3.0);
    const Vec3 b = rng.unit_vector() * rng.uniform(0.0, 3.0);
    CHECK(cross(a, a).norm() == doctest::Approx(0.0));
    // Lagrange identity.
    const double lhs = cross(a, b).dot(cross(a, b)) + a.dot(b) * a.dot(b);
    CHECK(lhs == doctest::Approx(a.dot(a) * b.dot(b)).epsilon(1e-12));
    // Antisymmetry and orthogonality.
    CHECK((cross(a, b) + cross(b, a)).norm() == doctest::Approx(0.0));
    CHECK(cross(a, b).dot(a) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_SUITE_END();
