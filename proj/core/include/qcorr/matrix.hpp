// Small dense complex matrices (dims 2..4), allocation free.
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "qcorr/errors.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

using cplx = std::complex<double>;

// Square complex matrix with runtime dimension in {2, 3, 4}.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 2 || dim > 4) throw DimensionMismatchError("matrix dimension must be 2, 3 or 4");
  }

  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return a_[dim_ * i + j]; }
  const cplx& operator()(int i, int j) const { return a_[dim_ * i + j]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const {
    check_same_dim(o);
    ComplexMatrix r(dim_);
    for (int k = 0; k < dim_ * dim_; ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    check_same_dim(o);
    ComplexMatrix r(dim_);
    for (int k = 0; k < dim_ * dim_; ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    check_same_dim(o);
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k) {
        const cplx aik = (*this)(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  ComplexMatrix operator*(const cplx& s) const {
    ComplexMatrix r(dim_);
    for (int k = 0; k < dim_ * dim_; ++k) r.a_[k] = a_[k] * s;
    return r;
  }
  friend ComplexMatrix operator*(const cplx& s, const ComplexMatrix& m) { return m * s; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  cplx trace() const {
    cplx t{};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (int k = 0; k < dim_ * dim_; ++k) m = std::max(m, std::abs(a_[k]));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (int k = 0; k < dim_ * dim_; ++k) s += std::norm(a_[k]);
    return std::sqrt(s);
  }

  double hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
  }

  bool is_finite() const {
    for (int k = 0; k < dim_ * dim_; ++k)
      if (!std::isfinite(a_[k].real()) || !std::isfinite(a_[k].imag())) return false;
    return true;
  }

  // (M + M^dag)/2, squashes rounding noise on nominally Hermitian products.
  ComplexMatrix hermitized() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return r;
  }

 private:
  void check_same_dim(const ComplexMatrix& o) const {
    if (dim_ != o.dim_) throw DimensionMismatchError("matrix dimensions differ");
  }

  int dim_;
  std::array<cplx, 16> a_{};
};

// Pauli matrices and friends.
inline ComplexMatrix pauli(int k) {
  ComplexMatrix m(2);
  switch (k) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
    default: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
  }
  return m;
}

// v . sigma
inline ComplexMatrix dot_sigma(const Vec3& v) {
  ComplexMatrix m(2);
  m(0, 0) = v.z;
  m(0, 1) = cplx(v.x, -v.y);
  m(1, 0) = cplx(v.x, v.y);
  m(1, 1) = -v.z;
  return m;
}

// Kronecker product of two qubit operators; left factor owns the slow index.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw DimensionMismatchError("kron expects two 2x2 factors");
  ComplexMatrix r(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

// Qubit ket on the Bloch sphere, |v> = (cos(t/2), e^{i phi} sin(t/2)).
inline std::array<cplx, 2> ket_from_bloch(const Vec3& n) {
  const double c = std::sqrt(std::max(0.0, (1.0 + n.z) / 2.0));
  const double s = std::sqrt(std::max(0.0, (1.0 - n.z) / 2.0));
  const double phi = std::atan2(n.y, n.x);
  return {cplx(c, 0.0), s * cplx(std::cos(phi), std::sin(phi))};
}

// |u><v| for qubit kets.
inline ComplexMatrix ket_bra(const std::array<cplx, 2>& u, const std::array<cplx, 2>& v) {
  ComplexMatrix m(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

// Projector |n><n| on the Bloch sphere, (I + n.sigma)/2 for unit n.
inline ComplexMatrix bloch_projector(const Vec3& n) {
  ComplexMatrix m = dot_sigma(n);
  m(0, 0) += 1.0;
  m(1, 1) += 1.0;
  return m * cplx(0.5, 0.0);
}

}  // namespace qcorr
