// Real 3-vectors and 3x3 matrices for Bloch-sphere work.
#pragma once

#include <array>
#include <cmath>

namespace qcorr {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    const double n = norm();
    return n > 0.0 ? (*this) / n : Vec3{};
  }
  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  static constexpr Vec3 unit_x() { return {1.0, 0.0, 0.0}; }
  static constexpr Vec3 unit_y() { return {0.0, 1.0, 0.0}; }
  static constexpr Vec3 unit_z() { return {0.0, 0.0, 1.0}; }
};

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Row-major real 3x3 matrix.
struct Mat3 {
  std::array<double, 9> a{};

  constexpr double& operator()(int i, int j) { return a[3 * i + j]; }
  constexpr double operator()(int i, int j) const { return a[3 * i + j]; }

  static constexpr Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }
  static constexpr Mat3 zero() { return Mat3{}; }
  static constexpr Mat3 diagonal(const Vec3& d) {
    Mat3 m;
    m(0, 0) = d.x;
    m(1, 1) = d.y;
    m(2, 2) = d.z;
    return m;
  }
  static constexpr Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 m;
    m(0, 0) = c0.x; m(0, 1) = c1.x; m(0, 2) = c2.x;
    m(1, 0) = c0.y; m(1, 1) = c1.y; m(1, 2) = c2.y;
    m(2, 0) = c0.z; m(2, 1) = c1.z; m(2, 2) = c2.z;
    return m;
  }

  constexpr Vec3 column(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }
  constexpr Vec3 row(int i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }

  constexpr Mat3 transpose() const {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  constexpr Vec3 operator*(const Vec3& v) const {
    return {row(0).dot(v), row(1).dot(v), row(2).dot(v)};
  }

  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        m(i, j) = s;
      }
    return m;
  }

  constexpr Mat3 operator*(double s) const {
    Mat3 m = *this;
    for (double& v : m.a) v *= s;
    return m;
  }

  constexpr Mat3 operator+(const Mat3& o) const {
    Mat3 m = *this;
    for (int k = 0; k < 9; ++k) m.a[k] += o.a[k];
    return m;
  }

  constexpr Mat3 operator-(const Mat3& o) const {
    Mat3 m = *this;
    for (int k = 0; k < 9; ++k) m.a[k] -= o.a[k];
    return m;
  }

  constexpr double det() const {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_finite() const {
    for (double v : a)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

// Rank-one matrix u v^T.
constexpr Mat3 outer(const Vec3& u, const Vec3& v) {
  Mat3 m;
  m(0, 0) = u.x * v.x; m(0, 1) = u.x * v.y; m(0, 2) = u.x * v.z;
  m(1, 0) = u.y * v.x; m(1, 1) = u.y * v.y; m(1, 2) = u.y * v.z;
  m(2, 0) = u.z * v.x; m(2, 1) = u.z * v.y; m(2, 2) = u.z * v.z;
  return m;
}

}  // namespace qcorr
