#ifndef DEGENWAVE_LINALG_HPP
#define DEGENWAVE_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>

// Small fixed-size complex kernel: 4-spinors and dense 4x4 matrices.
// Everything is a plain value type; no heap, no aliasing concerns.

namespace degenwave {

using cplx = std::complex<double>;

struct Spinor4 {
  std::array<cplx, 4> c{};

  cplx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  // Euclidean norm sqrt(sum |c_i|^2)
  double norm() const {
    double s = 0.0;
    for (const auto& v : c) s += std::norm(v);
    return std::sqrt(s);
  }
};

inline Spinor4 operator+(const Spinor4& a, const Spinor4& b) {
  Spinor4 r;
  for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
  return r;
}

inline Spinor4 operator-(const Spinor4& a, const Spinor4& b) {
  Spinor4 r;
  for (int i = 0; i < 4; ++i) r[i] = a[i] - b[i];
  return r;
}

inline Spinor4 operator*(const cplx& s, const Spinor4& v) {
  Spinor4 r;
  for (int i = 0; i < 4; ++i) r[i] = s * v[i];
  return r;
}

inline Spinor4 operator*(double s, const Spinor4& v) { return cplx(s, 0.0) * v; }

// Dense 4x4 complex matrix, row major.
struct Mat4c {
  std::array<cplx, 16> a{};

  cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
  const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(4 * i + j)]; }

  static Mat4c identity() {
    Mat4c m;
    for (int i = 0; i < 4; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
  }
  static Mat4c zero() { return Mat4c{}; }

  double max_abs() const {
    double mx = 0.0;
    for (const auto& v : a) mx = std::max(mx, std::abs(v));
    return mx;
  }
};

inline Mat4c operator+(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

inline Mat4c operator-(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

inline Mat4c operator*(const cplx& s, const Mat4c& x) {
  Mat4c r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
  return r;
}

inline Mat4c operator*(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const cplx xv = x(i, k);
      if (xv == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += xv * y(k, j);
    }
  return r;
}

// mat_apply
inline Spinor4 operator*(const Mat4c& m, const Spinor4& v) {
  Spinor4 r;
  for (int i = 0; i < 4; ++i) {
    cplx s(0.0, 0.0);
    for (int j = 0; j < 4; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

}  // namespace degenwave

#endif
