#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "dirac1d/errors.hpp"

namespace dirac1d {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Two-component complex vector (spinor values, boundary traces).
struct Vec2C {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};

  Vec2C operator+(const Vec2C& o) const { return {a + o.a, b + o.b}; }
  Vec2C operator-(const Vec2C& o) const { return {a - o.a, b - o.b}; }
  Vec2C operator-() const { return {-a, -b}; }
  Vec2C operator*(Complex s) const { return {a * s, b * s}; }
  Vec2C operator/(Complex s) const { return {a / s, b / s}; }

  double norm() const { return std::sqrt(std::norm(a) + std::norm(b)); }
};

inline Vec2C operator*(Complex s, const Vec2C& v) { return v * s; }

inline Complex dot(const Vec2C& x, const Vec2C& y) {
  // Hermitian inner product, conjugate-linear in the first argument.
  return std::conj(x.a) * y.a + std::conj(x.b) * y.b;
}

/// Dense 2x2 complex matrix, row-major.
struct Mat2C {
  std::array<Complex, 4> e{};  // (0,0) (0,1) (1,0) (1,1)

  Complex& operator()(int i, int j) { return e[2 * i + j]; }
  const Complex& operator()(int i, int j) const { return e[2 * i + j]; }

  static Mat2C diag(Complex d0, Complex d1) { return {{d0, Complex{}, Complex{}, d1}}; }
  static Mat2C zero() { return {}; }

  Mat2C operator+(const Mat2C& o) const {
    return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]}};
  }
  Mat2C operator-(const Mat2C& o) const {
    return {{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]}};
  }
  Mat2C operator-() const { return {{-e[0], -e[1], -e[2], -e[3]}}; }
  Mat2C operator*(const Mat2C& o) const {
    return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
             e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]}};
  }
  Vec2C operator*(const Vec2C& v) const {
    return {e[0] * v.a + e[1] * v.b, e[2] * v.a + e[3] * v.b};
  }
  Mat2C operator*(Complex s) const { return {{e[0] * s, e[1] * s, e[2] * s, e[3] * s}}; }
  Mat2C operator/(Complex s) const { return {{e[0] / s, e[1] / s, e[2] / s, e[3] / s}}; }

  Complex trace() const { return e[0] + e[3]; }

  Mat2C adjoint() const {
    return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
  }
  Mat2C transpose() const { return {{e[0], e[2], e[1], e[3]}}; }
  Mat2C conj() const {
    return {{std::conj(e[0]), std::conj(e[1]), std::conj(e[2]), std::conj(e[3])}};
  }

  double frobenius_norm() const {
    return std::sqrt(std::norm(e[0]) + std::norm(e[1]) + std::norm(e[2]) + std::norm(e[3]));
  }

  bool is_finite() const {
    for (const auto& x : e)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
  }
};

inline Mat2C operator*(Complex s, const Mat2C& m) { return m * s; }

// Pauli matrices; kSigma0 is the identity.
inline const Mat2C kSigma0{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}};
inline const Mat2C kSigma1{{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}}};
inline const Mat2C kSigma2{{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}}};
inline const Mat2C kSigma3{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}}};

inline Complex det2(const Mat2C& m) { return m.e[0] * m.e[3] - m.e[1] * m.e[2]; }

/// Classical adjugate; det2(m) * inv2(m) == adj2(m) * m == det2(m) * I.
inline Mat2C adj2(const Mat2C& m) { return {{m.e[3], -m.e[1], -m.e[2], m.e[0]}}; }

/// Inverse with an absolute determinant guard. The matrices appearing in
/// this library are O(1)-scaled, so an absolute tolerance is appropriate.
Mat2C inv2(const Mat2C& m, double tol = 1e-14);

/// Singular values of m, largest first.
std::array<double, 2> singular_values(const Mat2C& m);

/// Spectral norm (largest singular value).
double spectral_norm(const Mat2C& m);

/// Orthonormal basis of the numerical null space. A singular value counts as
/// zero when it is below tol relative to the largest one (or absolutely, for
/// a matrix that vanishes entirely).
std::vector<Vec2C> kernel_basis(const Mat2C& m, double tol = 1e-10);

/// Unit right singular vector for the smallest singular value.
Vec2C least_singular_vector(const Mat2C& m);

}  // namespace dirac1d
