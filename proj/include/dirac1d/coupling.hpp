#pragma once

#include <optional>

#include "dirac1d/mat2.hpp"
#include "dirac1d/spectral_functions.hpp"

namespace dirac1d {

/// The 2x2 complex matrix A = [[alpha, beta], [gamma, delta]] that fixes the
/// transmission condition (2i*sigma1 - A) psi(0+) = (2i*sigma1 + A) psi(0-).
struct CouplingMatrix {
  Complex alpha{};
  Complex beta{};
  Complex gamma{};
  Complex delta{};

  CouplingMatrix() = default;
  CouplingMatrix(Complex a, Complex b, Complex g, Complex d)
      : alpha(a), beta(b), gamma(g), delta(d) {}
  explicit CouplingMatrix(const Mat2C& m)
      : alpha(m.e[0]), beta(m.e[1]), gamma(m.e[2]), delta(m.e[3]) {}

  Mat2C mat() const { return {{alpha, beta, gamma, delta}}; }
  Complex det() const { return alpha * delta - beta * gamma; }
  Complex trace() const { return alpha + delta; }
  CouplingMatrix scaled(Complex s) const {
    return {alpha * s, beta * s, gamma * s, delta * s};
  }

  bool is_finite() const { return mat().is_finite(); }
};

/// Result of the direct-sum test: either the condition couples the half-lines
/// or it splits into the two half-line boundary conditions
/// (2i*sigma1 -+ A) psi_{+-}(0) = 0.
struct DecouplingResult {
  bool decoupled = false;
  Mat2C plus_condition;   // applies to psi(0+); equals 2i*sigma1 - A
  Mat2C minus_condition;  // applies to psi(0-); equals 2i*sigma1 + A
};

DecouplingResult decoupling_check(const CouplingMatrix& A, double tol = 1e-12);

/// Lambda = (2i*sigma1 - A)^{-1} (2i*sigma1 + A); throws SingularMatrixError
/// when the interaction is not of case (i).
Mat2C lambda_matrix(const CouplingMatrix& A, double tol = 1e-12);

/// tilde-Lambda = (2i*sigma1 + A)^{-1} (2i*sigma1 - A); case (ii) analogue.
/// When both exist, tilde_lambda(A) * lambda_matrix(A) = identity.
Mat2C tilde_lambda(const CouplingMatrix& A, double tol = 1e-12);

/// The adjoint operator is the point interaction with the conjugate
/// transpose matrix; this returns A^*.
CouplingMatrix adjoint_coupling(const CouplingMatrix& A);

bool is_self_adjoint(const CouplingMatrix& A, double tol = 1e-12);

/// For hermitian A, the unique unitary U with 1 not an eigenvalue such that
/// A = -i (I - U)^{-1} (I + U). The reconstruction is verified internally.
Mat2C cayley_of(const CouplingMatrix& A, double tol = 1e-12);

/// (2i*sigma1 - A) psi(0+) - (2i*sigma1 + A) psi(0-); zero exactly when the
/// traces satisfy the transmission condition.
Vec2C transmission_residual(const CouplingMatrix& A, const Vec2C& trace_minus,
                            const Vec2C& trace_plus);

/// Gamma1(psi) + sigma2 A sigma2 Gamma2(psi) with the boundary maps
/// Gamma1 = sigma3 (psi(0-) - psi(0+)), Gamma2 = (1/2) sigma2 (psi(0+) + psi(0-)).
/// Vanishes simultaneously with transmission_residual; the two are related by
/// a constant left factor -(1/2) sigma2.
Vec2C boundary_triplet_residual(const CouplingMatrix& A, const Vec2C& trace_minus,
                                const Vec2C& trace_plus);

}  // namespace dirac1d
