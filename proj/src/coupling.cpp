#include "dirac1d/coupling.hpp"

namespace dirac1d {

namespace {
const Complex kTwoI{0.0, 2.0};

Mat2C two_i_sigma1_minus(const CouplingMatrix& A) { return kTwoI * kSigma1 - A.mat(); }
Mat2C two_i_sigma1_plus(const CouplingMatrix& A) { return kTwoI * kSigma1 + A.mat(); }
}  // namespace

DecouplingResult decoupling_check(const CouplingMatrix& A, double tol) {
  DecouplingResult r;
  r.plus_condition = two_i_sigma1_minus(A);
  r.minus_condition = two_i_sigma1_plus(A);
  const Mat2C pm = A.mat() - kTwoI * kSigma1;
  const Mat2C pp = A.mat() + kTwoI * kSigma1;
  const bool is_plus_2is1 = pm.frobenius_norm() <= tol;
  const bool is_minus_2is1 = pp.frobenius_norm() <= tol;
  // A = +-2i*sigma1, or both boundary matrices singular, which is equivalent
  // to beta + gamma = 0 and det A = -4.
  const bool both_singular =
      std::abs(A.beta + A.gamma) <= tol && std::abs(A.det() + 4.0) <= tol;
  r.decoupled = is_plus_2is1 || is_minus_2is1 || both_singular;
  return r;
}

Mat2C lambda_matrix(const CouplingMatrix& A, double tol) {
  const Mat2C lhs = two_i_sigma1_minus(A);
  if (std::abs(det2(lhs)) <= tol)
    throw SingularMatrixError("lambda_matrix: 2i*sigma1 - A is singular (case (iii) or A = 2i*sigma1)");
  return inv2(lhs, tol) * two_i_sigma1_plus(A);
}

Mat2C tilde_lambda(const CouplingMatrix& A, double tol) {
  const Mat2C lhs = two_i_sigma1_plus(A);
  if (std::abs(det2(lhs)) <= tol)
    throw SingularMatrixError("tilde_lambda: 2i*sigma1 + A is singular (case (iii) or A = -2i*sigma1)");
  return inv2(lhs, tol) * two_i_sigma1_minus(A);
}

CouplingMatrix adjoint_coupling(const CouplingMatrix& A) {
  return CouplingMatrix(A.mat().adjoint());
}

bool is_self_adjoint(const CouplingMatrix& A, double tol) {
  return (A.mat() - A.mat().adjoint()).frobenius_norm() <= tol;
}

Mat2C cayley_of(const CouplingMatrix& A, double tol) {
  if (!is_self_adjoint(A, tol))
    throw NotHermitianError("cayley_of: coupling matrix is not hermitian");
  const Mat2C a = A.mat();
  // Solving A = -i (I - U)^{-1} (I + U) for U gives U = (A - i)^{-1} (A + i);
  // A - i*I is invertible because hermitian matrices have real spectrum.
  const Mat2C U = inv2(a - kI * kSigma0) * (a + kI * kSigma0);
  const Mat2C rebuilt = Complex(0.0, -1.0) * inv2(kSigma0 - U) * (kSigma0 + U);
  if ((rebuilt - a).frobenius_norm() > 1e-10 * (1.0 + a.frobenius_norm()))
    throw NumericalError("cayley_of: reconstruction check failed");
  return U;
}

Vec2C transmission_residual(const CouplingMatrix& A, const Vec2C& trace_minus,
                            const Vec2C& trace_plus) {
  return two_i_sigma1_minus(A) * trace_plus - two_i_sigma1_plus(A) * trace_minus;
}

Vec2C boundary_triplet_residual(const CouplingMatrix& A, const Vec2C& trace_minus,
                                const Vec2C& trace_plus) {
  const Vec2C gamma1 = kSigma3 * (trace_minus - trace_plus);
  const Vec2C gamma2 = Complex(0.5) * (kSigma2 * (trace_plus + trace_minus));
  return gamma1 + kSigma2 * (A.mat() * (kSigma2 * gamma2));
}

}  // namespace dirac1d
