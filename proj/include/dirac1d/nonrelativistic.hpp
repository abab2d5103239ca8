#pragma once

#include "dirac1d/kernels.hpp"

namespace dirac1d {
namespace nonrel {

/// Coupling matrix with the c-dependent scaling that keeps the
/// non-relativistic limit nontrivial: A_c = [[alpha/(2mc), beta], [gamma, 2mc delta]].
/// det(A_c) = det(A) for every c != 0.
struct ScaledCoupling {
  CouplingMatrix base;
  double m = 0.0;
  double c = 1.0;
  CouplingMatrix scaled;
};

ScaledCoupling scale_coupling(const CouplingMatrix& A, double m, double c);

/// k_c(z) = sqrt(z^2 - (mc^2)^2)/c on the upper branch.
Complex k_c_of(Complex z, double m, double c);

/// Z_c(z) = diag(zeta_c, 1/zeta_c) with zeta_c = (z + mc^2)/(c k_c(z)).
Mat2C Z_c_of(Complex z, double m, double c);

/// Resolvent kernel of the c-dependent operator D_A^{m,c}:
/// R_z^c(x,y) - c R_z^c(x,0) (I + (i/2) A Z_c(z))^{-1} A R_z^c(0,y) with the
/// free kernel R_z^c = (i/(2c)) (Z_c + sgn sigma1) e^{i k_c |x-y|}.
KernelEvaluator relativistic_kernel_c(const CouplingMatrix& A, double m, double c, Complex z,
                                      double tol = 1e-12);

/// mu(z) = sqrt(2 m z), Im mu > 0; throws OnCutError for z in [0,+inf).
Complex mu_of(Complex z, double m);

/// Denominator 4 - det A + 2i alpha/mu + 2i mu delta of the Krein factor;
/// zero exactly at the eigenvalues of H_A.
Complex k_a_denominator(const CouplingMatrix& A, double m, Complex z);

/// The 2x2 Krein matrix K_A(z) of the Schroedinger resolvent; throws
/// EigenvalueHitError when the denominator vanishes.
Mat2C K_A_matrix(const CouplingMatrix& A, double m, Complex z, double tol = 1e-12);

/// Scalar resolvent kernel of H_A, and its embedding diag(1,0) (x) kernel
/// used by the non-relativistic limit distance.
class SchrodingerKernel {
 public:
  SchrodingerKernel(const CouplingMatrix& A, double m, Complex z, double tol = 1e-12);

  Complex evaluate(double x, double y, Side side = Side::Plus) const;
  Complex operator()(double x, double y, Side side = Side::Plus) const {
    return evaluate(x, y, side);
  }
  /// Mat2C-valued kernel with the scalar kernel in the (0,0) entry.
  KernelEvaluator embedded() const;

  Complex mu() const { return mu_; }
  const Mat2C& krein_matrix() const { return K_; }

 private:
  Complex mu_;
  Mat2C K_;
  double m_ = 0.0;
};

inline SchrodingerKernel schrodinger_resolvent_kernel(const CouplingMatrix& A, double m,
                                                      Complex z, double tol = 1e-12) {
  return SchrodingerKernel(A, m, z, tol);
}

/// Eigenvalues of H_A in C \ [0,+inf): roots mu of
/// 2i delta mu^2 + (4 - det A) mu + 2i alpha = 0 with Im mu > 0, mapped to
/// z = mu^2/(2m). Throws DegenerateConditionError when the eigenvalue
/// condition holds identically (alpha = delta = 0, det A = 4).
std::vector<Complex> schrodinger_eigenvalues(const CouplingMatrix& A, double m,
                                             double tol = 1e-12);

/// Boundary traces of a Schroedinger-side function at the interaction point.
struct SchrodingerTraces {
  Complex psi_minus, psi_plus;        // psi(0-), psi(0+)
  Complex dpsi_minus, dpsi_plus;      // psi'(0-), psi'(0+)
};

/// Gamma~1(psi) - V A V* Gamma~2(psi); zero exactly on Dom(H_A).
Vec2C h_transmission_residual(const CouplingMatrix& A, const SchrodingerTraces& traces);

/// V A V* with V = diag(i, 1); the matrix entering the H_A boundary
/// condition. Exposed for the discretization oracle.
Mat2C vav_star(const CouplingMatrix& A);

/// Hilbert-Schmidt distance (the norm, not its square) between the scaled
/// relativistic resolvent at z + mc^2 and the embedded Schroedinger resolvent
/// at z, quadratured over [-L,L]^2.
double nonrel_limit_distance(const CouplingMatrix& A, double m, double c, Complex z,
                             double truncation_L, int grid_n = 400);

/// Frobenius norm of  (-VAV*) (I - M^(z)(-VAV*))^{-1} + (2/m) K_A(z)  with
/// M^(z) = (i/2) diag(1/mu, mu); vanishes identically (Krein identity).
double krein_identity_check(const CouplingMatrix& A, double m, Complex z);

}  // namespace nonrel
}  // namespace dirac1d
