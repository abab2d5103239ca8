#pragma once

#include <Eigen/Dense>
#include <functional>

#include "dirac1d/kernels.hpp"
#include "dirac1d/profile.hpp"

namespace dirac1d {
namespace oracle {

/// Dense matrix realization of one of the approximating operators, used as a
/// brute-force cross-check of the closed-form spectral data.
struct DiscretizedOperator {
  enum class Kind { FourierDirac, FiniteDiffSchrodinger };

  Kind kind = Kind::FourierDirac;
  Eigen::MatrixXcd matrix;
  std::vector<double> grid;
  double step = 0.0;

  /// Full dense eigensolve; only sensible for moderate dimensions.
  Eigen::VectorXcd eigenvalues() const;

  /// The `count` eigenvalues closest to `shift`, by shift-invert subspace
  /// iteration on a dense LU factorization. Works at dimensions where the
  /// full solve would be too slow.
  std::vector<Complex> eigenvalues_near(Complex shift, int count = 1,
                                        double tol = 1e-11) const;
};

/// Periodic Fourier-spectral discretization of D_A^eps = D_0 + A (x) W_eps on
/// [-L, L): spectral differentiation (exact for band-limited functions) plus
/// the pointwise-sampled rank-two perturbation h v_eps(x_i) A v_eps(x_j).
/// Throws ResolutionError when eps < 4h (the bump is unresolved by the grid).
DiscretizedOperator fourier_dirac_matrix(const CouplingMatrix& A, double m, double eps,
                                         const Profile& profile, double L, int N);

/// Second-order finite differences for H_A on two half-grids with Dirichlet
/// walls at +-L and the four interface traces eliminated through one-sided
/// second-order stencils satisfying the H_A transmission condition.
DiscretizedOperator schrodinger_fd_matrix(const CouplingMatrix& A, double m, double L, int N);

struct ResolventResidual {
  double differential = 0.0;  // max |(D - z) g - psi| away from the interface
  double transmission = 0.0;  // |transmission residual of g at 0|
};

/// Applies the kernel to psi by adaptive quadrature, then checks the
/// defining resolvent properties with 4th-order finite differences on a
/// staggered grid (nodes straddle 0) and the trace condition at 0.
/// psi must be smooth and decay inside [-source_L, source_L].
ResolventResidual resolvent_residual(const KernelEvaluator& kernel, const CouplingMatrix& A,
                                     double m, Complex z,
                                     const std::function<Vec2C(double)>& psi, double source_L,
                                     double grid_L, int grid_n);

}  // namespace oracle
}  // namespace dirac1d
