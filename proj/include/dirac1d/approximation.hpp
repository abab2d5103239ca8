#pragma once

#include "dirac1d/kernels.hpp"
#include "dirac1d/profile.hpp"
#include "dirac1d/root_finding.hpp"

namespace dirac1d {
namespace approx {

/// alpha_1(w) = 2 * integral over [0, 2S] of rho(t) e^{iwt} dt, the
/// autocorrelation reduction of the double integral
/// alpha_eps = <v_eps, e^{ik|.|} v_eps> with w = eps * k.
Complex alpha1(const Profile& profile, Complex w, double tol = 1e-12);

/// d/dw alpha_1(w) = 2 * integral of i t rho(t) e^{iwt} dt.
Complex alpha1_derivative(const Profile& profile, Complex w, double tol = 1e-12);

/// The sgn-weighted companion integral, evaluated by symmetric 2-D tensor
/// quadrature; the integrand is antisymmetric under the (x,y) swap, so the
/// result is zero up to roundoff for every profile.
Complex beta_epsilon_check(const Profile& profile, Complex w);

/// I + (i/2) alpha_1(eps k(z)) A Z(z); the finite-eps replacement of the
/// eigenvalue/resolvent matrix of the limit operator.
Mat2C approx_matrix(const CouplingMatrix& A, double m, Complex z, double eps,
                    const Profile& profile);

/// Resolvent kernel of D_A^eps = D_0 + A (x) |v_eps><v_eps|:
/// R_z(x,y) - P(x) T_eps(z) A Q(y) with the profile-smeared free columns
/// P(x) = integral R_z(x, eps s) v(s) ds and rows Q(y) = integral v(t) R_z(eps t, y) dt.
KernelEvaluator approx_resolvent_kernel(const CouplingMatrix& A, double m, Complex z,
                                        double eps, const Profile& profile,
                                        double tol = 1e-12);

struct ApproxEigenvalue {
  Complex z{};
  double epsilon = 0.0;
  double residual = 0.0;  // |det approx_matrix| after polishing
};

/// Zeros of eta_eps(z) = det(approx_matrix) inside the rectangle, by
/// argument-principle counting plus Newton polishing with the analytic
/// derivative. The region must keep a margin from the essential spectrum.
std::vector<ApproxEigenvalue> approx_eigenvalues(const CouplingMatrix& A, double m, double eps,
                                                 const Profile& profile, const Rect& region,
                                                 const RootSearchOptions& opts = {});

/// Same search, with the per-cell winding report exposed.
RootSearchResult approx_eigenvalue_search(const CouplingMatrix& A, double m, double eps,
                                          const Profile& profile, const Rect& region,
                                          const RootSearchOptions& opts = {});

/// Squared Hilbert-Schmidt distance between the eps-resolvent and the exact
/// resolvent: tensor quadrature of |R^{A,eps}_z - R^A_z|_F^2 over [-L,L]^2,
/// with the exponential tail estimate reported alongside.
HsDistance hs_distance(const CouplingMatrix& A, double m, Complex z, double eps,
                       const Profile& profile, double truncation_L, int grid_n = 400);

/// |Im z| <= ||A|| eps^{-1} ||v||^2 for every eigenvalue of D_A^eps.
double spectral_enclosure(const CouplingMatrix& A, double eps, const Profile& profile);

}  // namespace approx
}  // namespace dirac1d
