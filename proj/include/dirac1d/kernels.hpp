#pragma once

#include <functional>
#include <memory>

#include "dirac1d/coupling.hpp"
#include "dirac1d/spectrum.hpp"

namespace dirac1d {

/// Value substituted for sgn(0) whenever a sign argument inside a kernel
/// formula vanishes (the coincidence line x = y and the interface factors at
/// x = 0 or y = 0). sgn(0) itself is never formed.
enum class Side { Minus = -1, Plus = +1 };

inline double signed_of(double u, Side side) {
  if (u > 0.0) return 1.0;
  if (u < 0.0) return -1.0;
  return side == Side::Plus ? 1.0 : -1.0;
}

/// Immutable pointwise-evaluable 2x2 integral kernel. Evaluation is pure, so
/// a single evaluator may be shared across threads freely.
class KernelEvaluator {
 public:
  using Fn = std::function<Mat2C(double x, double y, Side side)>;

  KernelEvaluator() = default;
  explicit KernelEvaluator(Fn fn) : fn_(std::make_shared<Fn>(std::move(fn))) {}

  Mat2C evaluate(double x, double y, Side side = Side::Plus) const { return (*fn_)(x, y, side); }
  Mat2C operator()(double x, double y, Side side = Side::Plus) const {
    return evaluate(x, y, side);
  }

 private:
  std::shared_ptr<const Fn> fn_;
};

/// Free kernel R_z(x,y) = (i/2) (Z(z) + sgn(x-y) sigma1) e^{i k(z)|x-y|}.
KernelEvaluator free_resolvent_kernel(double m, Complex z);

/// Point value of the free kernel; `diff` is x - y and `side` resolves the
/// coincidence diff = 0.
Mat2C free_kernel_value(double m, Complex z, double diff, Side side);

/// Full resolvent kernel R_z(x,y) - R_z(x,0) (I + (i/2) A Z(z))^{-1} A R_z(0,y).
/// Throws NotInResolventSetError when |det(I + (i/2) A Z(z))| <= tol and
/// BranchPointError on the cut endpoints.
KernelEvaluator resolvent_kernel(const CouplingMatrix& A, double m, Complex z,
                                 double tol = 1e-12);

/// Weyl function of the boundary triplet: M(z) = (i/2) sigma2 Z(z) sigma2.
Mat2C weyl_function(double m, Complex z);

/// Gamma field kernel x -> i R_z(x,0) sigma2 at one point.
Mat2C gamma_field_kernel(double m, Complex z, double x, Side side = Side::Plus);

struct HsDistance {
  double value = 0.0;       // quadrature of the squared Frobenius integrand
  double tail_bound = 0.0;  // estimate for the part outside [-L,L]^2
};

/// Tensor-product quadrature of the squared Frobenius difference of two
/// kernels over [-L,L]^2 with grid_n nodes per axis (composite Gauss panels),
/// plus a tail estimate from the exponential envelope rate `decay`
/// (the integrand decays like e^{-2*decay*(|x|+|y|)} far from the origin).
HsDistance hs_quadrature(const KernelEvaluator& a, const KernelEvaluator& b, double L,
                         int grid_n, double decay);

/// Truncation radius that pushes the e^{-2*decay*L} envelope below `target`.
double suggest_truncation(double decay, double target = 1e-12);

}  // namespace dirac1d
