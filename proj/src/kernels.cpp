#include "dirac1d/kernels.hpp"

#include <cmath>

#include "dirac1d/quadrature.hpp"

namespace dirac1d {

Mat2C free_kernel_value(double m, Complex z, double diff, Side side) {
  const Complex k = k_of(z, m);
  const double s = signed_of(diff, side);
  const Mat2C zmat = Z_of(z, m);
  return (kI * 0.5) * (zmat + Complex(s) * kSigma1) * std::exp(kI * k * std::abs(diff));
}

KernelEvaluator free_resolvent_kernel(double m, Complex z) {
  if (on_cut(z, m)) throw BranchPointError("free_resolvent_kernel: z on the essential spectrum");
  const Complex k = k_of(z, m);
  const Mat2C zmat = Z_of(z, m);
  return KernelEvaluator([k, zmat](double x, double y, Side side) {
    const double diff = x - y;
    const double s = signed_of(diff, side);
    return (kI * 0.5) * (zmat + Complex(s) * kSigma1) * std::exp(kI * k * std::abs(diff));
  });
}

KernelEvaluator resolvent_kernel(const CouplingMatrix& A, double m, Complex z, double tol) {
  if (on_cut(z, m)) throw BranchPointError("resolvent_kernel: z on the essential spectrum");
  const Complex residual = eigenvalue_residual(A, m, z);
  if (std::abs(residual) <= tol)
    throw NotInResolventSetError("resolvent_kernel: z is an eigenvalue of D_A (det = " +
                                 std::to_string(std::abs(residual)) + ")");
  const Complex k = k_of(z, m);
  const Mat2C zmat = Z_of(z, m);
  const Mat2C correction = inv2(kSigma0 + (kI * 0.5) * (A.mat() * zmat), tol) * A.mat();
  return KernelEvaluator([k, zmat, correction](double x, double y, Side side) {
    auto free_at = [&](double diff) {
      const double s = signed_of(diff, side);
      return (kI * 0.5) * (zmat + Complex(s) * kSigma1) * std::exp(kI * k * std::abs(diff));
    };
    return free_at(x - y) - free_at(x) * correction * free_at(-y);
  });
}

Mat2C weyl_function(double m, Complex z) {
  return (kI * 0.5) * kSigma2 * Z_of(z, m) * kSigma2;
}

Mat2C gamma_field_kernel(double m, Complex z, double x, Side side) {
  return kI * free_kernel_value(m, z, x, side) * kSigma2;
}

HsDistance hs_quadrature(const KernelEvaluator& a, const KernelEvaluator& b, double L,
                         int grid_n, double decay) {
  if (L <= 0.0 || grid_n < 8) throw std::invalid_argument("hs_quadrature: bad grid");
  // Composite Gauss panels, symmetric about 0 so that 0 is a panel edge and
  // never a node; the same axis grid is used for x and y.
  const int order = 8;
  const int panels = std::max(2, (grid_n + order - 1) / order) & ~1;
  const GaussRule& g = gauss_legendre(order);
  const double h = 2.0 * L / panels;
  std::vector<double> nodes, weights;
  nodes.reserve(panels * order);
  for (int p = 0; p < panels; ++p) {
    const double lo = -L + p * h;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      nodes.push_back(lo + 0.5 * h * (1.0 + g.x[i]));
      weights.push_back(0.5 * h * g.w[i]);
    }
  }

  HsDistance out;
  // Fit of B in the envelope |diff(x,y)| <= B e^{-decay (|x|+|y|)}, taken
  // over the outermost panel ring.
  double envelope_coeff = 0.0;
  const double ring = L - h;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const Mat2C d = a.evaluate(nodes[i], nodes[j], Side::Plus) -
                      b.evaluate(nodes[i], nodes[j], Side::Plus);
      const double f2 = d.frobenius_norm();
      out.value += weights[i] * weights[j] * f2 * f2;
      if (decay > 0.0 && (std::abs(nodes[i]) > ring || std::abs(nodes[j]) > ring))
        envelope_coeff = std::max(
            envelope_coeff, f2 * std::exp(decay * (std::abs(nodes[i]) + std::abs(nodes[j]))));
    }
  }
  // Integral of the squared envelope over the region outside the box.
  if (decay > 0.0)
    out.tail_bound =
        2.0 * envelope_coeff * envelope_coeff * std::exp(-2.0 * decay * L) / (decay * decay);
  return out;
}

double suggest_truncation(double decay, double target) {
  if (decay <= 0.0) throw std::invalid_argument("suggest_truncation: decay must be positive");
  return -std::log(target) / (2.0 * decay);
}

}  // namespace dirac1d
