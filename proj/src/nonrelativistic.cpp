#include "dirac1d/nonrelativistic.hpp"

#include <algorithm>
#include <cmath>

namespace dirac1d {
namespace nonrel {

namespace {
void require_positive(double m, double c) {
  if (!(m > 0.0)) throw std::invalid_argument("nonrel: m must be positive");
  if (!(c > 0.0)) throw std::invalid_argument("nonrel: c must be positive");
}
}  // namespace

ScaledCoupling scale_coupling(const CouplingMatrix& A, double m, double c) {
  require_positive(m, c);
  ScaledCoupling s;
  s.base = A;
  s.m = m;
  s.c = c;
  s.scaled = CouplingMatrix(A.alpha / (2.0 * m * c), A.beta, A.gamma, 2.0 * m * c * A.delta);
  return s;
}

Complex k_c_of(Complex z, double m, double c) {
  const double mc2 = m * c * c;
  return sqrt_upper(z * z - mc2 * mc2) / c;
}

Mat2C Z_c_of(Complex z, double m, double c) {
  // Identical to Z for the effective mass m c^2.
  return Z_of(z, m * c * c);
}

KernelEvaluator relativistic_kernel_c(const CouplingMatrix& A, double m, double c, Complex z,
                                      double tol) {
  if (!(c > 0.0)) throw std::invalid_argument("relativistic_kernel_c: c must be positive");
  const double meff = m * c * c;
  if (on_cut(z, meff))
    throw NotInResolventSetError("relativistic_kernel_c: z on the essential spectrum");
  const Mat2C Zc = Z_of(z, meff);
  const Mat2C B = kSigma0 + (kI * 0.5) * (A.mat() * Zc);
  if (std::abs(det2(B)) <= tol)
    throw NotInResolventSetError("relativistic_kernel_c: z is an eigenvalue of D_A^{m,c}");
  const Complex kc = k_of(z, meff) / c;
  const Mat2C correction = Complex(c) * (inv2(B, tol) * A.mat());
  const Complex inv_c{1.0 / c, 0.0};
  return KernelEvaluator([kc, Zc, correction, inv_c](double x, double y, Side side) {
    auto free_at = [&](double diff) {
      const double s = signed_of(diff, side);
      return (kI * 0.5) * inv_c * (Zc + Complex(s) * kSigma1) *
             std::exp(kI * kc * std::abs(diff));
    };
    return free_at(x - y) - free_at(x) * correction * free_at(-y);
  });
}

Complex mu_of(Complex z, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("mu_of: m must be positive");
  if (z.imag() == 0.0 && z.real() >= 0.0)
    throw OnCutError("mu_of: z on [0,+inf), the essential spectrum of H_A");
  return sqrt_upper(2.0 * m * z);
}

Complex k_a_denominator(const CouplingMatrix& A, double m, Complex z) {
  const Complex mu = mu_of(z, m);
  return 4.0 - A.det() + 2.0 * kI * A.alpha / mu + 2.0 * kI * mu * A.delta;
}

Mat2C K_A_matrix(const CouplingMatrix& A, double m, Complex z, double tol) {
  const Complex mu = mu_of(z, m);
  const Complex denom = k_a_denominator(A, m, z);
  if (std::abs(denom) <= tol)
    throw EigenvalueHitError("K_A_matrix: z is an eigenvalue of H_A (denominator = 0)");
  const Complex det = A.det();
  Mat2C numer;
  numer.e[0] = mu * det - 2.0 * kI * A.alpha;
  numer.e[1] = 2.0 * A.beta;
  numer.e[2] = -2.0 * A.gamma;
  numer.e[3] = det / mu - 2.0 * kI * A.delta;
  return (kI * m / denom) * numer;
}

SchrodingerKernel::SchrodingerKernel(const CouplingMatrix& A, double m, Complex z, double tol)
    : mu_(mu_of(z, m)), K_(K_A_matrix(A, m, z, tol)), m_(m) {}

Complex SchrodingerKernel::evaluate(double x, double y, Side side) const {
  const double sx = signed_of(x, side);
  const double sy = signed_of(y, side);
  const Complex fx = std::exp(kI * mu_ * std::abs(x));
  const Complex fy = std::exp(kI * mu_ * std::abs(y));
  const Complex gx = sx * fx;
  const Complex gy = sy * fy;
  const Complex col0 = fx / (kI * mu_);
  const Complex row0 = fy / (kI * mu_);
  const Complex quad =
      col0 * (K_.e[0] * row0 + K_.e[1] * gy) + gx * (K_.e[2] * row0 + K_.e[3] * gy);
  return (kI * m_ / mu_) * std::exp(kI * mu_ * std::abs(x - y)) - quad;
}

KernelEvaluator SchrodingerKernel::embedded() const {
  const SchrodingerKernel self = *this;
  return KernelEvaluator([self](double x, double y, Side side) {
    Mat2C out;
    out.e[0] = self.evaluate(x, y, side);
    return out;
  });
}

std::vector<Complex> schrodinger_eigenvalues(const CouplingMatrix& A, double m, double tol) {
  if (!(m > 0.0)) throw std::invalid_argument("schrodinger_eigenvalues: m must be positive");
  const Complex a = 2.0 * kI * A.delta;
  const Complex b = 4.0 - A.det();
  const Complex c = 2.0 * kI * A.alpha;
  std::vector<Complex> mus;
  if (std::abs(a) <= tol) {
    if (std::abs(b) <= tol) {
      if (std::abs(c) <= tol)
        throw DegenerateConditionError(
            "schrodinger_eigenvalues: eigenvalue condition holds identically "
            "(alpha = delta = 0, det A = 4)");
      // No root.
    } else {
      mus.push_back(-c / b);
    }
  } else {
    const Complex disc = sqrt_upper(b * b - 4.0 * a * c);
    const Complex q = (std::abs(b - disc) > std::abs(b + disc)) ? (b - disc) : (b + disc);
    if (std::abs(q) <= tol) {
      mus.push_back(Complex{0.0, 0.0});
    } else {
      mus.push_back(-q / (2.0 * a));
      mus.push_back(-2.0 * c / q);
    }
  }
  std::vector<Complex> zs;
  for (Complex mu : mus) {
    if (mu.imag() <= tol) continue;  // f_z must be square integrable
    const Complex z = mu * mu / (2.0 * m);
    const bool duplicate = std::any_of(zs.begin(), zs.end(), [&](Complex w) {
      return std::abs(w - z) <= 1e-12 * (1.0 + std::abs(z));
    });
    if (!duplicate) zs.push_back(z);
  }
  return zs;
}

Mat2C vav_star(const CouplingMatrix& A) {
  // V = diag(i, 1):  V A V* = [[alpha, i beta], [-i gamma, delta]].
  Mat2C b;
  b.e[0] = A.alpha;
  b.e[1] = kI * A.beta;
  b.e[2] = -kI * A.gamma;
  b.e[3] = A.delta;
  return b;
}

Vec2C h_transmission_residual(const CouplingMatrix& A, const SchrodingerTraces& t) {
  const Vec2C gamma1{t.dpsi_plus - t.dpsi_minus, t.psi_plus - t.psi_minus};
  const Vec2C gamma2{0.5 * (t.psi_plus + t.psi_minus), -0.5 * (t.dpsi_plus + t.dpsi_minus)};
  return gamma1 - vav_star(A) * gamma2;
}

double nonrel_limit_distance(const CouplingMatrix& A, double m, double c, Complex z,
                             double truncation_L, int grid_n) {
  require_positive(m, c);
  const double mc2 = m * c * c;
  const ScaledCoupling sc = scale_coupling(A, m, c);
  const KernelEvaluator rel = relativistic_kernel_c(sc.scaled, m, c, z + mc2);
  const SchrodingerKernel schro(A, m, z);
  const double decay =
      std::min(k_of(z + mc2, mc2).imag() / c, mu_of(z, m).imag());
  const HsDistance hs = hs_quadrature(rel, schro.embedded(), truncation_L, grid_n, decay);
  return std::sqrt(hs.value);
}

double krein_identity_check(const CouplingMatrix& A, double m, Complex z) {
  const Complex mu = mu_of(z, m);
  const Mat2C a_rel = -vav_star(A);
  const Mat2C m_hat = (kI * 0.5) * Mat2C::diag(1.0 / mu, mu);
  const Mat2C lhs = a_rel * inv2(kSigma0 - m_hat * a_rel);
  const Mat2C rhs = Complex(-2.0 / m) * K_A_matrix(A, m, z);
  return (lhs - rhs).frobenius_norm();
}

}  // namespace nonrel
}  // namespace dirac1d
