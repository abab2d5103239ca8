#include "dirac1d/approximation.hpp"

#include <cmath>

#include "dirac1d/quadrature.hpp"

namespace dirac1d {
namespace approx {

namespace {

std::vector<double> autocorrelation_kinks(const Profile& p) {
  // rho kinks where a kink of the shifted copy crosses one of the original:
  // at every pairwise difference of the knot set (support endpoints
  // included). Capped for very fine tables; the adaptive splitting still
  // converges without the hints, just more slowly.
  std::vector<double> knots{p.support_lo(), p.support_hi()};
  knots.insert(knots.end(), p.kinks().begin(), p.kinks().end());
  std::vector<double> cuts;
  const double len = p.autocorrelation_length();
  if (knots.size() <= 24) {
    for (std::size_t i = 0; i < knots.size(); ++i)
      for (std::size_t j = i + 1; j < knots.size(); ++j) {
        const double d = std::abs(knots[i] - knots[j]);
        if (d > 0.0 && d < len) cuts.push_back(d);
      }
  }
  return cuts;
}

}  // namespace

Complex alpha1(const Profile& profile, Complex w, double tol) {
  const double len = profile.autocorrelation_length();
  const auto cuts = autocorrelation_kinks(profile);
  return 2.0 * integrate_complex(
                   [&](double t) { return profile.autocorrelation(t) * std::exp(kI * w * t); },
                   0.0, len, tol, cuts);
}

Complex alpha1_derivative(const Profile& profile, Complex w, double tol) {
  const double len = profile.autocorrelation_length();
  const auto cuts = autocorrelation_kinks(profile);
  return 2.0 * integrate_complex(
                   [&](double t) {
                     return profile.autocorrelation(t) * (kI * t) * std::exp(kI * w * t);
                   },
                   0.0, len, tol, cuts);
}

Complex beta_epsilon_check(const Profile& profile, Complex w) {
  const double lo = profile.support_lo(), hi = profile.support_hi();
  return tensor_integrate<Complex>(
      [&](double x, double y) {
        const double d = x - y;
        const double s = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
        return s * profile.evaluate(x) * profile.evaluate(y) * std::exp(kI * w * std::abs(d));
      },
      lo, hi, lo, hi, 32, 8);
}

Mat2C approx_matrix(const CouplingMatrix& A, double m, Complex z, double eps,
                    const Profile& profile) {
  if (on_cut(z, m)) throw BranchPointError("approx_matrix: z on the essential spectrum");
  const Complex a1 = alpha1(profile, eps * k_of(z, m));
  return kSigma0 + (kI * 0.5) * a1 * (A.mat() * Z_of(z, m));
}

KernelEvaluator approx_resolvent_kernel(const CouplingMatrix& A, double m, Complex z,
                                        double eps, const Profile& profile, double tol) {
  if (eps <= 0.0) throw std::invalid_argument("approx_resolvent_kernel: eps must be positive");
  const Mat2C B = approx_matrix(A, m, z, eps, profile);
  if (std::abs(det2(B)) <= tol)
    throw NotInResolventSetError("approx_resolvent_kernel: z is an eigenvalue of D_A^eps");
  const Mat2C correction = inv2(B, tol) * A.mat();
  const Complex k = k_of(z, m);
  const Mat2C zmat = Z_of(z, m);
  const double lo = profile.support_lo(), hi = profile.support_hi();
  // Fourier factors of v; outside the scaled support the smeared columns and
  // rows reduce to the free kernel times one of these scalars.
  const Complex phi_pos = profile.fourier(eps * k);   // smear argument stays positive
  const Complex phi_neg = profile.fourier(-eps * k);  // smear argument stays negative
  const auto kinks = profile.kinks();

  auto free_at = [k, zmat](double diff, Side side) {
    const double s = signed_of(diff, side);
    return (kI * 0.5) * (zmat + Complex(s) * kSigma1) * std::exp(kI * k * std::abs(diff));
  };

  // smear(u, dir) = integral R_z(u + dir*eps*s) v(s) ds with dir = +-1.
  // The column factor is P(x) = smear(x, -1); the row factor is
  // Q(y) = integral v(t) R_z(eps t - y) dt = smear(-y, +1).
  auto smear = [=](double u, double dir, Side side) {
    const double end_a = u + dir * eps * lo;
    const double end_b = u + dir * eps * hi;
    if (std::min(end_a, end_b) >= 0.0)
      return free_at(u, side) * (dir > 0 ? phi_pos : phi_neg);
    if (std::max(end_a, end_b) <= 0.0)
      return free_at(u, side) * (dir > 0 ? phi_neg : phi_pos);
    // The scaled support straddles the kink of R_z; split the panel there.
    std::vector<double> cuts(kinks.begin(), kinks.end());
    cuts.push_back(-u / (dir * eps));
    return integrate<Mat2C>(
        [&](double s) {
          return free_at(u + dir * eps * s, side) * Complex(profile.evaluate(s));
        },
        lo, hi, 1e-12, cuts);
  };

  return KernelEvaluator([=](double x, double y, Side side) {
    const Mat2C P = smear(x, -1.0, side);
    const Mat2C Q = smear(-y, +1.0, side);
    return free_at(x - y, side) - P * correction * Q;
  });
}

std::vector<ApproxEigenvalue> approx_eigenvalues(const CouplingMatrix& A, double m, double eps,
                                                 const Profile& profile, const Rect& region,
                                                 const RootSearchOptions& opts) {
  const RootSearchResult found = approx_eigenvalue_search(A, m, eps, profile, region, opts);
  std::vector<ApproxEigenvalue> out;
  out.reserve(found.roots.size());
  for (Complex z : found.roots) {
    ApproxEigenvalue ev;
    ev.z = z;
    ev.epsilon = eps;
    ev.residual = std::abs(det2(approx_matrix(A, m, z, eps, profile)));
    out.push_back(ev);
  }
  return out;
}

RootSearchResult approx_eigenvalue_search(const CouplingMatrix& A, double m, double eps,
                                          const Profile& profile, const Rect& region,
                                          const RootSearchOptions& opts) {
  // The region must stay clear of the essential spectrum and branch points:
  // eta_eps is only analytic off the cut.
  const bool crosses_real = region.im0 <= 0.0 && region.im1 >= 0.0;
  if (crosses_real) {
    if (m == 0.0)
      throw std::invalid_argument("approx_eigenvalue_search: region touches the cut (m = 0)");
    if (region.re0 <= -std::abs(m) || region.re1 >= std::abs(m))
      throw std::invalid_argument(
          "approx_eigenvalue_search: region touches the essential spectrum or +-m");
  }

  auto eta = [&](Complex z) { return det2(approx_matrix(A, m, z, eps, profile)); };
  auto deta = [&](Complex z) {
    const Complex k = k_of(z, m);
    const Complex a1 = alpha1(profile, eps * k);
    const Complex da1 = alpha1_derivative(profile, eps * k);
    const Complex zeta = zeta_of(z, m);
    const Mat2C Z = Mat2C::diag(zeta, 1.0 / zeta);
    // zeta' = -m (z+m) / k^3; for m = 0 the matrix Z is locally constant.
    Complex dzeta{0.0, 0.0};
    if (m != 0.0) dzeta = -m * (z + m) / (k * k * k);
    const Mat2C dZ = Mat2C::diag(dzeta, -dzeta / (zeta * zeta));
    const Mat2C B = kSigma0 + (kI * 0.5) * a1 * (A.mat() * Z);
    const Mat2C dB =
        (kI * 0.5) * ((da1 * eps * z / k) * (A.mat() * Z) + a1 * (A.mat() * dZ));
    return (adj2(B) * dB).trace();
  };
  return find_zeros(eta, deta, region, opts);
}

HsDistance hs_distance(const CouplingMatrix& A, double m, Complex z, double eps,
                       const Profile& profile, double truncation_L, int grid_n) {
  const KernelEvaluator exact = resolvent_kernel(A, m, z);
  const KernelEvaluator approximate = approx_resolvent_kernel(A, m, z, eps, profile);
  return hs_quadrature(approximate, exact, truncation_L, grid_n, k_of(z, m).imag());
}

double spectral_enclosure(const CouplingMatrix& A, double eps, const Profile& profile) {
  if (eps <= 0.0) throw std::invalid_argument("spectral_enclosure: eps must be positive");
  return spectral_norm(A.mat()) / eps * profile.l2_norm_sq();
}

}  // namespace approx
}  // namespace dirac1d
