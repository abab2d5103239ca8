#include "dirac1d/mat2.hpp"

#include <algorithm>

namespace dirac1d {

Mat2C inv2(const Mat2C& m, double tol) {
  const Complex d = det2(m);
  if (std::abs(d) <= tol)
    throw SingularMatrixError("inv2: |det| = " + std::to_string(std::abs(d)) +
                              " below tolerance");
  return adj2(m) / d;
}

std::array<double, 2> singular_values(const Mat2C& m) {
  // Eigenvalues of the 2x2 Hermitian matrix m^* m, in closed form.
  const Mat2C g = m.adjoint() * m;
  const double t = g.e[0].real() + g.e[3].real();
  const double d = std::max(0.0, det2(g).real());
  double disc = t * t - 4.0 * d;
  disc = std::sqrt(std::max(0.0, disc));
  const double lo_hi = 0.5 * (t + disc);
  // Smaller eigenvalue via the product to avoid cancellation.
  const double lo_lo = lo_hi > 0.0 ? d / lo_hi : 0.0;
  return {std::sqrt(std::max(0.0, lo_hi)), std::sqrt(std::max(0.0, lo_lo))};
}

double spectral_norm(const Mat2C& m) { return singular_values(m)[0]; }

Vec2C least_singular_vector(const Mat2C& m) {
  // Eigenvector of m^* m for its smallest eigenvalue lambda = sv[1]^2.
  // Rows of (m^* m - lambda) are proportional; take the larger one.
  const auto sv = singular_values(m);
  const Mat2C g = m.adjoint() * m;
  const double lambda = sv[1] * sv[1];
  const Complex r0a = g.e[0] - lambda, r0b = g.e[1];
  const Complex r1a = g.e[2], r1b = g.e[3] - lambda;
  Vec2C v;
  if (std::norm(r0a) + std::norm(r0b) >= std::norm(r1a) + std::norm(r1b))
    v = {-r0b, r0a};
  else
    v = {-r1b, r1a};
  const double n = v.norm();
  if (n == 0.0) {
    // m^* m is exactly diagonal; pick the coordinate with the smaller entry.
    return std::abs(g.e[0]) <= std::abs(g.e[3]) ? Vec2C{1.0, 0.0} : Vec2C{0.0, 1.0};
  }
  return v / n;
}

std::vector<Vec2C> kernel_basis(const Mat2C& m, double tol) {
  const auto sv = singular_values(m);
  if (sv[0] <= tol) {
    // Numerically the zero matrix: the whole space.
    return {Vec2C{1.0, 0.0}, Vec2C{0.0, 1.0}};
  }
  if (sv[1] > tol * sv[0]) return {};
  return {least_singular_vector(m)};
}

}  // namespace dirac1d
