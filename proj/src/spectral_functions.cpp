#include "dirac1d/spectral_functions.hpp"

#include <cmath>
#include <sstream>

namespace dirac1d {

void ModelParams::validate() const {
  if (!std::isfinite(m)) throw std::invalid_argument("ModelParams: m must be finite");
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("ModelParams: c must be positive and finite");
}

Complex sqrt_upper(Complex w) {
  if (w.imag() == 0.0) {
    // Handle both signed zeros explicitly so the branch does not depend on
    // the sign bit of -0.0.
    if (w.real() >= 0.0) return {std::sqrt(w.real()), 0.0};
    return {0.0, std::sqrt(-w.real())};
  }
  Complex s = std::sqrt(w);  // principal: Re s >= 0, sgn(Im s) = sgn(Im w)
  if (s.imag() < 0.0) s = -s;
  return s;
}

Complex k_of(Complex z, double m) { return sqrt_upper(z * z - m * m); }

Complex zeta_of(Complex z, double m) {
  if (z == Complex(m, 0.0) || z == Complex(-m, 0.0)) {
    std::ostringstream os;
    os << "zeta_of: z = " << z.real() << (z.imag() < 0 ? "-" : "+")
       << std::abs(z.imag()) << "i is a branch point (k = 0)";
    throw BranchPointError(os.str());
  }
  if (m == 0.0) {
    if (z.imag() > 0.0) return {1.0, 0.0};
    if (z.imag() < 0.0) return {-1.0, 0.0};
    // Real z != 0 sits on the cut; the branch convention gives z/|z|.
    return {z.real() > 0.0 ? 1.0 : -1.0, 0.0};
  }
  return (z + m) / k_of(z, m);
}

Mat2C Z_of(Complex z, double m) {
  const Complex zeta = zeta_of(z, m);
  return Mat2C::diag(zeta, 1.0 / zeta);
}

bool on_cut(Complex z, double m, double tol) {
  return std::abs(z.imag()) <= tol && std::abs(z.real()) >= std::abs(m);
}

}  // namespace dirac1d
