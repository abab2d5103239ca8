#pragma once

#include <random>

#include "dirac1d/coupling.hpp"
#include "dirac1d/kernels.hpp"
#include "dirac1d/profile.hpp"
#include "dirac1d/quadrature.hpp"

namespace dirac1d::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex random_complex(double scale = 1.0) {
  return {uniform(-scale, scale), uniform(-scale, scale)};
}

inline CouplingMatrix random_coupling(double scale = 2.0) {
  return {random_complex(scale), random_complex(scale), random_complex(scale),
          random_complex(scale)};
}

inline CouplingMatrix random_hermitian_coupling(double scale = 2.0) {
  const Complex off = random_complex(scale);
  return {Complex(uniform(-scale, scale), 0.0), off, std::conj(off),
          Complex(uniform(-scale, scale), 0.0)};
}

/// Gap-interior or complex spectral parameter bounded away from the cut.
inline Complex random_resolvent_point(double m) {
  for (;;) {
    const Complex z = {uniform(-2.0, 2.0), uniform(-2.0, 2.0)};
    if (std::abs(z.imag()) > 0.15 ||
        (std::abs(m) > 0.0 && std::abs(z.real()) < std::abs(m) - 0.15 &&
         std::abs(z.imag()) > 1e-3))
      return z;
  }
}

/// Brute-force double integral of v(x) f(x,y) v(y) over the support square,
/// iterated adaptive quadrature. Panels are seeded at y = x (the diagonal
/// kink of |x - y| factors) and at every interior kink of v; a kink sitting
/// mid-panel would otherwise fool the adaptive error estimate.
template <typename F>
Complex smeared_double_integral(const Profile& v, const F& f, double tol = 1e-11) {
  const double lo = v.support_lo(), hi = v.support_hi();
  return integrate_complex(
      [&](double x) {
        std::vector<double> cuts(v.kinks());
        cuts.push_back(x);
        return v.evaluate(x) *
               integrate_complex([&](double y) { return f(x, y) * v.evaluate(y); }, lo, hi,
                                 tol * 0.1, cuts);
      },
      lo, hi, tol, v.kinks());
}

}  // namespace dirac1d::testing
