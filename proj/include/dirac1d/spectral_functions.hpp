#pragma once

#include "dirac1d/errors.hpp"
#include "dirac1d/mat2.hpp"

namespace dirac1d {

/// Mass m (any sign; the nonrelativistic module requires m > 0) and speed of
/// light c (positive, 1 unless stated otherwise).
struct ModelParams {
  double m = 0.0;
  double c = 1.0;

  void validate() const;
};

/// Complex square root with the branch fixed by Im sqrt(w) > 0 for
/// w outside [0,+inf); on [0,+inf) the nonnegative real root is returned.
Complex sqrt_upper(Complex w);

/// k(z) = sqrt(z^2 - m^2) on the Im > 0 branch. k(+-m) = 0 is returned as is;
/// callers that cannot tolerate the branch point must guard themselves.
Complex k_of(Complex z, double m);

/// zeta(z) = (z + m) / k(z). For m = 0 this degenerates to sgn(Im z) on the
/// open half-planes; real z != 0 falls back to the branch convention sgn(z).
/// Throws BranchPointError at z = +-m.
Complex zeta_of(Complex z, double m);

/// Z(z) = diag(zeta(z), 1/zeta(z)).
Mat2C Z_of(Complex z, double m);

/// True when z lies on the essential spectrum (-inf,-|m|] u [|m|,+inf)
/// within the given absolute tolerance on the imaginary part.
bool on_cut(Complex z, double m, double tol = 0.0);

}  // namespace dirac1d
