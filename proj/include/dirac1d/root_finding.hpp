#pragma once

#include <functional>
#include <vector>

#include "dirac1d/mat2.hpp"

namespace dirac1d {

/// Axis-aligned rectangle in the complex plane.
struct Rect {
  double re0 = 0.0, re1 = 0.0, im0 = 0.0, im1 = 0.0;

  bool contains(Complex z, double slack = 0.0) const {
    return z.real() >= re0 - slack && z.real() <= re1 + slack && z.imag() >= im0 - slack &&
           z.imag() <= im1 + slack;
  }
  Complex center() const { return {0.5 * (re0 + re1), 0.5 * (im0 + im1)}; }
  double diameter() const { return std::hypot(re1 - re0, im1 - im0); }
};

struct RootSearchOptions {
  double contour_zero_tol = 1e-9;   // |f| below this on the contour is fatal
  double newton_tol = 1e-12;        // |f| target for polished roots
  double min_cell = 1e-7;           // stop subdividing below this diameter
  double polish_diameter = 0.1;     // localize single roots to this size first
  int max_depth = 40;
  int initial_samples_per_edge = 16;
  int max_refine_depth = 48;        // phase-continuation bisection limit
};

struct RootSearchResult {
  std::vector<Complex> roots;  // polished; repeated according to winding count
  struct Leaf {
    Rect rect;
    int winding = 0;
    std::vector<Complex> roots;
  };
  std::vector<Leaf> leaves;  // cells in which polishing took place

  int total_winding() const {
    int n = 0;
    for (const auto& l : leaves) n += l.winding;
    return n;
  }
};

/// All zeros of the analytic function f inside the rectangle, located by
/// argument-principle winding counts on the boundary (phase continuation with
/// adaptive step refinement), recursive subdivision, and a final Newton
/// polish using the analytic derivative df.
///
/// Throws ContourOnZeroError when |f| falls below contour_zero_tol on the
/// boundary of the initial rectangle; interior subdivision lines are jittered
/// automatically instead.
RootSearchResult find_zeros(const std::function<Complex(Complex)>& f,
                            const std::function<Complex(Complex)>& df, const Rect& region,
                            const RootSearchOptions& opts = {});

}  // namespace dirac1d
