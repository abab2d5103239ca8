#include "dirac1d/root_finding.hpp"

#include <cmath>

#include "dirac1d/errors.hpp"

namespace dirac1d {

namespace {

const double kPi = std::acos(-1.0);

struct ContourWalker {
  const std::function<Complex(Complex)>& f;
  const RootSearchOptions& opts;
  bool outer;  // errors on the user-supplied contour are fatal

  Complex value(Complex z) const {
    const Complex v = f(z);
    if (std::abs(v) < opts.contour_zero_tol) {
      if (outer)
        throw ContourOnZeroError("find_zeros: |f| < tolerance on the search contour; "
                                 "perturb the region");
      throw ContourOnZeroError("interior");
    }
    return v;
  }

  // Accumulated argument increment along the segment [za, zb], bisecting
  // until each step turns by less than pi/2.
  double phase_sweep(Complex za, Complex vb_a, Complex zb, Complex vb_b, int depth) const {
    const double d = std::arg(vb_b / vb_a);
    if (std::abs(d) < 0.5 * kPi) return d;
    if (depth >= opts.max_refine_depth)
      throw ContourOnZeroError("find_zeros: phase continuation failed to resolve the contour");
    const Complex mid = 0.5 * (za + zb);
    const Complex vm = value(mid);
    return phase_sweep(za, vb_a, mid, vm, depth + 1) + phase_sweep(mid, vm, zb, vb_b, depth + 1);
  }

  int winding(const Rect& r) const {
    const Complex corners[5] = {{r.re0, r.im0}, {r.re1, r.im0}, {r.re1, r.im1},
                                {r.re0, r.im1}, {r.re0, r.im0}};
    double total = 0.0;
    for (int edge = 0; edge < 4; ++edge) {
      const Complex a = corners[edge], b = corners[edge + 1];
      const int n = opts.initial_samples_per_edge;
      Complex zp = a, vp = value(a);
      for (int i = 1; i <= n; ++i) {
        const Complex z = a + (b - a) * (static_cast<double>(i) / n);
        const Complex v = value(z);
        total += phase_sweep(zp, vp, z, v, 0);
        zp = z;
        vp = v;
      }
    }
    const double turns = total / (2.0 * kPi);
    const int w = static_cast<int>(std::lround(turns));
    if (std::abs(turns - w) > 0.25)
      throw NumericalError("find_zeros: winding number failed to converge to an integer");
    return w;
  }
};

Complex newton_polish(const std::function<Complex(Complex)>& f,
                      const std::function<Complex(Complex)>& df, Complex z0, const Rect& cell,
                      double tol) {
  Complex z = z0;
  Complex best = z0;
  double best_abs = std::abs(f(z0));
  for (int it = 0; it < 80; ++it) {
    const Complex fz = f(z);
    const double a = std::abs(fz);
    if (a < best_abs) {
      best_abs = a;
      best = z;
    }
    if (a <= tol) return z;
    const Complex d = df(z);
    if (std::abs(d) == 0.0) break;
    Complex step = fz / d;
    // Keep iterates close to the isolating cell.
    const double cap = 2.0 * std::max(cell.re1 - cell.re0, cell.im1 - cell.im0) + 1e-12;
    if (std::abs(step) > cap) step *= cap / std::abs(step);
    z -= step;
    if (!cell.contains(z, 4.0 * cap)) {
      z = best;  // wandered off; restart damped from the best point so far
      z -= 0.5 * f(z) / df(z);
    }
  }
  return best;
}

struct Subdivider {
  const std::function<Complex(Complex)>& f;
  const std::function<Complex(Complex)>& df;
  const RootSearchOptions& opts;
  ContourWalker inner_walker;
  RootSearchResult* out;

  void descend(const Rect& r, int winding, int depth) {
    if (winding == 0) return;
    const bool localized = winding == 1 && r.diameter() <= opts.polish_diameter;
    if (localized || r.diameter() < opts.min_cell || depth >= opts.max_depth) {
      polish_cell(r, winding);
      return;
    }
    // Split along the longer axis; jitter the cut when it lands on a zero.
    const bool split_re = (r.re1 - r.re0) >= (r.im1 - r.im0);
    for (double shift : {0.5, 0.55, 0.45, 0.6, 0.4, 0.52}) {
      Rect a = r, b = r;
      if (split_re) {
        const double cut = r.re0 + shift * (r.re1 - r.re0);
        a.re1 = cut;
        b.re0 = cut;
      } else {
        const double cut = r.im0 + shift * (r.im1 - r.im0);
        a.im1 = cut;
        b.im0 = cut;
      }
      try {
        const int wa = inner_walker.winding(a);
        const int wb = inner_walker.winding(b);
        if (wa + wb != winding)
          continue;  // a root sits too close to the cut; move it
        descend(a, wa, depth + 1);
        descend(b, wb, depth + 1);
        return;
      } catch (const ContourOnZeroError&) {
        continue;
      }
    }
    // Every cut failed; treat the whole cell as one cluster.
    polish_cell(r, winding);
  }

  void polish_cell(const Rect& r, int winding) {
    Complex root = newton_polish(f, df, r.center(), r, opts.newton_tol);
    RootSearchResult::Leaf leaf;
    leaf.rect = r;
    leaf.winding = winding;
    for (int i = 0; i < winding; ++i) {
      leaf.roots.push_back(root);
      out->roots.push_back(root);
    }
    out->leaves.push_back(std::move(leaf));
  }
};

}  // namespace

RootSearchResult find_zeros(const std::function<Complex(Complex)>& f,
                            const std::function<Complex(Complex)>& df, const Rect& region,
                            const RootSearchOptions& opts) {
  if (!(region.re0 < region.re1) || !(region.im0 < region.im1))
    throw std::invalid_argument("find_zeros: empty rectangle");
  RootSearchResult result;
  ContourWalker outer{f, opts, true};
  const int w = outer.winding(region);
  if (w == 0) return result;
  Subdivider sub{f, df, opts, ContourWalker{f, opts, false}, &result};
  sub.descend(region, w, 0);
  return result;
}

}  // namespace dirac1d
