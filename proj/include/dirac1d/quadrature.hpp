#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "dirac1d/errors.hpp"
#include "dirac1d/mat2.hpp"

namespace dirac1d {

/// Gauss-Legendre rule of order n on [-1,1]; nodes ascending. Rules are
/// computed once per order and cached (thread-safe function-local static).
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

const GaussRule& gauss_legendre(int n);

namespace detail {
inline double quad_abs(double v) { return std::abs(v); }
inline double quad_abs(const Complex& v) { return std::abs(v); }
inline double quad_abs(const Vec2C& v) { return v.norm(); }
inline double quad_abs(const Mat2C& v) { return v.frobenius_norm(); }

template <typename T, typename F>
T panel_sum(const F& f, double a, double b, const GaussRule& g) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  T acc{};
  for (std::size_t i = 0; i < g.x.size(); ++i)
    acc = acc + f(mid + half * g.x[i]) * Complex(g.w[i] * half);
  return acc;
}

template <>
inline double panel_sum<double>(const std::function<double(double)>& f, double a, double b,
                                const GaussRule& g) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) acc += f(mid + half * g.x[i]) * (g.w[i] * half);
  return acc;
}
}  // namespace detail

/// Adaptive Gauss-Legendre integration of f over [a,b]. Panels are bisected
/// until the whole-vs-halves discrepancy drops below tol (absolute, plus
/// relative to the accumulated magnitude). Optional breakpoints seed the
/// initial panel boundaries; pass the kink locations of the integrand there.
template <typename T, typename F>
T integrate(const F& f, double a, double b, double tol = 1e-11,
            std::span<const double> breakpoints = {}, int order = 12,
            int max_panels = 20000) {
  if (a == b) return T{};
  const GaussRule& g = gauss_legendre(order);

  std::vector<std::pair<double, double>> stack;
  double prev = a;
  std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
  std::sort(cuts.begin(), cuts.end());
  for (double c : cuts)
    if (c > prev && c < b) {
      stack.emplace_back(prev, c);
      prev = c;
    }
  stack.emplace_back(prev, b);

  T total{};
  double scale = 0.0;
  int used = static_cast<int>(stack.size());
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (lo + hi);
    const T whole = detail::panel_sum<T>(f, lo, hi, g);
    const T left = detail::panel_sum<T>(f, lo, mid, g);
    const T right = detail::panel_sum<T>(f, mid, hi, g);
    const T halves = left + right;
    const double err = detail::quad_abs(whole - halves);
    scale = std::max(scale, detail::quad_abs(halves));
    if (err <= tol * std::max(1.0, scale) || hi - lo < 1e-14 * (b - a)) {
      total = total + halves;
      continue;
    }
    if (used + 2 > max_panels)
      throw QuadratureError("integrate: panel budget exhausted");
    used += 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  return total;
}

template <typename F>
Complex integrate_complex(const F& f, double a, double b, double tol = 1e-11,
                          std::span<const double> breakpoints = {}, int order = 12) {
  return integrate<Complex>(f, a, b, tol, breakpoints, order);
}

/// Fixed tensor-product Gauss-Legendre quadrature on [ax,bx] x [ay,by] with
/// `panels` uniform panels per axis. The node/weight grid is symmetric under
/// the (x,y) swap when the two axis ranges coincide.
template <typename T, typename F>
T tensor_integrate(const F& f, double ax, double bx, double ay, double by, int panels,
                   int order = 8) {
  const GaussRule& g = gauss_legendre(order);
  const double hx = (bx - ax) / panels, hy = (by - ay) / panels;
  T acc{};
  for (int px = 0; px < panels; ++px) {
    const double x0 = ax + px * hx;
    for (int py = 0; py < panels; ++py) {
      const double y0 = ay + py * hy;
      for (std::size_t i = 0; i < g.x.size(); ++i) {
        const double x = x0 + 0.5 * hx * (1.0 + g.x[i]);
        for (std::size_t j = 0; j < g.x.size(); ++j) {
          const double y = y0 + 0.5 * hy * (1.0 + g.x[j]);
          acc = acc + f(x, y) * Complex(0.25 * hx * hy * g.w[i] * g.w[j]);
        }
      }
    }
  }
  return acc;
}

}  // namespace dirac1d
