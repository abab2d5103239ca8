#include "dirac1d/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dirac1d/quadrature.hpp"

namespace dirac1d {

namespace {
const double kSqrtPi = std::sqrt(std::acos(-1.0));
const double kGaussCut = 4.0;
}  // namespace

Profile Profile::box() {
  Profile p;
  p.shape_ = Shape::Box;
  p.lo_ = -0.5;
  p.hi_ = 0.5;
  p.l2_sq_ = 1.0;
  return p;
}

Profile Profile::triangle() {
  Profile p;
  p.shape_ = Shape::Triangle;
  p.lo_ = -1.0;
  p.hi_ = 1.0;
  p.l2_sq_ = 2.0 / 3.0;
  p.kinks_ = {0.0};
  return p;
}

Profile Profile::truncated_gaussian() {
  Profile p;
  p.shape_ = Shape::TruncatedGaussian;
  p.lo_ = -kGaussCut;
  p.hi_ = kGaussCut;
  p.gauss_height_ = 1.0 / (std::sqrt(2.0 * std::acos(-1.0)) * std::erf(kGaussCut / std::sqrt(2.0)));
  p.l2_sq_ = p.gauss_height_ * p.gauss_height_ * kSqrtPi * std::erf(kGaussCut);
  return p;
}

Profile Profile::sampled(std::vector<double> x, std::vector<double> v) {
  if (x.size() != v.size() || x.size() < 2)
    throw std::invalid_argument("Profile::sampled: need matching tables with >= 2 rows");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1]))
      throw std::invalid_argument("Profile::sampled: abscissae must be strictly increasing");

  double integral = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    integral += 0.5 * (x[i] - x[i - 1]) * (v[i] + v[i - 1]);
  if (std::abs(integral) < 1e-12)
    throw std::invalid_argument("Profile::sampled: table integrates to zero");

  Profile p;
  p.shape_ = Shape::Sampled;
  p.norm_factor_ = 1.0 / integral;
  for (double& vi : v) vi *= p.norm_factor_;
  p.lo_ = x.front();
  p.hi_ = x.back();
  p.kinks_.assign(x.begin() + 1, x.end() - 1);
  p.xs_ = std::move(x);
  p.vs_ = std::move(v);
  // Exact integral of the squared piecewise-linear interpolant.
  p.l2_sq_ = 0.0;
  for (std::size_t i = 1; i < p.xs_.size(); ++i) {
    const double h = p.xs_[i] - p.xs_[i - 1];
    const double va = p.vs_[i - 1], vb = p.vs_[i];
    p.l2_sq_ += h / 3.0 * (va * va + va * vb + vb * vb);
  }
  return p;
}

Profile Profile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("Profile::load: cannot open " + path);
  std::vector<double> xs, vs;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double x, v;
    if (ss >> x >> v) {
      xs.push_back(x);
      vs.push_back(v);
    }
  }
  return sampled(std::move(xs), std::move(vs));
}

std::string Profile::name() const {
  switch (shape_) {
    case Shape::Box: return "box";
    case Shape::Triangle: return "triangle";
    case Shape::TruncatedGaussian: return "gauss";
    case Shape::Sampled: return "sampled";
  }
  return "?";
}

double Profile::evaluate(double x) const {
  switch (shape_) {
    case Shape::Box:
      if (std::abs(x) < 0.5) return 1.0;
      if (std::abs(x) == 0.5) return 0.5;  // midpoint value at the jump
      return 0.0;
    case Shape::Triangle:
      return std::max(0.0, 1.0 - std::abs(x));
    case Shape::TruncatedGaussian:
      if (std::abs(x) > kGaussCut) return 0.0;
      return gauss_height_ * std::exp(-0.5 * x * x);
    case Shape::Sampled: {
      if (x <= xs_.front() || x >= xs_.back()) {
        if (x == xs_.front()) return vs_.front();
        if (x == xs_.back()) return vs_.back();
        return 0.0;
      }
      const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      const std::size_t i = it - xs_.begin();
      const double w = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
      return vs_[i - 1] * (1.0 - w) + vs_[i] * w;
    }
  }
  return 0.0;
}

double Profile::autocorrelation(double t) const {
  const double u = std::abs(t);
  const double len = autocorrelation_length();
  if (u >= len) return 0.0;
  switch (shape_) {
    case Shape::Box:
      return 1.0 - u;
    case Shape::Triangle:
      // Cubic B-spline: the autocorrelation of the hat function.
      if (u <= 1.0) return 2.0 / 3.0 - u * u + 0.5 * u * u * u;
      return std::pow(2.0 - u, 3) / 6.0;
    case Shape::TruncatedGaussian:
      return gauss_height_ * gauss_height_ * kSqrtPi * std::exp(-0.25 * u * u) *
             std::erf(kGaussCut - 0.5 * u);
    case Shape::Sampled: {
      // Product of two shifted piecewise-linear functions: piecewise
      // quadratic between union knots, integrated exactly by low-order Gauss.
      const double a = lo_;
      const double b = hi_ - u;
      if (b <= a) return 0.0;
      std::vector<double> cuts;
      for (double xk : xs_) {
        if (xk > a && xk < b) cuts.push_back(xk);
        const double shifted = xk - u;
        if (shifted > a && shifted < b) cuts.push_back(shifted);
      }
      std::sort(cuts.begin(), cuts.end());
      const GaussRule& g = gauss_legendre(4);
      double acc = 0.0;
      double prev = a;
      cuts.push_back(b);
      for (double c : cuts) {
        if (c <= prev) continue;
        const double mid = 0.5 * (prev + c), half = 0.5 * (c - prev);
        for (std::size_t i = 0; i < g.x.size(); ++i) {
          const double s = mid + half * g.x[i];
          acc += half * g.w[i] * evaluate(s) * evaluate(s + u);
        }
        prev = c;
      }
      return acc;
    }
  }
  return 0.0;
}

Complex Profile::fourier(Complex q) const {
  return integrate_complex(
      [this, q](double s) { return evaluate(s) * std::exp(kI * q * s); }, lo_, hi_, 1e-13,
      kinks_);
}

}  // namespace dirac1d
