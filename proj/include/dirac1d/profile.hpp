#pragma once

#include <string>
#include <vector>

#include "dirac1d/mat2.hpp"

namespace dirac1d {

/// Real-valued approximation bump v with unit integral and compact support.
/// The scaled family is v_eps(x) = v(x/eps)/eps. Built-in shapes:
///   Box:               1 on [-1/2, 1/2]
///   Triangle:          1 - |x| on [-1, 1]
///   TruncatedGaussian: renormalized standard Gaussian on [-4, 4]
///   Sampled:           piecewise-linear interpolant of a table, renormalized
class Profile {
 public:
  enum class Shape { Box, Triangle, TruncatedGaussian, Sampled };

  static Profile box();
  static Profile triangle();
  static Profile truncated_gaussian();
  /// Builds v from strictly increasing abscissae; the table is renormalized
  /// so that the trapezoid integral equals 1 and the factor is recorded.
  static Profile sampled(std::vector<double> x, std::vector<double> v);
  /// Two-column whitespace-separated text file (x v), '#' comments allowed.
  static Profile load(const std::string& path);

  Shape shape() const { return shape_; }
  std::string name() const;

  double evaluate(double x) const;
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }
  /// Radius S with supp v inside [-S, S]; the autocorrelation lives on
  /// [0, hi - lo] which equals [0, 2S] for the symmetric built-ins.
  double support_radius() const { return std::max(std::abs(lo_), std::abs(hi_)); }
  double autocorrelation_length() const { return hi_ - lo_; }

  double l2_norm_sq() const { return l2_sq_; }
  /// rho(t) = integral of v(x) v(x+t) dx; even in t, supported on
  /// |t| <= autocorrelation_length().
  double autocorrelation(double t) const;
  /// integral of v(s) e^{i q s} ds for complex q.
  Complex fourier(Complex q) const;
  /// Renormalization applied when the profile was built (1 for built-ins).
  double normalization_factor() const { return norm_factor_; }
  /// Interior kink locations of v (panel hints for quadratures), support
  /// endpoints excluded.
  const std::vector<double>& kinks() const { return kinks_; }

 private:
  Profile() = default;

  Shape shape_ = Shape::Box;
  double lo_ = -0.5, hi_ = 0.5;
  double l2_sq_ = 1.0;
  double norm_factor_ = 1.0;
  double gauss_height_ = 0.0;  // TruncatedGaussian normalization
  std::vector<double> xs_, vs_;  // Sampled table
  std::vector<double> kinks_;
};

}  // namespace dirac1d
