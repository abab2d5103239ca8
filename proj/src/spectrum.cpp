#include "dirac1d/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace dirac1d {

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::C1a: return "1a";
    case CaseLabel::C1b: return "1b";
    case CaseLabel::C1cPlus: return "1c_plus";
    case CaseLabel::C1cMinus: return "1c_minus";
    case CaseLabel::C1d: return "1d";
    case CaseLabel::C2a: return "2a";
    case CaseLabel::C2b: return "2b";
    case CaseLabel::C2c: return "2c";
    case CaseLabel::C2d: return "2d";
    case CaseLabel::C2e: return "2e";
  }
  return "?";
}

std::string to_string(PointSpectrumKind kind) {
  switch (kind) {
    case PointSpectrumKind::Empty: return "Empty";
    case PointSpectrumKind::FiniteSet: return "FiniteSet";
    case PointSpectrumKind::UpperHalfPlane: return "UpperHalfPlane";
    case PointSpectrumKind::LowerHalfPlane: return "LowerHalfPlane";
    case PointSpectrumKind::NonRealPlane: return "NonRealPlane";
    case PointSpectrumKind::WholeGap: return "WholeGap";
  }
  return "?";
}

PointSpectrumKind kind_of(CaseLabel label) {
  switch (label) {
    case CaseLabel::C1a: return PointSpectrumKind::NonRealPlane;
    case CaseLabel::C1b: return PointSpectrumKind::Empty;
    case CaseLabel::C1cPlus: return PointSpectrumKind::UpperHalfPlane;
    case CaseLabel::C1cMinus: return PointSpectrumKind::LowerHalfPlane;
    case CaseLabel::C1d: return PointSpectrumKind::Empty;
    case CaseLabel::C2a: return PointSpectrumKind::WholeGap;
    case CaseLabel::C2b: return PointSpectrumKind::Empty;
    case CaseLabel::C2c: return PointSpectrumKind::Empty;
    case CaseLabel::C2d: return PointSpectrumKind::FiniteSet;
    case CaseLabel::C2e: return PointSpectrumKind::FiniteSet;
  }
  return PointSpectrumKind::Empty;
}

namespace {

// Tracks whether any tested quantity landed in the warning band: close to a
// case boundary but not within the equality tolerance.
struct BoundaryTester {
  double tol, band;
  bool warned = false;

  bool zero(Complex v) {
    const double a = std::abs(v);
    if (a <= tol) return true;
    if (a <= band) warned = true;
    return false;
  }
};

CaseLabel classify_label(const CouplingMatrix& A, double m, const ClassifyOptions& opts,
                         bool* near_transition) {
  BoundaryTester t{opts.equality_tol, opts.warn_band};
  const Complex det = A.det();
  CaseLabel label;
  if (m == 0.0) {
    const Complex tr = A.trace();
    if (t.zero(tr))
      label = t.zero(det - 4.0) ? CaseLabel::C1a : CaseLabel::C1b;
    else if (t.zero(det - 4.0 - 2.0 * kI * tr))
      label = CaseLabel::C1cPlus;
    else if (t.zero(det - 4.0 + 2.0 * kI * tr))
      label = CaseLabel::C1cMinus;
    else
      label = CaseLabel::C1d;
  } else {
    if (t.zero(A.alpha)) {
      if (t.zero(A.delta))
        label = t.zero(det - 4.0) ? CaseLabel::C2a : CaseLabel::C2b;
      else
        label = t.zero(det - 4.0) ? CaseLabel::C2c : CaseLabel::C2d;
    } else {
      label = CaseLabel::C2e;
    }
  }
  if (near_transition) *near_transition = t.warned;
  return label;
}

// Roots of a z^2 + b z + c with complex coefficients, |a| > 0 assumed.
std::pair<Complex, Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  const Complex disc = sqrt_upper(b * b - 4.0 * a * c);
  // Pick the sign that avoids cancellation in -b -+ disc.
  const Complex q = (std::abs(b - disc) > std::abs(b + disc)) ? (b - disc) : (b + disc);
  if (std::abs(q) == 0.0) return {Complex{0.0, 0.0}, Complex{0.0, 0.0}};
  const Complex r1 = -q / (2.0 * a);
  const Complex r2 = -2.0 * c / q;
  return {r1, r2};
}

EigenvalueRecord make_record(const CouplingMatrix& A, double m, Complex z) {
  EigenvalueRecord rec;
  rec.z = z;
  const Mat2C B = kSigma0 + (kI * 0.5) * (A.mat() * Z_of(z, m));
  rec.residual = std::abs(det2(B));
  // z comes from the closed form, so B is singular to machine precision and
  // a loose rank threshold is appropriate.
  auto null_vectors = kernel_basis(B, 1e-8);
  if (null_vectors.empty()) null_vectors.push_back(least_singular_vector(B));
  rec.geometric_multiplicity = static_cast<int>(null_vectors.size());
  const Complex zeta = zeta_of(z, m);
  for (const auto& w : null_vectors) {
    // Map the null vector of I + (i/2) A Z(z) onto the eigenfunction
    // coefficients: a + a~ = zeta w_1, a - a~ = w_2.
    Complex a = 0.5 * (zeta * w.a + w.b);
    Complex at = 0.5 * (zeta * w.a - w.b);
    const double scale = std::max(std::abs(a), std::abs(at));
    if (std::abs(a) > 1e-12 * scale) {
      at /= a;
      a = 1.0;
    } else {
      a = 0.0;
      at = 1.0;
    }
    rec.coefficients.emplace_back(a, at);
  }
  return rec;
}

}  // namespace

std::optional<Complex> zeta_inverse(Complex eta, double m) {
  if (m == 0.0) throw std::invalid_argument("zeta_inverse: m must be nonzero");
  if (eta.imag() == 0.0) return std::nullopt;
  const Complex denom = eta * eta - 1.0;
  if (std::abs(denom) <= 1e-15 * (1.0 + std::norm(eta))) return std::nullopt;
  const double direction = (eta / denom).imag();
  if (direction == 0.0 || std::signbit(direction) != std::signbit(m)) return std::nullopt;
  return m * (eta * eta + 1.0) / denom;
}

Complex eigenvalue_residual(const CouplingMatrix& A, double m, Complex z) {
  return det2(kSigma0 + (kI * 0.5) * (A.mat() * Z_of(z, m)));
}

std::vector<EigenvalueRecord> point_spectrum(const CouplingMatrix& A, double m) {
  bool warned = false;
  const CaseLabel label = classify_label(A, m, {}, &warned);
  const PointSpectrumKind kind = kind_of(label);
  if (kind == PointSpectrumKind::UpperHalfPlane || kind == PointSpectrumKind::LowerHalfPlane ||
      kind == PointSpectrumKind::NonRealPlane || kind == PointSpectrumKind::WholeGap)
    throw DegenerateCaseError("point_spectrum: case " + to_string(label) +
                              " has non-discrete point spectrum");
  if (kind == PointSpectrumKind::Empty) return {};

  // FiniteSet: m != 0 with at least one of the diagonal entries active.
  std::vector<Complex> etas;
  const Complex b = kI * (A.det() - 4.0) * 0.5;
  if (label == CaseLabel::C2d) {
    etas.push_back(2.0 * kI * A.delta / (A.det() - 4.0));
  } else {
    auto [r1, r2] = quadratic_roots(A.alpha, b, A.delta);
    etas = {r1, r2};
    // A double root is one candidate; the kernel dimension decides the
    // multiplicity, not the root multiplicity.
    if (std::abs(r1 - r2) <= 1e-10 * (1.0 + std::abs(r1))) etas.pop_back();
  }

  std::vector<EigenvalueRecord> records;
  for (Complex eta : etas) {
    const auto z = zeta_inverse(eta, m);
    if (!z) continue;
    const bool duplicate =
        std::any_of(records.begin(), records.end(), [&](const EigenvalueRecord& r) {
          return std::abs(r.z - *z) <= 1e-10 * (1.0 + std::abs(*z));
        });
    if (!duplicate) records.push_back(make_record(A, m, *z));
  }
  return records;
}

SpectralClassification classify_spectrum(const CouplingMatrix& A, double m,
                                         const ClassifyOptions& opts) {
  if (!A.is_finite()) throw std::invalid_argument("classify_spectrum: non-finite entries in A");
  SpectralClassification out;
  out.label = classify_label(A, m, opts, &out.near_transition);
  out.kind = kind_of(out.label);
  if (out.kind == PointSpectrumKind::FiniteSet) out.eigenvalues = point_spectrum(A, m);
  return out;
}

Eigenfunction::Eigenfunction(const CouplingMatrix& A, double m, const EigenvalueRecord& record,
                             int vector_index) {
  if (vector_index < 0 || vector_index >= static_cast<int>(record.coefficients.size()))
    throw std::invalid_argument("Eigenfunction: vector index out of range");
  const auto& [a, at] = record.coefficients[vector_index];
  a_ = a;
  a_tilde_ = at;
  k_ = k_of(record.z, m);
  zeta_inv_ = 1.0 / zeta_of(record.z, m);
  (void)A;
}

Vec2C Eigenfunction::operator()(double x) const {
  if (x > 0.0) return std::exp(kI * k_ * x) * Vec2C{a_, a_ * zeta_inv_};
  if (x < 0.0) return std::exp(-kI * k_ * x) * Vec2C{a_tilde_, -a_tilde_ * zeta_inv_};
  throw std::invalid_argument("Eigenfunction: use trace_plus/trace_minus at x = 0");
}

Vec2C Eigenfunction::trace_plus() const { return {a_, a_ * zeta_inv_}; }

Vec2C Eigenfunction::trace_minus() const { return {a_tilde_, -a_tilde_ * zeta_inv_}; }

}  // namespace dirac1d
