#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirac1d/coupling.hpp"

namespace dirac1d {

/// The ten regimes of the point spectrum of D_A. Labels 1x apply to m = 0,
/// labels 2x to m != 0.
enum class CaseLabel { C1a, C1b, C1cPlus, C1cMinus, C1d, C2a, C2b, C2c, C2d, C2e };

enum class PointSpectrumKind {
  Empty,
  FiniteSet,
  UpperHalfPlane,
  LowerHalfPlane,
  NonRealPlane,  // all of C minus the real axis
  WholeGap,      // all of C minus the essential spectrum
};

std::string to_string(CaseLabel label);
std::string to_string(PointSpectrumKind kind);
PointSpectrumKind kind_of(CaseLabel label);

/// One eigenvalue of D_A together with its geometric multiplicity and the
/// coefficient pairs (a, a~) of the eigenfunctions
///   psi(x) = a (1, 1/zeta)^T e^{ikx}   for x > 0,
///   psi(x) = a~ (1, -1/zeta)^T e^{-ikx} for x < 0.
/// One coefficient pair per independent eigenvector, scaled so that a = 1
/// when a != 0, otherwise a~ = 1.
struct EigenvalueRecord {
  Complex z{};
  int geometric_multiplicity = 1;
  std::vector<std::pair<Complex, Complex>> coefficients;
  double residual = 0.0;  // |det(I + (i/2) A Z(z))| at z
};

struct SpectralClassification {
  CaseLabel label = CaseLabel::C1d;
  PointSpectrumKind kind = PointSpectrumKind::Empty;
  std::vector<EigenvalueRecord> eigenvalues;  // populated for FiniteSet
  /// Set when a decisive classification quantity is within 1e-6 of a case
  /// boundary without being within the equality tolerance 1e-12; the point
  /// spectrum is discontinuous across these boundaries, so nearby inputs of
  /// this kind deserve scrutiny.
  bool near_transition = false;
};

struct ClassifyOptions {
  double equality_tol = 1e-12;
  double warn_band = 1e-6;
};

SpectralClassification classify_spectrum(const CouplingMatrix& A, double m,
                                         const ClassifyOptions& opts = {});

/// Solves zeta(z) = eta for z off the essential spectrum (m != 0). Returns
/// the unique solution z = m (eta^2+1)/(eta^2-1) when eta is nonreal and
/// sgn m = sgn Im(eta/(eta^2-1)); empty otherwise.
std::optional<Complex> zeta_inverse(Complex eta, double m);

/// det(I + (i/2) A Z(z)); zero exactly at the eigenvalues of D_A.
/// Throws BranchPointError at z = +-m.
Complex eigenvalue_residual(const CouplingMatrix& A, double m, Complex z);

/// The finite point spectrum. Empty for the eigenvalue-free cases
/// (1b, 1d, 2b, 2c); throws DegenerateCaseError for the strongly
/// non-self-adjoint regimes (1a, 1c+-, 2a) where the point spectrum fills a
/// half-plane or the whole gap.
std::vector<EigenvalueRecord> point_spectrum(const CouplingMatrix& A, double m);

/// Pointwise eigenfunction evaluation for one eigenvector of a record.
class Eigenfunction {
 public:
  Eigenfunction(const CouplingMatrix& A, double m, const EigenvalueRecord& record,
                int vector_index = 0);

  /// psi(x) for x != 0; use trace_plus/trace_minus for the one-sided limits.
  Vec2C operator()(double x) const;
  Vec2C trace_plus() const;
  Vec2C trace_minus() const;

  Complex a() const { return a_; }
  Complex a_tilde() const { return a_tilde_; }
  Complex k() const { return k_; }

 private:
  Complex a_, a_tilde_, k_, zeta_inv_;
};

inline Vec2C eigenfunction(const CouplingMatrix& A, double m, const EigenvalueRecord& record,
                           double x, int vector_index = 0) {
  return Eigenfunction(A, m, record, vector_index)(x);
}

}  // namespace dirac1d
