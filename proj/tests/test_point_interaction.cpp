#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace dirac1d;
namespace dt = dirac1d::testing;

namespace {
const CouplingMatrix kZeroA{};
const CouplingMatrix kTwoSigma0{2.0, 0.0, 0.0, 2.0};
const CouplingMatrix kRotor{0.0, 2.0, -2.0, 0.0};  // [[0,2],[-2,0]]

CouplingMatrix two_i_sigma1() { return {0.0, {0.0, 2.0}, {0.0, 2.0}, 0.0}; }
}  // namespace

TEST_CASE("decoupling_check") {
  CHECK(decoupling_check(two_i_sigma1()).decoupled);
  // A = diag(alpha, -4/alpha) has beta + gamma = 0 and det = -4.
  CHECK(decoupling_check({-1.0, 0.0, 0.0, 4.0}).decoupled);
  CHECK(decoupling_check({{1.0, 1.0}, 0.0, 0.0, -4.0 / Complex{1.0, 1.0}}).decoupled);
  CHECK_FALSE(decoupling_check(kZeroA).decoupled);
  CHECK_FALSE(decoupling_check(kTwoSigma0).decoupled);

  const auto r = decoupling_check({-1.0, 0.0, 0.0, 4.0});
  // The half-line condition matrices are singular exactly in this case.
  CHECK(std::abs(det2(r.plus_condition)) < 1e-12);
  CHECK(std::abs(det2(r.minus_condition)) < 1e-12);
}

TEST_CASE("lambda matrices") {
  CHECK((lambda_matrix(kZeroA) - kSigma0).frobenius_norm() < 1e-15);
  CHECK_THROWS_AS((void)lambda_matrix(two_i_sigma1()), SingularMatrixError);

  const Mat2C prod = tilde_lambda(kTwoSigma0) * lambda_matrix(kTwoSigma0);
  CHECK((prod - kSigma0).frobenius_norm() < 1e-13);

  for (int i = 0; i < 200; ++i) {
    const CouplingMatrix A = dt::random_coupling();
    if (decoupling_check(A).decoupled) continue;
    const Mat2C prod2 = tilde_lambda(A) * lambda_matrix(A);
    CHECK((prod2 - kSigma0).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("adjoint_coupling") {
  const CouplingMatrix H = dt::random_hermitian_coupling();
  CHECK((adjoint_coupling(H).mat() - H.mat()).frobenius_norm() < 1e-15);

  const CouplingMatrix r = adjoint_coupling(kRotor);
  CHECK(std::abs(r.beta - Complex{-2.0, 0.0}) == 0.0);
  CHECK(std::abs(r.gamma - Complex{2.0, 0.0}) == 0.0);

  // Adjoint transmission relation: Lambda(A*) = sigma1 (Lambda(A)^*)^{-1} sigma1.
  for (int i = 0; i < 300; ++i) {
    const CouplingMatrix A = dt::random_coupling();
    try {
      const Mat2C lhs = lambda_matrix(adjoint_coupling(A));
      const Mat2C rhs = kSigma1 * inv2(lambda_matrix(A).adjoint()) * kSigma1;
      CHECK((lhs - rhs).frobenius_norm() < 1e-10 * (1.0 + rhs.frobenius_norm()));
    } catch (const SingularMatrixError&) {
      continue;  // case (iii) coupling drawn; not covered by the Lambda relation
    }
  }
}

TEST_CASE("is_self_adjoint") {
  CHECK(is_self_adjoint({3.0, 0.0, 0.0, -1.0}));
  CHECK_FALSE(is_self_adjoint(kRotor));
  CHECK(is_self_adjoint({1.0, {2.0, 1.0}, {2.0, -1.0}, 5.0}));
}

TEST_CASE("cayley transform") {
  const Mat2C u0 = cayley_of(kZeroA);
  CHECK((u0 + kSigma0).frobenius_norm() < 1e-14);  // A = 0 -> U = -I

  const Mat2C u1 = cayley_of({1.0, 0.0, 0.0, 1.0});
  // Unitary and 1 not an eigenvalue.
  CHECK((u1.adjoint() * u1 - kSigma0).frobenius_norm() < 1e-13);
  CHECK(std::abs(det2(u1 - kSigma0)) > 1e-6);
  const Mat2C rebuilt = Complex{0.0, -1.0} * inv2(kSigma0 - u1) * (kSigma0 + u1);
  CHECK((rebuilt - Mat2C::diag(1.0, 1.0)).frobenius_norm() < 1e-12);

  CHECK_THROWS_AS((void)cayley_of(kRotor), NotHermitianError);

  for (int i = 0; i < 200; ++i) {
    const CouplingMatrix H = dt::random_hermitian_coupling(3.0);
    const Mat2C u = cayley_of(H);
    CHECK((u.adjoint() * u - kSigma0).frobenius_norm() < 1e-11);
  }
}

TEST_CASE("transmission residual basics") {
  const Vec2C t{dt::random_complex(), dt::random_complex()};
  CHECK(transmission_residual(kZeroA, t, t).norm() < 1e-15);

  for (int i = 0; i < 200; ++i) {
    const CouplingMatrix A = dt::random_coupling();
    Mat2C lambda;
    try {
      lambda = lambda_matrix(A);
    } catch (const SingularMatrixError&) {
      continue;
    }
    const Vec2C minus{dt::random_complex(), dt::random_complex()};
    const Vec2C plus = lambda * minus;
    CHECK(transmission_residual(A, minus, plus).norm() < 1e-11);
  }
}

TEST_CASE("boundary triplet residual is a constant multiple of the transmission residual") {
  for (int i = 0; i < 300; ++i) {
    const CouplingMatrix A = dt::random_coupling();
    const Vec2C minus{dt::random_complex(), dt::random_complex()};
    const Vec2C plus{dt::random_complex(), dt::random_complex()};
    const Vec2C triple = boundary_triplet_residual(A, minus, plus);
    const Vec2C trans = transmission_residual(A, minus, plus);
    const Vec2C expected = Complex{-0.5} * (kSigma2 * trans);
    CHECK((triple - expected).norm() < 1e-13 * (1.0 + trans.norm()));
  }
  const Vec2C t{1.0, {0.0, 2.0}};
  CHECK(boundary_triplet_residual(kZeroA, t, t).norm() < 1e-15);
}

TEST_CASE("zeta_inverse admissibility") {
  CHECK_FALSE(zeta_inverse({1.0, 0.0}, 1.0).has_value());
  CHECK_FALSE(zeta_inverse({-1.0, 0.0}, 1.0).has_value());

  const auto z = zeta_inverse({0.0, -1.0}, 1.0);
  REQUIRE(z.has_value());
  CHECK(std::abs(*z) < 1e-15);

  CHECK_FALSE(zeta_inverse({0.0, 1.0}, 1.0).has_value());
  // Mirror admissibility for negative mass.
  CHECK(zeta_inverse({0.0, 1.0}, -1.0).has_value());

  // Round trip zeta(zeta_inverse(eta)) = eta on admissible random etas.
  for (int i = 0; i < 2000; ++i) {
    const Complex eta = dt::random_complex(3.0);
    const double m = dt::uniform(-2.0, 2.0);
    if (m == 0.0) continue;
    const auto zz = zeta_inverse(eta, m);
    if (!zz) continue;
    CHECK(std::abs(zeta_of(*zz, m) - eta) < 1e-9 * (1.0 + std::abs(eta)));
  }
}

TEST_CASE("eigenvalue_residual values") {
  CHECK(std::abs(eigenvalue_residual(kZeroA, 1.0, {0.5, 0.5}) - 1.0) < 1e-15);
  CHECK(std::abs(eigenvalue_residual(kTwoSigma0, 1.0, {0.0, 0.0})) < 1e-15);
  CHECK(std::abs(eigenvalue_residual(kTwoSigma0, 1.0, {0.0, 1.0})) > 0.1);
  CHECK_THROWS_AS((void)eigenvalue_residual(kTwoSigma0, 1.0, {1.0, 0.0}), BranchPointError);
}

TEST_CASE("determinant identity against the trace form") {
  int done = 0;
  while (done < 1000) {
    const CouplingMatrix A = dt::random_coupling();
    const double m = dt::uniform(-2.0, 2.0);
    const Complex z = dt::random_complex(3.0);
    if (std::abs(z.imag()) < 1e-2) continue;
    ++done;
    const Mat2C Z = Z_of(z, m);
    const Complex lhs = 4.0 * eigenvalue_residual(A, m, z);
    const Complex rhs = 4.0 - A.det() + 2.0 * kI * (A.mat() * Z).trace();
    CHECK(std::abs(lhs - rhs) < 1e-11 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("classification of the spectral-transition fixtures") {
  // m = 0, A = [[i kappa, 2 + eps], [-2, 0]].
  auto family_m0 = [](Complex kappa, Complex eps) {
    return CouplingMatrix{kI * kappa, 2.0 + eps, -2.0, 0.0};
  };
  CHECK(classify_spectrum(family_m0(0.0, 0.0), 0.0).kind == PointSpectrumKind::NonRealPlane);
  CHECK(classify_spectrum(family_m0(0.0, 0.0), 0.0).label == CaseLabel::C1a);
  CHECK(classify_spectrum(family_m0(0.0, 0.3), 0.0).kind == PointSpectrumKind::Empty);
  CHECK(classify_spectrum(family_m0(0.5, 0.2), 0.0).kind == PointSpectrumKind::Empty);
  CHECK(classify_spectrum(family_m0(0.7, -0.7), 0.0).kind ==
        PointSpectrumKind::UpperHalfPlane);
  CHECK(classify_spectrum(family_m0(0.7, 0.7), 0.0).kind == PointSpectrumKind::LowerHalfPlane);
  CHECK(classify_spectrum(family_m0({0.0, 0.4}, {0.0, -0.4}), 0.0).kind ==
        PointSpectrumKind::UpperHalfPlane);

  // m != 0, A = [[0, 4 kappa], [-1/kappa, delta]].
  auto family_m1 = [](Complex kappa, Complex delta) {
    return CouplingMatrix{0.0, 4.0 * kappa, -1.0 / kappa, delta};
  };
  CHECK(classify_spectrum(family_m1(1.0, 0.0), 1.0).kind == PointSpectrumKind::WholeGap);
  CHECK(classify_spectrum(family_m1(1.0, 0.0), 1.0).label == CaseLabel::C2a);
  CHECK(classify_spectrum(family_m1(1.0, 0.5), 1.0).kind == PointSpectrumKind::Empty);
  CHECK(classify_spectrum(family_m1({0.3, 0.7}, {0.0, 0.2}), 1.0).kind ==
        PointSpectrumKind::Empty);
  CHECK(classify_spectrum(family_m1(1.0, 0.5), 1.0).label == CaseLabel::C2c);

  // Rotor matrix: NonRealPlane for m = 0, WholeGap for m != 0.
  CHECK(classify_spectrum(kRotor, 0.0).kind == PointSpectrumKind::NonRealPlane);
  CHECK(classify_spectrum(kRotor, 1.0).kind == PointSpectrumKind::WholeGap);
}

TEST_CASE("classification totality and cardinality") {
  std::vector<CouplingMatrix> fixtures = {
      kZeroA, kTwoSigma0, kRotor, two_i_sigma1(), {-1.0, 0.0, 0.0, 4.0},
      {0.0, 0.0, 0.0, 2.0},  // case 2d with an admissible root
      {0.0, 0.0, 0.0, -2.0},
  };
  for (int i = 0; i < 400; ++i) fixtures.push_back(dt::random_coupling(3.0));
  for (const double m : {0.0, 1.0, -0.7}) {
    for (const auto& A : fixtures) {
      const auto c = classify_spectrum(A, m);
      const bool label_matches_m = (m == 0.0) == (to_string(c.label)[0] == '1');
      CHECK(label_matches_m);
      CHECK(c.kind == kind_of(c.label));
      CHECK(c.eigenvalues.size() <= 2);
      if (c.kind != PointSpectrumKind::FiniteSet) CHECK(c.eigenvalues.empty());
    }
  }
}

TEST_CASE("near-transition warning band") {
  // det A = 4 + 1e-9 with zero trace: still classified 1b but flagged.
  const CouplingMatrix nearly{0.0, 2.0, {-2.0 - 5e-10, 0.0}, 0.0};
  const auto c = classify_spectrum(nearly, 0.0);
  CHECK(c.label == CaseLabel::C1b);
  CHECK(c.near_transition);
  CHECK_FALSE(classify_spectrum(kRotor, 0.0).near_transition);
}

TEST_CASE("point_spectrum closed forms") {
  // A = 2 sigma0, m = 1: single eigenvalue z = 0, multiplicity 1.
  const auto recs = point_spectrum(kTwoSigma0, 1.0);
  REQUIRE(recs.size() == 1);
  CHECK(std::abs(recs[0].z) < 1e-14);
  CHECK(recs[0].geometric_multiplicity == 1);
  CHECK(recs[0].residual < 1e-12);

  CHECK(point_spectrum(kZeroA, 1.0).empty());
  CHECK(point_spectrum(kZeroA, 0.0).empty());

  CHECK_THROWS_AS((void)point_spectrum(kRotor, 1.0), DegenerateCaseError);
  CHECK_THROWS_AS((void)point_spectrum(kRotor, 0.0), DegenerateCaseError);

  // Case 2d: A = [[0,0],[0,2]] -> zeta = 2i*2/(0-4) = -i -> z = 0.
  const auto lin = point_spectrum({0.0, 0.0, 0.0, 2.0}, 1.0);
  REQUIRE(lin.size() == 1);
  CHECK(std::abs(lin[0].z) < 1e-14);
  // delta = -2 gives the inadmissible mirror root.
  CHECK(point_spectrum({0.0, 0.0, 0.0, -2.0}, 1.0).empty());
}

TEST_CASE("degenerate couplings carry one double eigenvalue") {
  // A = diag(alpha, -4/alpha): multiplicity 2 for admissible alpha.
  for (const Complex alpha : {Complex{-1.0, 0.0}, Complex{-2.0, 0.0}, Complex{-1.0, -1.0}}) {
    const CouplingMatrix A{alpha, 0.0, 0.0, -4.0 / alpha};
    const auto recs = point_spectrum(A, 1.0);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].geometric_multiplicity == 2);
    CHECK(recs[0].coefficients.size() == 2);
    CHECK(std::abs(eigenvalue_residual(A, 1.0, recs[0].z)) < 1e-12);

    // Decoupled case: the eigenfunction traces satisfy both half-line
    // conditions separately.
    const auto dec = decoupling_check(A);
    REQUIRE(dec.decoupled);
    for (int v = 0; v < 2; ++v) {
      const Eigenfunction psi(A, 1.0, recs[0], v);
      CHECK((dec.plus_condition * psi.trace_plus()).norm() < 1e-12);
      CHECK((dec.minus_condition * psi.trace_minus()).norm() < 1e-12);
    }
  }
  // alpha = 2i maps to eta = 1: no admissible root, no eigenvalues.
  CHECK(point_spectrum({{0.0, 2.0}, 0.0, 0.0, {0.0, 2.0}}, 1.0).empty());
}

TEST_CASE("multiplicity 2 happens only for the degenerate diagonal family") {
  for (int i = 0; i < 500; ++i) {
    const CouplingMatrix A = dt::random_coupling(3.0);
    const auto c = classify_spectrum(A, 1.0);
    for (const auto& r : c.eigenvalues) {
      if (r.geometric_multiplicity == 2) {
        CHECK(std::abs(A.beta) < 1e-8);
        CHECK(std::abs(A.gamma) < 1e-8);
        CHECK(std::abs(A.delta + 4.0 / A.alpha) < 1e-6);
      }
    }
  }
}

TEST_CASE("hermitian couplings have real gap eigenvalues") {
  for (const double m : {1.0, 0.5, -1.3}) {
    for (int i = 0; i < 50; ++i) {
      const CouplingMatrix A = dt::random_hermitian_coupling(3.0);
      const auto c = classify_spectrum(A, m);
      for (const auto& r : c.eigenvalues) {
        CHECK(std::abs(r.z.imag()) < 1e-10);
        CHECK(std::abs(r.z.real()) < std::abs(m));
        CHECK(r.residual < 1e-10);
      }
    }
  }
}

TEST_CASE("point spectrum records verify their defining equations") {
  int with_roots = 0;
  for (int i = 0; i < 2000 && with_roots < 300; ++i) {
    const CouplingMatrix A = dt::random_coupling(3.0);
    const double m = dt::uniform(0.2, 2.0) * (i % 2 == 0 ? 1.0 : -1.0);
    const auto c = classify_spectrum(A, m);
    for (const auto& r : c.eigenvalues) {
      ++with_roots;
      CHECK(r.residual < 1e-10);
      // zeta round trip through the closed-form inversion.
      const auto back = zeta_inverse(zeta_of(r.z, m), m);
      REQUIRE(back.has_value());
      CHECK(std::abs(*back - r.z) < 1e-9 * (1.0 + std::abs(r.z)));
      // Traces obey the transmission condition.
      for (std::size_t v = 0; v < r.coefficients.size(); ++v) {
        const Eigenfunction psi(A, m, r, static_cast<int>(v));
        CHECK(transmission_residual(A, psi.trace_minus(), psi.trace_plus()).norm() < 1e-10);
        CHECK(boundary_triplet_residual(A, psi.trace_minus(), psi.trace_plus()).norm() <
              1e-10);
      }
    }
  }
  CHECK(with_roots >= 100);
}

TEST_CASE("eigenfunction solves the ode and decays") {
  const auto recs = point_spectrum(kTwoSigma0, 1.0);
  REQUIRE(recs.size() == 1);
  const Eigenfunction psi(kTwoSigma0, 1.0, recs[0]);
  const Complex z = recs[0].z;
  const double m = 1.0;

  // psi' = i M psi with M = [[0, z+m],[z-m, 0]]; central differences show O(h^2).
  auto ode_residual = [&](double x, double h) {
    const Vec2C d = (psi(x + h) - psi(x - h)) / Complex(2.0 * h);
    const Vec2C rhs{kI * (z + m) * psi(x).b, kI * (z - m) * psi(x).a};
    return (d - rhs).norm();
  };
  for (const double x : {1.0, -1.0}) {
    const double r1 = ode_residual(x, 1e-2);
    const double r2 = ode_residual(x, 1e-3);
    CHECK(r2 < r1 * 0.02);  // h^2 drop (factor 100) with slack
    CHECK(r2 < 1e-6);
  }

  // Exponential envelope |psi(x)| <= |psi(0+-)| e^{-Im k |x|}.
  const double im_k = k_of(z, m).imag();
  CHECK(im_k > 0.0);
  for (const double x : {0.3, 1.7, 4.0}) {
    CHECK(psi(x).norm() <= psi.trace_plus().norm() * std::exp(-im_k * x) + 1e-12);
    CHECK(psi(-x).norm() <= psi.trace_minus().norm() * std::exp(-im_k * x) + 1e-12);
  }

  // Transmission residual of the traces vanishes.
  CHECK(transmission_residual(kTwoSigma0, psi.trace_minus(), psi.trace_plus()).norm() < 1e-12);
}
