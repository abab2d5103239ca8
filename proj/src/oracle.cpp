#include "dirac1d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dirac1d/nonrelativistic.hpp"
#include "dirac1d/quadrature.hpp"

namespace dirac1d {
namespace oracle {

namespace {
const double kPi = std::acos(-1.0);
}

Eigen::VectorXcd DiscretizedOperator::eigenvalues() const {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("DiscretizedOperator: dense eigensolver failed");
  return solver.eigenvalues();
}

std::vector<Complex> DiscretizedOperator::eigenvalues_near(Complex shift, int count,
                                                           double tol) const {
  const Eigen::Index n = matrix.rows();
  const int block = std::min<Eigen::Index>(n, count + 4);
  // Nudge off the shift so an exact eigenvalue hit cannot make the
  // factorization singular; the iteration target is unchanged.
  shift += Complex(0.0, 1e-9 * (1.0 + std::abs(shift)));
  Eigen::MatrixXcd shifted = matrix;
  shifted.diagonal().array() -= shift;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);

  std::mt19937 rng(20240511);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd Q(n, block);
  for (Eigen::Index i = 0; i < n; ++i)
    for (int j = 0; j < block; ++j) Q(i, j) = Complex(gauss(rng), gauss(rng));
  Q = Eigen::HouseholderQR<Eigen::MatrixXcd>(Q).householderQ() *
      Eigen::MatrixXcd::Identity(n, block);

  Eigen::VectorXcd prev = Eigen::VectorXcd::Zero(block);
  for (int it = 0; it < 100; ++it) {
    Eigen::MatrixXcd X = lu.solve(Q);
    Q = Eigen::HouseholderQR<Eigen::MatrixXcd>(X).householderQ() *
        Eigen::MatrixXcd::Identity(n, block);
    const Eigen::MatrixXcd T = Q.adjoint() * (matrix * Q);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> small(T, false);
    Eigen::VectorXcd ritz = small.eigenvalues();
    std::sort(ritz.data(), ritz.data() + ritz.size(), [&](Complex a, Complex b) {
      return std::abs(a - shift) < std::abs(b - shift);
    });
    double drift = 0.0;
    for (int j = 0; j < count && j < block; ++j)
      drift = std::max(drift, std::abs(ritz[j] - prev[j]) / (1.0 + std::abs(ritz[j])));
    prev = ritz;
    if (it > 2 && drift < tol) break;
  }
  std::vector<Complex> out;
  for (int j = 0; j < count && j < block; ++j) out.push_back(prev[j]);
  return out;
}

DiscretizedOperator fourier_dirac_matrix(const CouplingMatrix& A, double m, double eps,
                                         const Profile& profile, double L, int N) {
  if (N < 8 || N % 2 != 0) throw std::invalid_argument("fourier_dirac_matrix: N must be even");
  if (!(eps > 0.0)) throw std::invalid_argument("fourier_dirac_matrix: eps must be positive");
  const double span = eps * (profile.support_hi() - profile.support_lo());
  if (!(span < 0.5 * L))
    throw std::invalid_argument("fourier_dirac_matrix: scaled bump too wide for the box");
  const double h = 2.0 * L / N;
  if (eps < 4.0 * h)
    throw ResolutionError("fourier_dirac_matrix: eps < 4h, bump unresolved (raise N)");

  DiscretizedOperator op;
  op.kind = DiscretizedOperator::Kind::FourierDirac;
  op.step = h;
  op.grid.resize(N);
  for (int j = 0; j < N; ++j) op.grid[j] = -L + j * h;

  // Periodic spectral differentiation matrix (even N), scaled to period 2L.
  Eigen::MatrixXd D(N, N);
  D.setZero();
  for (int j = 0; j < N; ++j)
    for (int l = 0; l < N; ++l) {
      if (j == l) continue;
      const int d = j - l;
      const double sign = (d % 2 == 0) ? 1.0 : -1.0;
      D(j, l) = (kPi / L) * 0.5 * sign / std::tan(kPi * d / N);
    }

  op.matrix.resize(2 * N, 2 * N);
  op.matrix.setZero();
  const Mat2C a = A.mat();
  std::vector<double> veps(N);
  for (int j = 0; j < N; ++j) veps[j] = profile.evaluate(op.grid[j] / eps) / eps;

  for (int j = 0; j < N; ++j) {
    for (int l = 0; l < N; ++l) {
      const Complex dd = -kI * D(j, l);  // sigma1 (x) (-i d/dx)
      if (j != l) {
        op.matrix(2 * j, 2 * l + 1) += dd;
        op.matrix(2 * j + 1, 2 * l) += dd;
      }
      if (veps[j] != 0.0 && veps[l] != 0.0) {
        const double w = h * veps[j] * veps[l];
        op.matrix(2 * j, 2 * l) += w * a.e[0];
        op.matrix(2 * j, 2 * l + 1) += w * a.e[1];
        op.matrix(2 * j + 1, 2 * l) += w * a.e[2];
        op.matrix(2 * j + 1, 2 * l + 1) += w * a.e[3];
      }
    }
    op.matrix(2 * j, 2 * j) += m;
    op.matrix(2 * j + 1, 2 * j + 1) -= m;
  }
  return op;
}

DiscretizedOperator schrodinger_fd_matrix(const CouplingMatrix& A, double m, double L, int N) {
  if (!(m > 0.0)) throw std::invalid_argument("schrodinger_fd_matrix: m must be positive");
  if (N < 64 || N % 2 != 0)
    throw std::invalid_argument("schrodinger_fd_matrix: N must be even and >= 64");
  const double h = 2.0 * L / N;
  const int M = N / 2;          // nodes per half-line including the wall
  const int per_side = M - 1;   // interior unknowns per half-line
  const int n = 2 * per_side;

  // Eliminate the traces u1 = psi(0-), u2 = psi(0+) from the transmission
  // condition with one-sided second-order derivative stencils:
  //   psi'(0-) =  ( 3 u1 - 4 a1 + a2) / (2h),  a_j = psi(-j h)
  //   psi'(0+) =  (-3 u2 + 4 b1 - b2) / (2h),  b_j = psi(+j h)
  // which turns Gamma~1 = B Gamma~2 into C (u1,u2)^T = Rcoef (r-, r+)^T with
  // r- = (-4 a1 + a2)/(2h), r+ = (4 b1 - b2)/(2h).
  const Mat2C B = nonrel::vav_star(A);
  const double p = 3.0 / (2.0 * h);
  Mat2C C;
  C.e[0] = -p - 0.5 * B.e[0] + 0.5 * B.e[1] * p;   // eq1, u1
  C.e[1] = -p - 0.5 * B.e[0] - 0.5 * B.e[1] * p;   // eq1, u2
  C.e[2] = -1.0 - 0.5 * B.e[2] + 0.5 * B.e[3] * p; // eq2, u1
  C.e[3] = 1.0 - 0.5 * B.e[2] - 0.5 * B.e[3] * p;  // eq2, u2
  Mat2C Rcoef;
  Rcoef.e[0] = 1.0 - 0.5 * B.e[1];   // eq1, r-
  Rcoef.e[1] = -1.0 - 0.5 * B.e[1];  // eq1, r+
  Rcoef.e[2] = -0.5 * B.e[3];        // eq2, r-
  Rcoef.e[3] = -0.5 * B.e[3];        // eq2, r+
  const Mat2C S2 = inv2(C) * Rcoef;  // (u1,u2) from (r-, r+)
  // Expand r-, r+ in the four interior neighbours (a1, a2, b1, b2).
  const double ra[4] = {-2.0 / h, 0.5 / h, 0.0, 0.0};
  const double rb[4] = {0.0, 0.0, 2.0 / h, -0.5 / h};
  Complex S[2][4];
  for (int r = 0; r < 2; ++r)
    for (int ccol = 0; ccol < 4; ++ccol)
      S[r][ccol] = S2(r, 0) * ra[ccol] + S2(r, 1) * rb[ccol];

  DiscretizedOperator op;
  op.kind = DiscretizedOperator::Kind::FiniteDiffSchrodinger;
  op.step = h;
  op.matrix.resize(n, n);
  op.matrix.setZero();
  op.grid.resize(n);
  // Unknown layout: left interior ordered towards the interface
  // (index j <-> x = -L + (j+1) h), then right interior mirrored
  // (index per_side + j <-> x = L - (j+1) h, so the last entries approach 0+).
  for (int j = 0; j < per_side; ++j) {
    op.grid[j] = -L + (j + 1) * h;
    op.grid[per_side + j] = L - (j + 1) * h;
  }

  const double w = -1.0 / (2.0 * m * h * h);
  auto second_diff_row = [&](int row, int left, int self, int right) {
    op.matrix(row, self) += -2.0 * w;
    if (left >= 0) op.matrix(row, left) += w;
    if (right >= 0) op.matrix(row, right) += w;
  };
  // Bulk rows; Dirichlet neighbours at the walls simply drop out, and the
  // missing neighbour at the interface is filled in afterwards.
  for (int j = 0; j < per_side; ++j) {
    second_diff_row(j, j - 1, j, j + 1 < per_side ? j + 1 : -1);
  }
  for (int j = 0; j < per_side; ++j) {
    const int towards_wall = j >= 1 ? per_side + j - 1 : -1;
    const int towards_zero = j + 1 < per_side ? per_side + j + 1 : -1;
    second_diff_row(per_side + j, towards_wall, per_side + j, towards_zero);
  }
  // Interface rows: the dropped neighbour is the eliminated trace.
  // Left row at x = -h (unknown index per_side - 1): neighbours a2 and u1.
  // Right row at x = +h (unknown index n - 1): neighbours b2 and u2.
  const int ia1 = per_side - 1, ia2 = per_side - 2;
  const int ib1 = n - 1, ib2 = n - 2;
  const int stencil[4] = {ia1, ia2, ib1, ib2};
  for (int ccol = 0; ccol < 4; ++ccol) {
    op.matrix(ia1, stencil[ccol]) += w * S[0][ccol];  // u1 enters the -h row
    op.matrix(ib1, stencil[ccol]) += w * S[1][ccol];  // u2 enters the +h row
  }
  return op;
}

ResolventResidual resolvent_residual(const KernelEvaluator& kernel, const CouplingMatrix& A,
                                     double m, Complex z,
                                     const std::function<Vec2C(double)>& psi, double source_L,
                                     double grid_L, int grid_n) {
  if (grid_n < 32) throw std::invalid_argument("resolvent_residual: grid too small");
  const double h = 2.0 * grid_L / grid_n;
  // Staggered nodes keep the interface kink of g between grid points.
  std::vector<double> x(grid_n);
  for (int i = 0; i < grid_n; ++i) x[i] = -grid_L + (i + 0.5) * h;

  auto apply = [&](double at, Side side) {
    const double cuts[2] = {0.0, at};
    return integrate<Vec2C>(
        [&](double y) { return kernel.evaluate(at, y, side) * psi(y); }, -source_L, source_L,
        1e-11, std::span<const double>(cuts, 2));
  };

  std::vector<Vec2C> g(grid_n);
  for (int i = 0; i < grid_n; ++i) g[i] = apply(x[i], Side::Plus);

  ResolventResidual out;
  for (int i = 2; i < grid_n - 2; ++i) {
    if (std::abs(x[i]) < 3.0 * h) continue;  // stencil must not cross the kink
    const Vec2C dg =
        (g[i - 2] - 8.0 * g[i - 1] + 8.0 * g[i + 1] - g[i + 2]) / Complex(12.0 * h);
    const Vec2C dirac{-kI * dg.b + m * g[i].a, -kI * dg.a - m * g[i].b};
    const Vec2C r = dirac - z * g[i] - psi(x[i]);
    out.differential = std::max(out.differential, r.norm());
  }

  const Vec2C trace_minus = apply(0.0, Side::Minus);
  const Vec2C trace_plus = apply(0.0, Side::Plus);
  out.transmission = transmission_residual(A, trace_minus, trace_plus).norm();
  return out;
}

}  // namespace oracle
}  // namespace dirac1d
