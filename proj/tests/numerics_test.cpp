#include <cmath>
#include <gtest/gtest.h>

#include "thetaqmc/error.hpp"
#include "thetaqmc/numerics.hpp"

using namespace thetaqmc;

namespace {

SymMatrix random_symmetric(int dim, std::uint64_t seed) { return SymMatrix(gaussian_matrix(dim, dim, seed)); }

}  // namespace

TEST(SymMatrixTest, SymmetrizesExactly) {
  const SymMatrix a(gaussian_matrix(5, 5, 3));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) EXPECT_EQ(a(i, j), a(j, i));
}

TEST(EigensystemTest, Identity) {
  const Eigensystem es = eigensystem_symmetric(SymMatrix::identity(3));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(es.values(i), 1.0, 1e-15);
}

TEST(EigensystemTest, TwoByTwo) {
  Matrix a(2, 2);
  a << 1.0, 0.5, 0.5, 1.0;
  const Eigensystem es = eigensystem_symmetric(SymMatrix(a));
  EXPECT_NEAR(es.values(0), 0.5, 1e-14);
  EXPECT_NEAR(es.values(1), 1.5, 1e-14);
}

TEST(EigensystemTest, ReconstructionProperty) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int dim = 1 + static_cast<int>(seed % 8);
    const SymMatrix a = random_symmetric(dim, seed);
    const Eigensystem es = eigensystem_symmetric(a);
    const Matrix rebuilt = es.vectors * es.values.asDiagonal() * es.vectors.transpose();
    EXPECT_LE((rebuilt - a.dense()).cwiseAbs().maxCoeff(), 1e-10 * (1.0 + a.max_abs()));
    EXPECT_LE((es.vectors.transpose() * es.vectors - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-10);
    for (int k = 1; k < dim; ++k) EXPECT_LE(es.values(k - 1), es.values(k));
  }
}

TEST(EigensystemTest, RejectsNonFinite) {
  Matrix a = Matrix::Identity(2, 2);
  a(0, 1) = NAN;
  EXPECT_THROW(eigensystem_symmetric(SymMatrix(a)), std::invalid_argument);
}

TEST(PsdFactorTest, IdentityGivesOrthonormalRows) {
  const Matrix g = psd_factor(SymMatrix::identity(2), 1e-12);
  EXPECT_NEAR((g * g.transpose() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 0.0, 1e-14);
}

TEST(PsdFactorTest, RankOneGivesAntipodalVectors) {
  Matrix a(2, 2);
  a << 1.0, -1.0, -1.0, 1.0;
  const Matrix g = psd_factor(SymMatrix(a), 1e-12);
  EXPECT_NEAR(g.row(0).norm(), 1.0, 1e-14);
  EXPECT_NEAR(g.row(0).dot(g.row(1)), -1.0, 1e-14);
}

TEST(PsdFactorTest, ClipsSmallNegativeEigenvalue) {
  // PSD matrix plus a perturbation that pushes one eigenvalue to -1e-9.
  const Matrix b = gaussian_matrix(4, 2, 11);
  const Matrix psd = b * b.transpose();  // rank 2, two zero eigenvalues
  const Eigensystem es = eigensystem_symmetric(SymMatrix(psd));
  const Vector null_dir = es.vectors.col(0);
  const SymMatrix a(psd - 1e-9 * null_dir * null_dir.transpose());
  EXPECT_NEAR(eigensystem_symmetric(a).values(0), -1e-9, 1e-12);

  const double tol = 1e-7;
  const Matrix g = psd_factor(a, tol);
  EXPECT_LE((g * g.transpose() - a.dense()).cwiseAbs().maxCoeff(), kPsdFactorGramFactor * tol);
}

TEST(PsdFactorTest, RejectsIndefinite) {
  Matrix a(2, 2);
  a << 1.0, 2.0, 2.0, 1.0;
  try {
    psd_factor(SymMatrix(a), 1e-7);
    FAIL() << "expected NotPsdError";
  } catch (const NotPsdError& e) {
    EXPECT_NEAR(e.min_eigenvalue(), -1.0, 1e-12);
  }
}

TEST(PsdFactorTest, GramRoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int dim = 2 + static_cast<int>(seed % 6);
    const Matrix b = gaussian_matrix(dim, 1 + static_cast<int>(seed % 4), seed);
    const SymMatrix a(b * b.transpose());
    const Matrix g = psd_factor(a, 1e-10);
    EXPECT_LE((g * g.transpose() - a.dense()).cwiseAbs().maxCoeff(), 1e-12 * (1.0 + a.max_abs()));
  }
}

TEST(GaussianTest, DeterministicPerSeed) {
  const Matrix a = gaussian_matrix(3, 5, 99);
  const Matrix b = gaussian_matrix(3, 5, 99);
  EXPECT_TRUE((a.array() == b.array()).all());
  EXPECT_FALSE((a.array() == gaussian_matrix(3, 5, 100).array()).all());
}

TEST(GaussianTest, FirstDrawsAreFrozen) {
  // Pins the documented generator + transform so streams stay reproducible.
  NormalStream s(0);
  const double u = s.uniform();
  NormalStream t(0);
  const double z = t.normal();
  EXPECT_GE(u, 0.0);
  EXPECT_LT(u, 1.0);
  std::mt19937_64 reference(splitmix64(0));
  const double u1 = 1.0 - static_cast<double>(reference() >> 11) * 0x1.0p-53;
  const double u2 = static_cast<double>(reference() >> 11) * 0x1.0p-53;
  EXPECT_EQ(z, std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2));
}

TEST(GaussianTest, MomentsMatchStandardNormal) {
  const int count = 1000000;
  const Matrix z = gaussian_matrix(1000, 1000, 2024);
  const double mean = z.mean();
  const double var = (z.array() - mean).square().sum() / (count - 1);
  EXPECT_LE(std::abs(mean), 5.0 / std::sqrt(static_cast<double>(count)));
  EXPECT_NEAR(var, 1.0, 0.01);
}

TEST(SplitSeedTest, DistinctChildren) {
  EXPECT_NE(split_seed(0, 0), split_seed(0, 1));
  EXPECT_NE(split_seed(0, 1), split_seed(1, 0));
  EXPECT_EQ(split_seed(5, 7), split_seed(5, 7));
}

TEST(SdpSolveTest, DiagonalConstraintsOnly) {
  SdpProblem p;
  p.dim = 2;
  p.objective = SymMatrix::identity(2);
  p.constraints = {{{{0, 0, 1.0}}, 1.0}, {{{1, 1, 1.0}}, 1.0}};
  const SdpSolution sol = sdp_solve(p);
  EXPECT_NEAR(sol.value, 2.0, 1e-6);
  EXPECT_GE(eigensystem_symmetric(sol.x).values(0), -1e-7);
}

TEST(SdpSolveTest, OffDiagonalFixedGivesIdentity) {
  SdpProblem p;
  p.dim = 2;
  p.objective = SymMatrix::identity(2);
  p.constraints = {{{{0, 0, 1.0}}, 1.0}, {{{1, 1, 1.0}}, 1.0}, {{{0, 1, 1.0}}, 0.0}};
  const SdpSolution sol = sdp_solve(p);
  EXPECT_LE((sol.x.dense() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-7);
  EXPECT_LE(sol.residuals.primal, 1e-7);
}

TEST(SdpSolveTest, LovaszThetaOfFiveCycle) {
  // max <J, X>, tr X = 1, X_uv = 0 on edges of C5; optimum sqrt(5).
  SdpProblem p;
  p.dim = 5;
  p.objective = SymMatrix(Matrix::Ones(5, 5));
  LinearConstraint trace{{}, 1.0};
  for (int u = 0; u < 5; ++u) trace.entries.push_back({u, u, 1.0});
  p.constraints.push_back(trace);
  for (int u = 0; u < 5; ++u) p.constraints.push_back({{{u, (u + 1) % 5, 1.0}}, 0.0});
  const SdpSolution sol = sdp_solve(p);
  EXPECT_NEAR(sol.value, std::sqrt(5.0), 1e-4);
  for (const auto& c : p.constraints) {
    double lhs = 0.0;
    for (const auto& e : c.entries) lhs += e.coef * sol.x(e.row, e.col);
    EXPECT_LE(std::abs(lhs - c.rhs), 1e-7);
  }
}

TEST(SdpSolveTest, InfeasiblePairFailsToConverge) {
  SdpProblem p;
  p.dim = 2;
  p.objective = SymMatrix::identity(2);
  p.constraints = {{{{0, 0, 1.0}}, 1.0}, {{{0, 0, 1.0}}, 2.0}};
  try {
    sdp_solve(p, {1e-7, 2000});
    FAIL() << "expected SdpConvergenceError";
  } catch (const SdpConvergenceError& e) {
    EXPECT_GE(e.residuals().primal, 0.4);
    EXPECT_EQ(e.residuals().iterations, 2000);
  }
}

TEST(SdpSolveTest, Deterministic) {
  SdpProblem p;
  p.dim = 3;
  p.objective = SymMatrix(gaussian_matrix(3, 3, 5));
  for (int i = 0; i < 3; ++i) p.constraints.push_back({{{i, i, 1.0}}, 1.0});
  const SdpSolution a = sdp_solve(p);
  const SdpSolution b = sdp_solve(p);
  EXPECT_EQ(a.value, b.value);
  EXPECT_TRUE((a.x.dense().array() == b.x.dense().array()).all());
}

TEST(SdpSolveTest, RejectsBadInput) {
  SdpProblem p;
  p.dim = 2;
  p.objective = SymMatrix::identity(3);
  EXPECT_THROW(sdp_solve(p), std::invalid_argument);
  p.objective = SymMatrix::identity(2);
  p.constraints = {{{{0, 2, 1.0}}, 1.0}};
  EXPECT_THROW(sdp_solve(p), std::invalid_argument);
}
