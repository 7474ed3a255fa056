#include <cmath>
#include <gtest/gtest.h>

#include "thetaqmc/error.hpp"
#include "thetaqmc/gp.hpp"
#include "thetaqmc/specialfn.hpp"
#include "thetaqmc/spectrum.hpp"

using namespace thetaqmc;

namespace {

Graph family(std::string_view name, std::vector<int> params, std::uint64_t seed = 0) {
  return named_graph(name, params, seed);
}

ProductState random_state(int n, std::uint64_t seed) {
  Matrix ys = gaussian_matrix(n, 3, seed);
  for (int i = 0; i < n; ++i) ys.row(i).normalize();
  return product_state_from_bloch(ys);
}

}  // namespace

TEST(MomentMatrixTest, ProductStateIsFeasibleExactly) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const ProductState s = random_state(n, seed);
    const MomentMatrix m = MomentMatrix::from_product_state(s);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(m(i, Pauli::x, i, Pauli::x), 1.0);
      EXPECT_EQ(m(i, Pauli::x, i, Pauli::y), 0.0);
      EXPECT_EQ(m(i, Pauli::y, i, Pauli::z), 0.0);
    }
    EXPECT_LE(m.invariant_violation(), 1e-12);
    const Graph g = family("erdos_renyi", {n, 700}, seed);
    EXPECT_NEAR(m.qmc_energy(g), energy_product(g, s, Model::qmc), 1e-14);
  }
}

TEST(MomentMatrixTest, IndexScheme) {
  EXPECT_EQ(MomentMatrix::index(0, Pauli::x), 0);
  EXPECT_EQ(MomentMatrix::index(2, Pauli::z), 8);
  EXPECT_THROW(MomentMatrix(2, SymMatrix::identity(5)), std::invalid_argument);
}

TEST(GpSdpTest, SingleEdge) {
  const GpRelaxation r = gp_sdp_solve(family("complete", {2}));
  EXPECT_GE(r.value, 1.0 - 1e-6);
  EXPECT_LE(r.moments.invariant_violation(), 1e-6);
}

TEST(GpSdpTest, FrozenReferenceValues) {
  // Reference values from an interior-point solver (Clarabel via cvxpy).
  EXPECT_NEAR(gp_sdp_solve(family("cycle", {5})).value, 4.283813728902878, 1e-5);
  EXPECT_NEAR(gp_sdp_solve(family("petersen", {})).value, 11.25, 1e-5);
  const Graph g7(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 4}, {2, 5}});
  EXPECT_NEAR(gp_sdp_solve(g7).value, 8.57304966996956, 1e-5);
}

TEST(GpSdpTest, RelaxationUpperBoundsQmc) {
  std::vector<Graph> graphs = {family("cycle", {5}), family("complete", {4}), family("complete_bipartite", {2, 3})};
  for (std::uint64_t seed = 0; seed < 4; ++seed) graphs.push_back(family("erdos_renyi", {7, 500}, seed));
  for (const Graph& g : graphs) {
    if (g.num_edges() == 0) continue;
    EXPECT_GE(gp_sdp_solve(g).value, max_eigenvalue(g, Model::qmc).value - 1e-5);
  }
}

TEST(GpSdpTest, EdgelessIsRejected) { EXPECT_THROW(gp_sdp_solve(Graph(2, {})), DomainError); }

TEST(StackAndNormalizeTest, IdentityMoments) {
  const int n = 3;
  const Matrix xs = stack_and_normalize(MomentMatrix(n, SymMatrix::identity(3 * n)), 1e-10);
  ASSERT_EQ(xs.rows(), n);
  ASSERT_EQ(xs.cols(), 9 * n);
  for (int i = 0; i < n; ++i) {
    EXPECT_NEAR(xs.row(i).norm(), 1.0, 1e-14);
    // Inner products reproduce the averaged same-Pauli correlations: zero across sites.
    for (int j = 0; j < i; ++j) EXPECT_NEAR(xs.row(i).dot(xs.row(j)), 0.0, 1e-14);
    // Each of the three blocks carries one unit vector scaled by 1/sqrt(3).
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(xs.block(i, k * 3 * n, 1, 3 * n).norm(), 1.0 / std::sqrt(3.0), 1e-14);
  }
}

TEST(StackAndNormalizeTest, InnerProductsAverageCorrelations) {
  const ProductState s = random_state(4, 21);
  const MomentMatrix m = MomentMatrix::from_product_state(s);
  const Matrix xs = stack_and_normalize(m, 1e-10);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(xs.row(i).norm(), 1.0, 1e-10);
    for (int j = 0; j < i; ++j) {
      EXPECT_NEAR(xs.row(i).dot(xs.row(j)), s[i].dot(s[j]) / 3.0, 1e-10);
    }
  }
}

TEST(StackAndNormalizeTest, RoundingFollowsLemma) {
  // For the product-state moments, E[y_i . y_j] = c(3) F^(3, y_i . y_j / 3).
  const ProductState s = random_state(3, 5);
  const Matrix xs = stack_and_normalize(MomentMatrix::from_product_state(s), 1e-10);
  const int trials = 40000;
  double sum = 0.0, sum_sq = 0.0;
  for (int k = 0; k < trials; ++k) {
    const Matrix ys = round_vectors(xs, 3, split_seed(1234, k));
    const double ip = ys.row(0).dot(ys.row(1));
    sum += ip;
    sum_sq += ip * ip;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum_sq / trials - mean * mean) / trials);
  const double expected = expected_inner_product(3, s[0].dot(s[1]) / 3.0);
  EXPECT_LE(std::abs(mean - expected), 4 * se);
}

TEST(GpPipelineTest, SingleEdge) {
  const GpResult r = gp_pipeline(family("complete", {2}), 2000, 3);
  EXPECT_FALSE(r.upper_bound_denominator);
  EXPECT_NEAR(r.denominator, 1.0, 1e-9);
  EXPECT_GE(r.ratio, 0.498 - 3 * r.estimate.stderr_);
  EXPECT_LE(r.ratio, 1.0 + 1e-7);
}

TEST(GpPipelineTest, SuiteRatios) {
  std::vector<Graph> graphs = {family("cycle", {5}), family("cycle", {7}), family("petersen", {})};
  for (const Graph& g : graphs) {
    const GpResult r = gp_pipeline(g, 3000, 9);
    EXPECT_GE(r.ratio, 0.498 - 3 * r.estimate.stderr_ / r.denominator);
    EXPECT_LE(r.ratio, 1.0 + 1e-7);
    EXPECT_LE(r.estimate.best_energy, r.denominator + 1e-9);
  }
}

TEST(GpPipelineTest, UpperBoundDenominatorFlag) {
  const Graph g = family("cycle", {5});
  const GpResult r = gp_pipeline(g, 500, 1, {}, 4);
  EXPECT_TRUE(r.upper_bound_denominator);
  EXPECT_EQ(r.denominator, r.relaxation_value);
}
