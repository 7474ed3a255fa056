#pragma once

#include <cstdint>

#include "thetaqmc/graph.hpp"
#include "thetaqmc/numerics.hpp"
#include "thetaqmc/rounding.hpp"

namespace thetaqmc {

enum class Pauli { x = 0, y = 1, z = 2 };

/// Real part of the two-point Pauli moments M(ik, jl) = tr(rho s_k^(i) s_l^(j)),
/// a 3n x 3n matrix with row/column index 3 i + k.
class MomentMatrix {
 public:
  MomentMatrix() = default;
  MomentMatrix(int num_vertices, SymMatrix entries);

  /// Exact moments of a product state: identity on same-site blocks, y_i y_j^T across sites.
  static MomentMatrix from_product_state(const ProductState& s);

  static int index(int vertex, Pauli k) noexcept { return 3 * vertex + static_cast<int>(k); }

  int num_vertices() const noexcept { return n_; }
  const SymMatrix& entries() const noexcept { return m_; }
  double operator()(int i, Pauli k, int j, Pauli l) const { return m_(index(i, k), index(j, l)); }

  /// Largest violation of: unit diagonal, zero same-site off-Pauli entries, lambda_min >= 0.
  double invariant_violation() const;

  /// 1/4 sum over edges of (1 - M(uX,vX) - M(uY,vY) - M(uZ,vZ)).
  double qmc_energy(const Graph& g) const;

 private:
  int n_ = 0;
  SymMatrix m_;
};

struct GpRelaxation {
  MomentMatrix moments;
  double value = 0.0;
  SdpResiduals residuals;
};

/// Maximizes the QMC energy over real PSD moment matrices with unit diagonal
/// and vanishing same-site cross-Pauli entries. Throws DomainError for m = 0.
GpRelaxation gp_sdp_solve(const Graph& g, const SdpOptions& options = {});

/// Factor M = V V^T, stack the three rows of each vertex into
/// u_i = (v_iX; v_iY; v_iZ) in R^(9n) and normalize. Returns one row per vertex.
Matrix stack_and_normalize(const MomentMatrix& m, double tol);

struct GpResult {
  double relaxation_value = 0.0;
  SdpResiduals residuals;
  RoundingEstimate estimate;
  double ratio = 0.0;
  double denominator = 0.0;
  /// True when qmc was out of reach and the relaxation value stands in for it,
  /// which makes `ratio` a lower bound on the true ratio.
  bool upper_bound_denominator = false;
};

/// Relaxation, factorization, rank-3 rounding over `trials` trials, and the
/// ratio of the mean rounded energy to qmc(g) (exact when n <= max_exact_n).
GpResult gp_pipeline(const Graph& g, long trials, std::uint64_t master_seed, const SdpOptions& options = {},
                     int max_exact_n = 20);

}  // namespace thetaqmc
