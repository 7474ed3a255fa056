#pragma once

#include <cstdint>

#include "thetaqmc/graph.hpp"
#include "thetaqmc/numerics.hpp"
#include "thetaqmc/rounding.hpp"

namespace thetaqmc {

inline constexpr int kMaxSpectrumVertices = 24;
inline constexpr int kMaxDenseVertices = 12;
inline constexpr int kMaxDenseOracleVertices = 8;

/// Real amplitudes over the 2^n computational basis; qubit u is bit u of the index.
using StateVector = Vector;

/// w = H v without forming H. Per edge, (I - XX - YY - ZZ)/4 = (I - SWAP)/2 is
/// zero on |00>, |11> and 1/2 [[1, -1], [-1, 1]] on {|01>, |10>}. The XX model's
/// (I - XX - YY)/4 is 1/4 on |00>, |11> and 1/4 [[1, -2], [-2, 1]] on the middle block.
StateVector apply_hamiltonian(const Graph& g, Model model, const StateVector& v);

struct EigenvalueResult {
  double value = 0.0;
  double residual = 0.0;  // |H x - value x| for the returned Ritz vector
  long matvecs = 0;
  std::uint64_t seed = 0;
};

/// Largest eigenvalue of H^QMC or H^XX by restarted Lanczos with full
/// reorthogonalization, from a seeded random start. Converged when
/// |Hx - lambda x| <= tol * max(1, lambda).
EigenvalueResult max_eigenvalue(const Graph& g, Model model, double tol = 1e-10, std::uint64_t seed = 0);

/// Dense real Hamiltonian, n <= kMaxDenseVertices.
Matrix dense_hamiltonian(const Graph& g, Model model);
double max_eigenvalue_dense(const Graph& g, Model model);

/// Exhaustive Max Cut over 2^(n-1) sign patterns in Gray-code order. n <= 24.
long max_cut_bruteforce(const Graph& g);

/// tr(H rho) with rho the Kronecker product of (I + y . sigma)/2 factors and H
/// assembled from complex Pauli matrices. n <= kMaxDenseOracleVertices.
double dense_product_energy_oracle(const Graph& g, const ProductState& s, Model model);

}  // namespace thetaqmc
