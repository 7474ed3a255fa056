#pragma once

#include "thetaqmc/graph.hpp"
#include "thetaqmc/numerics.hpp"

namespace thetaqmc {

enum class EdgeConstraint {
  equality,    // <x_u, x_v> = t on every edge: Lovasz theta of the complement
  inequality,  // <x_u, x_v> <= t on every edge: vector chromatic number
};

/// Unit vectors realizing kappa = 1 - 1/t, where t is the common (or maximal)
/// inner product across the edges of G.
struct ThetaCertificate {
  double kappa = 0.0;
  double t = 0.0;
  SymMatrix gram;  // n x n, unit diagonal
  Matrix vectors;  // row u is x_u in R^n, normalized
  double residual = 0.0;  // max violation of the certificate invariants
  EdgeConstraint mode = EdgeConstraint::equality;
  SdpResiduals solver;
};

/// theta(complement of g): minimize t over PSD Gram matrices with unit
/// diagonal and Gram(u, v) = t on every edge of g. Throws DomainError for m = 0.
ThetaCertificate lovasz_theta_complement(const Graph& g, const SdpOptions& options = {});

/// Same program with Gram(u, v) <= t on edges. Throws DomainError for m = 0.
ThetaCertificate vector_chromatic(const Graph& g, const SdpOptions& options = {});

/// theta(g) itself from max <J, X>, tr X = 1, X(u, v) = 0 on edges of g.
/// Only used as a cross-check.
double lovasz_theta(const Graph& g, const SdpOptions& options = {});

/// Recomputes the certificate invariants: unit diagonal, edge entries against
/// t, lambda_min of the Gram matrix. Does not look at `residual`.
double certificate_violation(const Graph& g, const ThetaCertificate& cert);

}  // namespace thetaqmc
