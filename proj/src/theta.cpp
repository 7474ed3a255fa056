#include "thetaqmc/theta.hpp"

#include <algorithm>
#include <cmath>

#include "thetaqmc/error.hpp"

namespace thetaqmc {

namespace {

// Layout of the lifted matrix: vertices 0..n-1, then w = -t at index n, then
// (inequality mode only) one nonnegative slack per edge.
ThetaCertificate solve_theta_program(const Graph& g, EdgeConstraint mode, const SdpOptions& options) {
  if (g.num_edges() == 0) throw DomainError("theta bound undefined for m = 0");
  const int n = g.num_vertices();
  const int w = n;
  const int slack0 = n + 1;
  const int dim = mode == EdgeConstraint::equality ? n + 1 : n + 1 + static_cast<int>(g.num_edges());

  SdpProblem problem;
  problem.dim = dim;
  Matrix objective = Matrix::Zero(dim, dim);
  objective(w, w) = 1.0;
  problem.objective = SymMatrix(objective);
  for (int u = 0; u < n; ++u) problem.constraints.push_back({{{u, u, 1.0}}, 1.0});
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const auto& e = g.edges()[k];
    LinearConstraint c{{{e.u, e.v, 1.0}, {w, w, 1.0}}, 0.0};
    if (mode == EdgeConstraint::inequality) {
      const int s = slack0 + static_cast<int>(k);
      c.entries.push_back({s, s, 1.0});
    }
    problem.constraints.push_back(std::move(c));
  }

  const SdpSolution sol = sdp_solve(problem, options);

  ThetaCertificate cert;
  cert.mode = mode;
  cert.solver = sol.residuals;
  cert.t = -sol.x(w, w);
  cert.kappa = 1.0 - 1.0 / cert.t;
  cert.gram = SymMatrix(sol.x.dense().topLeftCorner(n, n));

  // Witness vectors live in R^n; psd_factor pads rank-deficient directions with zeros.
  const double tol = options.tol;
  Matrix rows = psd_factor(cert.gram, std::max(tol, 10.0 * sol.residuals.primal));
  for (int u = 0; u < n; ++u) {
    const double norm = rows.row(u).norm();
    if (norm > 0.0) rows.row(u) /= norm;
  }
  cert.vectors = std::move(rows);
  cert.residual = std::max(certificate_violation(g, cert), sol.residuals.primal);
  return cert;
}

}  // namespace

double certificate_violation(const Graph& g, const ThetaCertificate& cert) {
  const int n = g.num_vertices();
  double worst = 0.0;
  for (int u = 0; u < n; ++u) worst = std::max(worst, std::abs(cert.gram(u, u) - 1.0));
  for (const auto& e : g.edges()) {
    const double entry = cert.gram(e.u, e.v);
    const double violation = cert.mode == EdgeConstraint::equality ? std::abs(entry - cert.t) : entry - cert.t;
    worst = std::max(worst, violation);
  }
  const double lambda_min = eigensystem_symmetric(cert.gram).values(0);
  return std::max(worst, -lambda_min);
}

ThetaCertificate lovasz_theta_complement(const Graph& g, const SdpOptions& options) {
  return solve_theta_program(g, EdgeConstraint::equality, options);
}

ThetaCertificate vector_chromatic(const Graph& g, const SdpOptions& options) {
  return solve_theta_program(g, EdgeConstraint::inequality, options);
}

double lovasz_theta(const Graph& g, const SdpOptions& options) {
  const int n = g.num_vertices();
  SdpProblem problem;
  problem.dim = n;
  problem.objective = SymMatrix(Matrix::Ones(n, n));
  LinearConstraint trace;
  trace.rhs = 1.0;
  for (int u = 0; u < n; ++u) trace.entries.push_back({u, u, 1.0});
  problem.constraints.push_back(std::move(trace));
  for (const auto& e : g.edges()) problem.constraints.push_back({{{e.u, e.v, 1.0}}, 0.0});
  return sdp_solve(problem, options).value;
}

}  // namespace thetaqmc
