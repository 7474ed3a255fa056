#include "thetaqmc/gp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thetaqmc/error.hpp"
#include "thetaqmc/spectrum.hpp"

namespace thetaqmc {

MomentMatrix::MomentMatrix(int num_vertices, SymMatrix entries) : n_(num_vertices), m_(std::move(entries)) {
  if (m_.dim() != 3 * n_) throw std::invalid_argument("moment matrix must be 3n x 3n");
}

MomentMatrix MomentMatrix::from_product_state(const ProductState& s) {
  const int n = static_cast<int>(s.size());
  Matrix m = Matrix::Identity(3 * n, 3 * n);
  for (int i = 0; i < n; ++i) {
    const BlochVector& a = s[static_cast<std::size_t>(i)];
    const double ya[3] = {a.x, a.y, a.z};
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const BlochVector& b = s[static_cast<std::size_t>(j)];
      const double yb[3] = {b.x, b.y, b.z};
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) m(3 * i + k, 3 * j + l) = ya[k] * yb[l];
    }
  }
  return MomentMatrix(n, SymMatrix(m));
}

double MomentMatrix::invariant_violation() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < 3; ++k) {
      worst = std::max(worst, std::abs(m_(3 * i + k, 3 * i + k) - 1.0));
      for (int l = k + 1; l < 3; ++l) worst = std::max(worst, std::abs(m_(3 * i + k, 3 * i + l)));
    }
  }
  if (n_ > 0) worst = std::max(worst, -eigensystem_symmetric(m_).values(0));
  return worst;
}

double MomentMatrix::qmc_energy(const Graph& g) const {
  double total = 0.0;
  for (const auto& e : g.edges()) {
    double corr = 0.0;
    for (int k = 0; k < 3; ++k) corr += m_(3 * e.u + k, 3 * e.v + k);
    total += 0.25 * (1.0 - corr);
  }
  return total;
}

GpRelaxation gp_sdp_solve(const Graph& g, const SdpOptions& options) {
  if (g.num_edges() == 0) throw DomainError("GP relaxation undefined for m = 0");
  const int n = g.num_vertices();
  const int dim = 3 * n;
  if (dim > kMaxSdpDim) throw std::invalid_argument("GP relaxation: 3n exceeds the SDP size cap");

  // The constant m/4 is added back after the solve.
  Matrix objective = Matrix::Zero(dim, dim);
  for (const auto& e : g.edges()) {
    for (int k = 0; k < 3; ++k) {
      objective(3 * e.u + k, 3 * e.v + k) -= 0.125;
      objective(3 * e.v + k, 3 * e.u + k) -= 0.125;
    }
  }
  SdpProblem problem;
  problem.dim = dim;
  problem.objective = SymMatrix(objective);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) {
      problem.constraints.push_back({{{3 * i + k, 3 * i + k, 1.0}}, 1.0});
      for (int l = k + 1; l < 3; ++l) problem.constraints.push_back({{{3 * i + k, 3 * i + l, 1.0}}, 0.0});
    }
  }
  const SdpSolution sol = sdp_solve(problem, options);
  GpRelaxation out;
  out.moments = MomentMatrix(n, sol.x);
  out.value = sol.value + static_cast<double>(g.num_edges()) / 4.0;
  out.residuals = sol.residuals;
  return out;
}

Matrix stack_and_normalize(const MomentMatrix& m, double tol) {
  const int n = m.num_vertices();
  const Matrix v = psd_factor(m.entries(), tol);
  const Eigen::Index width = v.cols();
  Matrix stacked(n, 3 * width);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) stacked.block(i, k * width, 1, width) = v.row(3 * i + k);
    const double norm = stacked.row(i).norm();
    if (norm == 0.0) throw DomainError("stack_and_normalize: zero block for vertex " + std::to_string(i));
    stacked.row(i) /= norm;
  }
  return stacked;
}

GpResult gp_pipeline(const Graph& g, long trials, std::uint64_t master_seed, const SdpOptions& options,
                     int max_exact_n) {
  const GpRelaxation relax = gp_sdp_solve(g, options);
  const Matrix xs = stack_and_normalize(relax.moments, std::max(options.tol, 10.0 * relax.residuals.primal));

  GpResult out;
  out.relaxation_value = relax.value;
  out.residuals = relax.residuals;
  out.estimate = estimate_expected_energy(g, xs, Model::qmc, trials, master_seed);
  if (g.num_vertices() <= std::min(max_exact_n, kMaxSpectrumVertices)) {
    out.denominator = max_eigenvalue(g, Model::qmc, 1e-10, master_seed).value;
  } else {
    out.denominator = relax.value;
    out.upper_bound_denominator = true;
  }
  out.ratio = out.estimate.mean / out.denominator;
  return out;
}

}  // namespace thetaqmc
