#include "thetaqmc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace thetaqmc {

namespace {

std::string describe(const SdpResiduals& r) {
  std::ostringstream out;
  out << "SDP solver did not converge after " << r.iterations << " iterations (primal " << r.primal << ", dual "
      << r.dual << ", gap " << r.gap << ")";
  return out.str();
}

// Constraint matrix in upper-triangular sparse form: value at (row <= col);
// the off-diagonal entries stand for both symmetric positions.
struct SparseSym {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<double> values;

  double dot(const Matrix& x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      const double w = rows[k] == cols[k] ? 1.0 : 2.0;
      s += w * values[k] * x(rows[k], cols[k]);
    }
    return s;
  }

  void add_scaled_to(Matrix& out, double scale) const {
    for (std::size_t k = 0; k < values.size(); ++k) {
      out(rows[k], cols[k]) += scale * values[k];
      if (rows[k] != cols[k]) out(cols[k], rows[k]) += scale * values[k];
    }
  }

  double frobenius_sq() const {
    double s = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) s += (rows[k] == cols[k] ? 1.0 : 2.0) * values[k] * values[k];
    return s;
  }
};

SparseSym to_sparse(const LinearConstraint& c, int dim) {
  std::map<std::pair<int, int>, double> merged;
  for (const auto& e : c.entries) {
    if (e.row < 0 || e.col < 0 || e.row >= dim || e.col >= dim) {
      throw std::invalid_argument("SDP constraint entry out of range");
    }
    const int r = std::min(e.row, e.col), k = std::max(e.row, e.col);
    merged[{r, k}] += r == k ? e.coef : 0.5 * e.coef;
  }
  SparseSym s;
  for (const auto& [pos, value] : merged) {
    if (value == 0.0) continue;
    s.rows.push_back(pos.first);
    s.cols.push_back(pos.second);
    s.values.push_back(value);
  }
  return s;
}

}  // namespace

SdpConvergenceError::SdpConvergenceError(const SdpResiduals& r) : std::runtime_error(describe(r)), residuals_(r) {}

SdpSolution sdp_solve(const SdpProblem& problem, const SdpOptions& options) {
  const int dim = problem.dim;
  if (dim < 1 || dim > kMaxSdpDim) throw std::invalid_argument("SDP dimension outside [1, " + std::to_string(kMaxSdpDim) + "]");
  if (problem.objective.dim() != dim) throw std::invalid_argument("SDP objective dimension mismatch");
  if (!(options.tol > 0.0) || options.max_iter < 1) throw std::invalid_argument("SDP options: tol > 0 and max_iter >= 1");

  // Original constraints, kept for residual reporting in user units.
  std::vector<SparseSym> original;
  Vector b_original(static_cast<Eigen::Index>(problem.constraints.size()));
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    original.push_back(to_sparse(problem.constraints[i], dim));
    b_original(static_cast<Eigen::Index>(i)) = problem.constraints[i].rhs;
  }

  // Row-normalized working copy. An all-zero row with nonzero rhs can never be
  // met; it stays out of the iteration and shows up in the primal residual.
  std::vector<SparseSym> rows;
  std::vector<double> b_list;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const double norm = std::sqrt(original[i].frobenius_sq());
    if (norm == 0.0) continue;
    SparseSym s = original[i];
    for (double& v : s.values) v /= norm;
    rows.push_back(std::move(s));
    b_list.push_back(b_original(static_cast<Eigen::Index>(i)) / norm);
  }
  const auto m = static_cast<Eigen::Index>(rows.size());
  const Vector b = Eigen::Map<const Vector>(b_list.data(), m);

  const double c_scale = std::max(1.0, problem.objective.dense().norm());
  // Internally: minimize <C, X> with C = -objective / c_scale.
  const Matrix c = -problem.objective.dense() / c_scale;

  // Pseudo-inverse of A A^T; rank-deficient systems (e.g. contradictory rows)
  // are handled in the least-squares sense.
  Matrix aat = Matrix::Zero(m, m);
  {
    std::map<std::pair<int, int>, std::vector<std::pair<Eigen::Index, double>>> by_position;
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto& s = rows[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < s.values.size(); ++k) {
        const double w = s.rows[k] == s.cols[k] ? 1.0 : std::sqrt(2.0);
        by_position[{s.rows[k], s.cols[k]}].emplace_back(i, w * s.values[k]);
      }
    }
    for (const auto& [pos, list] : by_position)
      for (const auto& [i, vi] : list)
        for (const auto& [j, vj] : list) aat(i, j) += vi * vj;
  }
  Matrix aat_pinv = Matrix::Zero(m, m);
  if (m > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(aat);
    const double cutoff = 1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    Vector inv = es.eigenvalues();
    for (Eigen::Index k = 0; k < inv.size(); ++k) inv(k) = std::abs(inv(k)) > cutoff ? 1.0 / inv(k) : 0.0;
    aat_pinv = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
  }

  auto apply_a = [&](const Matrix& x) {
    Vector out(m);
    for (Eigen::Index i = 0; i < m; ++i) out(i) = rows[static_cast<std::size_t>(i)].dot(x);
    return out;
  };
  auto apply_at = [&](const Vector& y) {
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)].add_scaled_to(out, y(i));
    return out;
  };

  Matrix x = Matrix::Zero(dim, dim);
  Matrix s = Matrix::Zero(dim, dim);
  Vector y = Vector::Zero(m);
  double mu = 1.0;
  const double b_norm = b.norm();
  const double c_norm = c.norm();

  Eigen::SelfAdjointEigenSolver<Matrix> eig(dim);
  SdpResiduals res;
  double min_eig_x = 0.0;

  int imbalance = 0;
  for (long iter = 1; iter <= options.max_iter; ++iter) {
    const Vector ax = apply_a(x);
    y = -aat_pinv * (mu * (ax - b) + apply_a(s - c));
    const Matrix at_y = apply_at(y);
    Matrix v = c - at_y - mu * x;
    v = 0.5 * (v + v.transpose());
    eig.compute(v);
    const Vector& lambda = eig.eigenvalues();
    const Matrix& vecs = eig.eigenvectors();
    const Vector pos = lambda.cwiseMax(0.0);
    const Vector neg = (-lambda).cwiseMax(0.0) / mu;
    s = vecs * pos.asDiagonal() * vecs.transpose();
    Matrix x_next = vecs * neg.asDiagonal() * vecs.transpose();
    min_eig_x = neg.minCoeff();

    const double dual_abs = mu * (x_next - x).norm();
    x = std::move(x_next);

    const double rel_primal = (apply_a(x) - b).norm() / (1.0 + b_norm);
    const double rel_dual = dual_abs / (1.0 + c_norm);
    const double pobj = (c.cwiseProduct(x)).sum();
    const double dobj = b.dot(y);

    res.iterations = iter;
    res.dual = rel_dual;
    res.gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    res.min_eigenvalue = min_eig_x;

    if (rel_primal <= options.tol && res.dual <= options.tol && res.gap <= options.tol) {
      double worst = 0.0;
      for (std::size_t i = 0; i < original.size(); ++i) {
        worst = std::max(worst, std::abs(original[i].dot(x) - b_original(static_cast<Eigen::Index>(i))));
      }
      res.primal = worst;
      if (worst <= options.tol) {
        SdpSolution sol;
        sol.x = SymMatrix(x);
        sol.value = (problem.objective.dense().cwiseProduct(sol.x.dense())).sum();
        sol.residuals = res;
        return sol;
      }
    }
    res.primal = rel_primal;

    // Residual balancing: small mu weights dual feasibility, large mu primal.
    if (rel_primal > 5.0 * rel_dual) {
      imbalance = std::max(imbalance, 0) + 1;
    } else if (rel_dual > 5.0 * rel_primal) {
      imbalance = std::min(imbalance, 0) - 1;
    } else {
      imbalance = 0;
    }
    if (imbalance >= 10) {
      mu = std::min(mu * 1.6, 1e6);
      imbalance = 0;
    } else if (imbalance <= -10) {
      mu = std::max(mu / 1.6, 1e-6);
      imbalance = 0;
    }
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    worst = std::max(worst, std::abs(original[i].dot(x) - b_original(static_cast<Eigen::Index>(i))));
  }
  res.primal = worst;
  throw SdpConvergenceError(res);
}

}  // namespace thetaqmc
