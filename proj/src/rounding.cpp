#include "thetaqmc/rounding.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "thetaqmc/error.hpp"
#include "thetaqmc/specialfn.hpp"

namespace thetaqmc {

int projection_rank(Model model) noexcept {
  switch (model) {
    case Model::qmc: return 3;
    case Model::xx: return 2;
    case Model::mc: return 1;
  }
  return 3;
}

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::qmc: return "qmc";
    case Model::xx: return "xx";
    case Model::mc: return "mc";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  if (name == "qmc") return Model::qmc;
  if (name == "xx") return Model::xx;
  if (name == "mc") return Model::mc;
  throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected qmc, xx or mc)");
}

ProductState::ProductState(std::vector<BlochVector> bloch) : bloch_(std::move(bloch)) {
  for (std::size_t i = 0; i < bloch_.size(); ++i) {
    const double norm_sq = bloch_[i].dot(bloch_[i]);
    if (!(std::abs(norm_sq - 1.0) <= 1e-8)) {
      throw std::invalid_argument("Bloch vector " + std::to_string(i) + " is not unit norm (|y|^2 = " +
                                  std::to_string(norm_sq) + ")");
    }
  }
}

ProductState product_state_from_bloch(const Matrix& ys) {
  if (ys.cols() != 3) throw std::invalid_argument("Bloch vectors must have 3 components");
  std::vector<BlochVector> bloch;
  bloch.reserve(static_cast<std::size_t>(ys.rows()));
  for (Eigen::Index i = 0; i < ys.rows(); ++i) {
    const double norm = ys.row(i).norm();
    if (!(std::abs(norm - 1.0) <= 1e-8)) {
      throw std::invalid_argument("Bloch vector " + std::to_string(i) + " is not unit norm");
    }
    bloch.push_back({ys(i, 0) / norm, ys(i, 1) / norm, ys(i, 2) / norm});
  }
  return ProductState(std::move(bloch));
}

double energy_product(const Graph& g, const ProductState& s, Model model) {
  if (s.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw std::invalid_argument("product state has " + std::to_string(s.size()) + " qubits, graph has " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
  double total = 0.0;
  for (const auto& e : g.edges()) {
    const BlochVector& a = s[static_cast<std::size_t>(e.u)];
    const BlochVector& b = s[static_cast<std::size_t>(e.v)];
    switch (model) {
      case Model::qmc: total += 0.25 * (1.0 - a.dot(b)); break;
      case Model::xx: total += 0.25 * (1.0 - a.x * b.x - a.y * b.y); break;
      case Model::mc: total += 0.5 * (1.0 - a.z * b.z); break;
    }
  }
  return total;
}

Matrix round_vectors(const Matrix& xs, int r, std::uint64_t seed, RoundingDiagnostics* diagnostics) {
  if (r < 1 || r > 3) throw std::invalid_argument("round_vectors: r must be 1, 2 or 3");
  for (Eigen::Index i = 0; i < xs.rows(); ++i) {
    if (!(std::abs(xs.row(i).norm() - 1.0) <= 1e-8)) {
      throw std::invalid_argument("round_vectors: input " + std::to_string(i) + " is not unit norm");
    }
  }
  const int d = static_cast<int>(xs.cols());
  for (std::uint64_t attempt = 0;; ++attempt) {
    const Matrix z = gaussian_matrix(r, d, seed + attempt);
    Matrix ys = xs * z.transpose();
    bool degenerate = false;
    for (Eigen::Index i = 0; i < ys.rows(); ++i) {
      const double norm = ys.row(i).norm();
      if (norm < 1e-300) {
        degenerate = true;
        break;
      }
      ys.row(i) /= norm;
    }
    if (!degenerate) return ys;
    if (diagnostics != nullptr) ++diagnostics->resamples;
  }
}

CutAssignment classical_cut_from_rounding(const Graph& g, const Matrix& xs, std::uint64_t seed) {
  if (xs.rows() != g.num_vertices()) throw std::invalid_argument("one vector per vertex required");
  const Matrix ys = round_vectors(xs, 1, seed);
  CutAssignment out;
  out.signs.resize(static_cast<std::size_t>(g.num_vertices()));
  for (int u = 0; u < g.num_vertices(); ++u) out.signs[static_cast<std::size_t>(u)] = ys(u, 0) > 0.0 ? 1 : -1;
  for (const auto& e : g.edges()) {
    if (out.signs[static_cast<std::size_t>(e.u)] != out.signs[static_cast<std::size_t>(e.v)]) ++out.cut_value;
  }
  return out;
}

double theta_lower_bound(std::size_t num_edges, double kappa, Model model) {
  if (num_edges == 0) throw DomainError("theta bound undefined for m = 0");
  if (!(kappa > 1.0)) throw DomainError("theta bound needs kappa > 1, got " + std::to_string(kappa));
  const double m = static_cast<double>(num_edges);
  const double inv = 1.0 / (kappa - 1.0);
  switch (model) {
    case Model::qmc: return m / 4.0 * (1.0 + rounding_coefficient(3) * inv);
    case Model::xx: return m / 4.0 * (1.0 + rounding_coefficient(2) * inv);
    case Model::mc: return m / 2.0 * (1.0 + rounding_coefficient(1) * inv);
  }
  return 0.0;
}

double theta_lower_bound(const Graph& g, double kappa, Model model) {
  return theta_lower_bound(g.num_edges(), kappa, model);
}

double trivial_value(std::size_t num_edges, Model model) noexcept {
  const double m = static_cast<double>(num_edges);
  return model == Model::mc ? m / 2.0 : m / 4.0;
}

namespace {

ProductState embed_as_bloch(const Matrix& ys, Model model) {
  std::vector<BlochVector> bloch(static_cast<std::size_t>(ys.rows()));
  for (Eigen::Index i = 0; i < ys.rows(); ++i) {
    auto& b = bloch[static_cast<std::size_t>(i)];
    switch (model) {
      case Model::qmc: b = {ys(i, 0), ys(i, 1), ys(i, 2)}; break;
      case Model::xx: b = {ys(i, 0), ys(i, 1), 0.0}; break;
      case Model::mc: b = {0.0, 0.0, ys(i, 0) > 0.0 ? 1.0 : -1.0}; break;
    }
  }
  return ProductState(std::move(bloch));
}

}  // namespace

RoundingEstimate estimate_expected_energy(const Graph& g, const Matrix& xs, Model model, long trials,
                                          std::uint64_t master_seed) {
  if (trials < 1) throw std::invalid_argument("estimate_expected_energy: trials must be >= 1");
  if (xs.rows() != g.num_vertices()) throw std::invalid_argument("one vector per vertex required");
  const int r = projection_rank(model);

  RoundingEstimate est;
  est.trials = trials;
  est.master_seed = master_seed;
  est.best_energy = -std::numeric_limits<double>::infinity();
  RoundingDiagnostics diag;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long i = 0; i < trials; ++i) {
    const Matrix ys = round_vectors(xs, r, split_seed(master_seed, static_cast<std::uint64_t>(i)), &diag);
    ProductState state = embed_as_bloch(ys, model);
    const double energy = energy_product(g, state, model);
    sum += energy;
    sum_sq += energy * energy;
    if (energy > est.best_energy) {
      est.best_energy = energy;
      est.best_state = std::move(state);
    }
  }
  est.mean = sum / static_cast<double>(trials);
  est.single_trial = trials == 1;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - sum * est.mean) / static_cast<double>(trials - 1));
    est.stderr_ = std::sqrt(var / static_cast<double>(trials));
  }
  est.resamples = diag.resamples;
  return est;
}

LemmaCheck verify_lemma_expectation(int n, double t, int r, long samples, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("verify_lemma_expectation: n must be >= 2");
  if (!(std::abs(t) <= 1.0)) throw DomainError("verify_lemma_expectation: |t| must be at most 1");
  if (samples < 2) throw std::invalid_argument("verify_lemma_expectation: samples must be >= 2");
  Matrix xs = Matrix::Zero(2, n);
  xs(0, 0) = 1.0;
  xs(1, 0) = t;
  xs(1, 1) = std::sqrt(1.0 - t * t);

  double sum = 0.0;
  double sum_sq = 0.0;
  for (long i = 0; i < samples; ++i) {
    const Matrix ys = round_vectors(xs, r, split_seed(seed, static_cast<std::uint64_t>(i)));
    const double ip = ys.row(0).dot(ys.row(1));
    sum += ip;
    sum_sq += ip * ip;
  }
  LemmaCheck out;
  out.empirical = sum / static_cast<double>(samples);
  const double var = std::max(0.0, (sum_sq - sum * out.empirical) / static_cast<double>(samples - 1));
  out.stderr_ = std::sqrt(var / static_cast<double>(samples));
  out.closed_form = expected_inner_product(r, t, 1e-14);
  const double diff = std::abs(out.empirical - out.closed_form);
  out.z_score = out.stderr_ > 0.0 ? diff / out.stderr_ : (diff <= 1e-12 ? 0.0 : INFINITY);
  return out;
}

}  // namespace thetaqmc
