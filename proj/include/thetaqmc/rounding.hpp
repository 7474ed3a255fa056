#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "thetaqmc/graph.hpp"
#include "thetaqmc/numerics.hpp"

namespace thetaqmc {

/// Objective being rounded for. Fixes the projection rank r.
enum class Model {
  qmc,  // H = 1/4 sum (I - XX - YY - ZZ), r = 3
  xx,   // H = 1/4 sum (I - XX - YY), r = 2
  mc,   // classical Max Cut, r = 1
};

int projection_rank(Model model) noexcept;
std::string_view to_string(Model model) noexcept;
/// Accepts "qmc", "xx", "mc". Throws std::invalid_argument otherwise.
Model parse_model(std::string_view name);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double dot(const BlochVector& o) const noexcept { return x * o.x + y * o.y + z * o.z; }
};

/// Pure product state, one unit Bloch vector per qubit.
class ProductState {
 public:
  ProductState() = default;
  /// Throws std::invalid_argument if any vector is off the unit sphere by more than 1e-8.
  explicit ProductState(std::vector<BlochVector> bloch);

  std::size_t size() const noexcept { return bloch_.size(); }
  const BlochVector& operator[](std::size_t i) const { return bloch_[i]; }
  std::span<const BlochVector> bloch() const noexcept { return bloch_; }

 private:
  std::vector<BlochVector> bloch_;
};

/// Rows of `ys` are Bloch vectors in R^3. Each is renormalized to 1e-12 after
/// the 1e-8 unit-norm check.
ProductState product_state_from_bloch(const Matrix& ys);

/// tr(H rho) for the product state. QMC: 1/4 sum (1 - y_u . y_v);
/// XX: 1/4 sum (1 - x_u x_v - y_u y_v); MC: 1/2 sum (1 - z_u z_v).
double energy_product(const Graph& g, const ProductState& s, Model model);

struct RoundingDiagnostics {
  long resamples = 0;
};

/// y_u = Z x_u / |Z x_u| with one r x d Gaussian Z drawn from `seed`, where d
/// is the number of columns of `xs` (one input vector per row). A projection
/// shorter than 1e-300 triggers a redraw with seed + attempt.
Matrix round_vectors(const Matrix& xs, int r, std::uint64_t seed, RoundingDiagnostics* diagnostics = nullptr);

struct CutAssignment {
  std::vector<int> signs;  // +1 or -1 per vertex
  long cut_value = 0;
};

/// Hyperplane rounding: z_u = sign(<g, x_u>) for one Gaussian g.
CutAssignment classical_cut_from_rounding(const Graph& g, const Matrix& xs, std::uint64_t seed);

/// QMC: (m/4)(1 + (8/3pi)/(kappa-1)); XX: (m/4)(1 + (pi/4)/(kappa-1));
/// MC: (m/2)(1 + (2/pi)/(kappa-1)). Throws DomainError for kappa <= 1 or m = 0.
double theta_lower_bound(std::size_t num_edges, double kappa, Model model);
double theta_lower_bound(const Graph& g, double kappa, Model model);

/// Value of the trivial baseline for the model: m/4 for QMC and XX (maximally
/// mixed state), m/2 for MC (uniformly random cut).
double trivial_value(std::size_t num_edges, Model model) noexcept;

struct RoundingEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;  // sample std / sqrt(trials); 0 for a single trial
  long trials = 0;
  bool single_trial = false;
  double best_energy = 0.0;
  ProductState best_state;
  std::uint64_t master_seed = 0;
  long resamples = 0;
};

/// Trial i rounds with seed split_seed(master_seed, i). Trials are summed in
/// index order, so the result depends only on the arguments.
RoundingEstimate estimate_expected_energy(const Graph& g, const Matrix& xs, Model model, long trials,
                                          std::uint64_t master_seed);

struct LemmaCheck {
  double empirical = 0.0;
  double closed_form = 0.0;
  double stderr_ = 0.0;
  double z_score = 0.0;
};

/// Monte-Carlo check of E[y_u . y_v] for two unit vectors in R^n with inner
/// product t, against expected_inner_product(r, t).
LemmaCheck verify_lemma_expectation(int n, double t, int r, long samples, std::uint64_t seed);

}  // namespace thetaqmc
