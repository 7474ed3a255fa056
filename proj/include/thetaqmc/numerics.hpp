#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace thetaqmc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense real symmetric matrix. The constructor symmetrizes its input as
/// (A + A^T) / 2, so entries(i, j) == entries(j, i) holds bit-exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Matrix& a);

  static SymMatrix identity(int dim);
  static SymMatrix zero(int dim);

  int dim() const noexcept { return static_cast<int>(a_.rows()); }
  double operator()(int i, int j) const { return a_(i, j); }
  /// Writes both (i, j) and (j, i).
  void set(int i, int j, double value);
  const Matrix& dense() const noexcept { return a_; }
  double max_abs() const { return a_.size() == 0 ? 0.0 : a_.cwiseAbs().maxCoeff(); }

 private:
  Matrix a_;
};

struct Eigensystem {
  Vector values;   // ascending
  Matrix vectors;  // orthonormal columns, column k pairs with values[k]
};

/// Throws std::invalid_argument on non-finite entries.
Eigensystem eigensystem_symmetric(const SymMatrix& a);

/// Entrywise Gram error bound of psd_factor is kPsdFactorGramFactor * tol
/// (plus rounding of order 1e-14 * max|a|).
inline constexpr double kPsdFactorGramFactor = 2.0;

/// Rows g_i with <g_i, g_j> ~= a(i, j). Eigenvalues in [-tol, 0) are clipped
/// to zero; anything below -tol throws NotPsdError.
Matrix psd_factor(const SymMatrix& a, double tol);

// ---------------------------------------------------------------------------
// Random streams
//
// Generator: std::mt19937_64 (its output sequence is fixed by the C++
// standard), seeded with splitmix64(seed). Uniforms take the top 53 bits.
// Normals use the Box-Muller transform, consuming two uniforms per pair and
// emitting the cosine branch first. std::normal_distribution is avoided since
// its algorithm differs between standard libraries.
// ---------------------------------------------------------------------------

/// One step of the splitmix64 mixer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Deterministic child seed for stream `index` under `master`. Order-independent.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept;

class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed);

  /// Uniform on [0, 1).
  double uniform();
  double normal();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// rows x cols matrix of iid N(0, 1), filled row-major from NormalStream(seed).
Matrix gaussian_matrix(int rows, int cols, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Small dense SDP
// ---------------------------------------------------------------------------

/// One term coef * X(row, col) of a linear functional on a symmetric X.
/// As a matrix this is coef at (row, row) when row == col, otherwise coef / 2
/// at both (row, col) and (col, row).
struct MatrixEntry {
  int row;
  int col;
  double coef;
};

/// sum_k coef_k * X(row_k, col_k) == rhs
struct LinearConstraint {
  std::vector<MatrixEntry> entries;
  double rhs = 0.0;
};

/// maximize <C, X> subject to the constraints and X PSD.
struct SdpProblem {
  int dim = 0;
  SymMatrix objective;
  std::vector<LinearConstraint> constraints;
};

struct SdpOptions {
  double tol = 1e-7;
  long max_iter = 200000;
};

struct SdpResiduals {
  double primal = 0.0;  // max_i |<A_i, X> - b_i|
  double dual = 0.0;    // ||A^T y + S - C||_F / (1 + ||C||_F)
  double gap = 0.0;     // |pobj - dobj| / (1 + |pobj| + |dobj|)
  double min_eigenvalue = 0.0;  // of X
  long iterations = 0;
};

class SdpConvergenceError : public std::runtime_error {
 public:
  explicit SdpConvergenceError(const SdpResiduals& r);
  const SdpResiduals& residuals() const noexcept { return residuals_; }

 private:
  SdpResiduals residuals_;
};

struct SdpSolution {
  SymMatrix x;
  double value = 0.0;
  SdpResiduals residuals;
};

/// Practical upper limit on SdpProblem::dim.
inline constexpr int kMaxSdpDim = 200;

/// ADMM on the dual (Wen, Goldfarb and Yin), alternating a least-squares
/// multiplier update, a projection onto the PSD cone by eigenvalue clipping,
/// and a primal step. Stops when primal, dual and gap residuals are all
/// below tol, or throws SdpConvergenceError after max_iter iterations.
/// Fully deterministic.
SdpSolution sdp_solve(const SdpProblem& problem, const SdpOptions& options = {});

}  // namespace thetaqmc
