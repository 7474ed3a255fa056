#include "thetaqmc/numerics.hpp"

#include <cmath>
#include <numbers>

#include "thetaqmc/error.hpp"

namespace thetaqmc {

SymMatrix::SymMatrix(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("SymMatrix needs a square matrix");
  a_ = 0.5 * (a + a.transpose());
}

SymMatrix SymMatrix::identity(int dim) { return SymMatrix(Matrix::Identity(dim, dim)); }

SymMatrix SymMatrix::zero(int dim) { return SymMatrix(Matrix::Zero(dim, dim)); }

void SymMatrix::set(int i, int j, double value) {
  a_(i, j) = value;
  a_(j, i) = value;
}

Eigensystem eigensystem_symmetric(const SymMatrix& a) {
  if (!a.dense().allFinite()) throw std::invalid_argument("eigensystem_symmetric: non-finite entry");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.dense());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensystem_symmetric: solver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix psd_factor(const SymMatrix& a, double tol) {
  const Eigensystem es = eigensystem_symmetric(a);
  const double lambda_min = a.dim() > 0 ? es.values(0) : 0.0;
  if (lambda_min < -tol) throw NotPsdError(lambda_min, tol);
  const Vector roots = es.values.cwiseMax(0.0).cwiseSqrt();
  return es.vectors * roots.asDiagonal();
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

NormalStream::NormalStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double NormalStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double NormalStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // 1 - U lies in (0, 1], so the logarithm is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

Matrix gaussian_matrix(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gaussian_matrix: dimensions must be positive");
  NormalStream stream(seed);
  Matrix z(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) z(i, j) = stream.normal();
  return z;
}

}  // namespace thetaqmc
