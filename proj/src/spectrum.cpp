#include "thetaqmc/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace thetaqmc {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.num_vertices() > cap) {
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(g.num_vertices()) + " exceeds cap " +
                                std::to_string(cap));
  }
}

void check_quantum_model(Model model) {
  if (model == Model::mc) throw std::invalid_argument("spectral routines need model qmc or xx");
}

}  // namespace

StateVector apply_hamiltonian(const Graph& g, Model model, const StateVector& v) {
  check_cap(g, kMaxSpectrumVertices, "apply_hamiltonian");
  check_quantum_model(model);
  const std::size_t dim = std::size_t{1} << g.num_vertices();
  if (static_cast<std::size_t>(v.size()) != dim) throw std::invalid_argument("apply_hamiltonian: dimension mismatch");

  StateVector w = StateVector::Zero(v.size());
  for (const auto& e : g.edges()) {
    const std::size_t mask = (std::size_t{1} << e.u) | (std::size_t{1} << e.v);
    for (std::size_t i = 0; i < dim; ++i) {
      const auto idx = static_cast<Eigen::Index>(i);
      const auto flipped = static_cast<Eigen::Index>(i ^ mask);
      const bool differ = ((i >> e.u) & 1U) != ((i >> e.v) & 1U);
      if (model == Model::qmc) {
        if (differ) w(idx) += 0.5 * (v(idx) - v(flipped));
      } else {
        w(idx) += differ ? 0.25 * v(idx) - 0.5 * v(flipped) : 0.25 * v(idx);
      }
    }
  }
  return w;
}

EigenvalueResult max_eigenvalue(const Graph& g, Model model, double tol, std::uint64_t seed) {
  check_cap(g, kMaxSpectrumVertices, "max_eigenvalue");
  check_quantum_model(model);
  const Eigen::Index dim = Eigen::Index{1} << g.num_vertices();
  const Eigen::Index krylov = std::min<Eigen::Index>(dim, dim <= (1 << 16) ? 60 : 20);
  constexpr int kMaxRestarts = 500;

  EigenvalueResult result;
  result.seed = seed;

  NormalStream stream(seed);
  StateVector start(dim);
  for (Eigen::Index i = 0; i < dim; ++i) start(i) = stream.normal();
  start.normalize();

  Matrix basis(dim, krylov);
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    basis.col(0) = start;
    Vector alpha = Vector::Zero(krylov);
    Vector beta = Vector::Zero(krylov);
    Eigen::Index steps = 0;
    for (Eigen::Index j = 0; j < krylov; ++j) {
      StateVector w = apply_hamiltonian(g, model, basis.col(j));
      ++result.matvecs;
      alpha(j) = basis.col(j).dot(w);
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass) {
        const Vector coeffs = basis.leftCols(j + 1).transpose() * w;
        w -= basis.leftCols(j + 1) * coeffs;
      }
      steps = j + 1;
      const double norm = w.norm();
      if (j + 1 == krylov) break;
      if (norm <= 1e-12 * std::max(1.0, std::abs(alpha(j)))) break;
      beta(j) = norm;
      basis.col(j + 1) = w / norm;
    }

    Matrix tri = Matrix::Zero(steps, steps);
    for (Eigen::Index j = 0; j < steps; ++j) {
      tri(j, j) = alpha(j);
      if (j + 1 < steps) tri(j, j + 1) = tri(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(tri);
    StateVector ritz = basis.leftCols(steps) * es.eigenvectors().col(steps - 1);
    ritz.normalize();

    const StateVector h_ritz = apply_hamiltonian(g, model, ritz);
    ++result.matvecs;
    result.value = ritz.dot(h_ritz);
    result.residual = (h_ritz - result.value * ritz).norm();
    if (result.residual <= tol * std::max(1.0, std::abs(result.value))) return result;
    start = ritz;
  }
  throw std::runtime_error("max_eigenvalue: Lanczos did not converge (residual " + std::to_string(result.residual) +
                           ")");
}

Matrix dense_hamiltonian(const Graph& g, Model model) {
  check_cap(g, kMaxDenseVertices, "dense_hamiltonian");
  check_quantum_model(model);
  const Eigen::Index dim = Eigen::Index{1} << g.num_vertices();
  Matrix h(dim, dim);
  StateVector unit = StateVector::Zero(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    unit(i) = 1.0;
    h.col(i) = apply_hamiltonian(g, model, unit);
    unit(i) = 0.0;
  }
  return h;
}

double max_eigenvalue_dense(const Graph& g, Model model) {
  const Matrix h = dense_hamiltonian(g, model);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

long max_cut_bruteforce(const Graph& g) {
  check_cap(g, kMaxSpectrumVertices, "max_cut_bruteforce");
  const int n = g.num_vertices();
  std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adjacency[static_cast<std::size_t>(e.u)] |= 1U << e.v;
    adjacency[static_cast<std::size_t>(e.v)] |= 1U << e.u;
  }
  // Vertex n-1 stays on side 0; Gray code walks the other n-1 sides.
  std::uint32_t side = 0;
  long cut = 0;
  long best = 0;
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < patterns; ++k) {
    const int v = std::countr_zero(k);
    const std::uint32_t nbrs = adjacency[static_cast<std::size_t>(v)];
    const bool on_one = (side >> v) & 1U;
    const int same = std::popcount(nbrs & (on_one ? side : ~side));
    const int total = std::popcount(nbrs);
    cut += same - (total - same);
    side ^= 1U << v;
    best = std::max(best, cut);
  }
  return best;
}

double dense_product_energy_oracle(const Graph& g, const ProductState& s, Model model) {
  check_cap(g, kMaxDenseOracleVertices, "dense_product_energy_oracle");
  if (s.size() != static_cast<std::size_t>(g.num_vertices())) throw std::invalid_argument("state size mismatch");
  using Complex = std::complex<double>;
  using CMatrix = Eigen::MatrixXcd;
  const Complex i1(0.0, 1.0);
  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix px(2, 2), py(2, 2), pz(2, 2);
  px << 0.0, 1.0, 1.0, 0.0;
  py << 0.0, -i1, i1, 0.0;
  pz << 1.0, 0.0, 0.0, -1.0;

  auto kron = [](const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };
  const int n = g.num_vertices();
  // Qubit u is bit u of the basis index, so it is the u-th factor from the right.
  auto embed = [&](const CMatrix& p, int site) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = n - 1; q >= 0; --q) out = kron(out, q == site ? p : id);
    return out;
  };

  CMatrix rho = CMatrix::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    const BlochVector& y = s[static_cast<std::size_t>(q)];
    rho = kron(rho, 0.5 * (id + y.x * px + y.y * py + y.z * pz));
  }

  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix h = CMatrix::Zero(dim, dim);
  for (const auto& e : g.edges()) {
    CMatrix term = CMatrix::Identity(dim, dim) - embed(px, e.u) * embed(px, e.v) - embed(py, e.u) * embed(py, e.v);
    if (model == Model::qmc) term -= embed(pz, e.u) * embed(pz, e.v);
    if (model == Model::mc) throw std::invalid_argument("dense oracle supports qmc and xx");
    h += 0.25 * term;
  }
  return (h * rho).trace().real();
}

}  // namespace thetaqmc
