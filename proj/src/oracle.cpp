#include "spinwire/oracle.hpp"

#include <cstdlib>
#include <random>
#include <string>

#include "spinwire/error.hpp"

namespace spinwire::oracle {

DenseOperator::DenseOperator(int n, Eigen::MatrixXcd entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || n > kHardMaxSites) {
    throw Error(ErrorCode::kSize, "dense operators support 1 <= n <= " +
                                      std::to_string(kHardMaxSites));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "dense operator is not 2^n x 2^n");
  }
}

DenseOperator DenseOperator::zero(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  return DenseOperator(n, Eigen::MatrixXcd::Zero(dim, dim));
}

DenseOperator DenseOperator::identity(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  return DenseOperator(n, Eigen::MatrixXcd::Identity(dim, dim));
}

namespace {

void check_same(const DenseOperator& a, const DenseOperator& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::kDimensionMismatch, "operators on different n");
}

}  // namespace

DenseOperator DenseOperator::operator+(const DenseOperator& other) const {
  check_same(*this, other);
  return DenseOperator(n_, entries_ + other.entries_);
}

DenseOperator DenseOperator::operator-(const DenseOperator& other) const {
  check_same(*this, other);
  return DenseOperator(n_, entries_ - other.entries_);
}

DenseOperator DenseOperator::operator*(const DenseOperator& other) const {
  check_same(*this, other);
  return DenseOperator(n_, entries_ * other.entries_);
}

DenseOperator DenseOperator::scaled(Complex factor) const {
  return DenseOperator(n_, entries_ * factor);
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(n_, entries_.adjoint()); }

OracleBudget OracleBudget::from_env() {
  OracleBudget budget;
  if (const char* value = std::getenv("SPINWIRE_ORACLE_MAX_N")) {
    char* end = nullptr;
    const long parsed = std::strtol(value, &end, 10);
    if (end == value || *end != '\0' || parsed < 2 || parsed > kHardMaxSites) {
      throw Error(ErrorCode::kInvalidParameter,
                  "SPINWIRE_ORACLE_MAX_N must be an integer in 2.." +
                      std::to_string(kHardMaxSites));
    }
    budget.max_n = static_cast<int>(parsed);
  }
  return budget;
}

void OracleBudget::check(int n) const {
  if (max_n < 2 || max_n > kHardMaxSites) {
    throw Error(ErrorCode::kInvalidParameter, "oracle budget must lie in 2.." +
                                                  std::to_string(kHardMaxSites));
  }
  if (n > max_n) {
    throw Error(ErrorCode::kSize, "n = " + std::to_string(n) + " exceeds the oracle budget of " +
                                      std::to_string(max_n));
  }
}

namespace {

// Accumulates weight * P into `out` without materializing P: a Pauli string
// is a signed permutation, P|b> = phase(b) |b ^ flip>.
void accumulate_pauli(Eigen::MatrixXcd& out, std::string_view letters, Complex weight) {
  const auto n = static_cast<int>(letters.size());
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::uint64_t flip = 0;
  std::uint64_t z_mask = 0;
  std::uint64_t y_mask = 0;
  int y_count = 0;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
    switch (letters[static_cast<std::size_t>(j)]) {
      case 'I': break;
      case 'X': flip |= bit; break;
      case 'Y':
        flip |= bit;
        y_mask |= bit;
        ++y_count;
        break;
      case 'Z': z_mask |= bit; break;
      default: throw Error(ErrorCode::kParse, "bad Pauli letter");
    }
  }
  // Y|0> = i|1>, Y|1> = -i|0>: overall i^{#Y} (-1)^{#Y on set bits}.
  static const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex base = weight * kIPowers[y_count % 4];
  for (std::uint64_t in = 0; in < dim; ++in) {
    const int parity = __builtin_popcountll(in & (z_mask | y_mask)) & 1;
    out(static_cast<Eigen::Index>(in ^ flip), static_cast<Eigen::Index>(in)) +=
        parity ? -base : base;
  }
}

}  // namespace

DenseOperator pauli_string_to_dense(std::string_view letters) {
  validate_pauli_string(letters);
  const auto n = static_cast<int>(letters.size());
  DenseOperator zero = DenseOperator::zero(n);
  Eigen::MatrixXcd m = zero.entries();
  accumulate_pauli(m, letters, 1.0);
  return DenseOperator(n, std::move(m));
}

DenseOperator to_dense(const PauliSum& op) {
  const Eigen::Index dim = Eigen::Index{1} << op.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [letters, w] : op.terms()) accumulate_pauli(m, letters, w);
  return DenseOperator(op.n(), std::move(m));
}

DenseOperator total_z(int n) {
  PauliSum z(n);
  for (int j = 1; j <= n; ++j) z.add(1.0, {{j, 'Z'}});
  return to_dense(z);
}

DenseOperator staggered_z(int n) {
  PauliSum z(n);
  for (int j = 1; j <= n; ++j) z.add(j % 2 == 1 ? 1.0 : -1.0, {{j, 'Z'}});
  return to_dense(z);
}

DenseOperator build_hamiltonian(const ChainSpec& spec, const OracleBudget& budget) {
  const int n = spec.n();
  budget.check(n);
  PauliSum h(n);
  switch (spec.model()) {
    case Model::kXX:
    case Model::kDQ: {
      if (spec.is_long_range()) {
        throw Error(ErrorCode::kUnsupportedModel, "xx/dq chains are nearest-neighbour");
      }
      const double yy_sign = spec.model() == Model::kXX ? 1.0 : -1.0;
      for (int j = 1; j < n; ++j) {
        const double d = spec.couplings()[static_cast<std::size_t>(j - 1)];
        h.add(d / 2.0, {{j, 'X'}, {j + 1, 'X'}});
        h.add(yy_sign * d / 2.0, {{j, 'Y'}, {j + 1, 'Y'}});
      }
      break;
    }
    case Model::kDipolar:
      for (int j = 1; j <= n; ++j) {
        for (int l = j + 1; l <= n; ++l) {
          const double d = spec.pair_coupling(j, l);
          if (d == 0.0) continue;
          h.add(d, {{j, 'Z'}, {l, 'Z'}});
          h.add(-d / 2.0, {{j, 'X'}, {l, 'X'}});
          h.add(-d / 2.0, {{j, 'Y'}, {l, 'Y'}});
        }
      }
      break;
  }
  return to_dense(h);
}

Evolver::Evolver(const DenseOperator& hamiltonian) : n_(hamiltonian.n()) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.entries());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidParameter, "Hermitian eigensolver did not converge");
  }
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

Eigen::MatrixXcd Evolver::unitary(double t) const {
  Eigen::VectorXcd phases(energies_.size());
  for (Eigen::Index k = 0; k < energies_.size(); ++k) phases(k) = std::polar(1.0, -energies_(k) * t);
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

DenseOperator Evolver::evolve(const DenseOperator& rho, double t) const {
  if (rho.n() != n_) throw Error(ErrorCode::kDimensionMismatch, "state and Hamiltonian differ in n");
  Eigen::MatrixXcd eigen_basis = vectors_.adjoint() * rho.entries() * vectors_;
  const Eigen::Index dim = eigen_basis.rows();
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (Eigen::Index a = 0; a < dim; ++a) {
      eigen_basis(a, b) *= std::polar(1.0, -(energies_(a) - energies_(b)) * t);
    }
  }
  return DenseOperator(n_, vectors_ * eigen_basis * vectors_.adjoint());
}

DenseOperator evolve_deviation(const DenseOperator& hamiltonian, const DenseOperator& rho,
                               double t) {
  if (hamiltonian.n() != rho.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and Hamiltonian differ in n");
  }
  return Evolver(hamiltonian).evolve(rho, t);
}

Complex trace_overlap(const DenseOperator& a, const DenseOperator& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::kDimensionMismatch, "operators on different n");
  // Tr[a b] = sum_{ij} a_ij b_ji
  const Complex trace = (a.entries().array() * b.entries().transpose().array()).sum();
  return trace / static_cast<double>(a.dim());
}

double max_abs(const DenseOperator& op) { return op.entries().cwiseAbs().maxCoeff(); }

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  return a * b - b * a;
}

double similarity_check(int n, std::uint64_t seed, const OracleBudget& budget) {
  budget.check(n);
  if (n < 2) throw Error(ErrorCode::kInvalidDimension, "similarity check needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  std::vector<double> couplings(static_cast<std::size_t>(n - 1));
  for (double& c : couplings) c = draw(rng);
  const ChainSpec xx(n, couplings, Model::kXX);
  const DenseOperator h_xx = build_hamiltonian(xx, budget);
  const DenseOperator h_dq = build_hamiltonian(xx.with_model(Model::kDQ), budget);
  std::string odd_x(static_cast<std::size_t>(n), 'I');
  for (int j = 0; j < n; j += 2) odd_x[static_cast<std::size_t>(j)] = 'X';
  const DenseOperator s = pauli_string_to_dense(odd_x);
  return max_abs(s * h_xx * s - h_dq);
}

}  // namespace spinwire::oracle
