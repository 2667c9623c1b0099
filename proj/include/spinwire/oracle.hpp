#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "spinwire/chain.hpp"
#include "spinwire/pauli.hpp"

namespace spinwire::oracle {

using Complex = std::complex<double>;

// Site 1 is the most significant bit of the basis index; bit value 1 is the
// excitation (sigma_z = -1).
class DenseOperator {
 public:
  DenseOperator(int n, Eigen::MatrixXcd entries);
  static DenseOperator zero(int n);
  static DenseOperator identity(int n);

  int n() const { return n_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  DenseOperator operator+(const DenseOperator& other) const;
  DenseOperator operator-(const DenseOperator& other) const;
  DenseOperator operator*(const DenseOperator& other) const;
  DenseOperator scaled(Complex factor) const;
  DenseOperator adjoint() const;

 private:
  int n_;
  Eigen::MatrixXcd entries_;
};

inline constexpr int kHardMaxSites = 12;
inline constexpr int kDefaultMaxSites = 10;

struct OracleBudget {
  int max_n = kDefaultMaxSites;

  // Reads SPINWIRE_ORACLE_MAX_N when set.
  static OracleBudget from_env();
  void check(int n) const;
};

DenseOperator pauli_string_to_dense(std::string_view letters);
DenseOperator to_dense(const PauliSum& op);

// Z = sum_j Z_j and the staggered Z~ = sum_j (-1)^{j+1} Z_j.
DenseOperator total_z(int n);
DenseOperator staggered_z(int n);

DenseOperator build_hamiltonian(const ChainSpec& spec,
                                const OracleBudget& budget = OracleBudget::from_env());

// Caches the Hermitian eigendecomposition of H so a time series needs only
// two basis changes per step.
class Evolver {
 public:
  explicit Evolver(const DenseOperator& hamiltonian);

  int n() const { return n_; }
  const Eigen::VectorXd& energies() const { return energies_; }

  Eigen::MatrixXcd unitary(double t) const;
  // U rho U^dagger with U = exp(-i H t).
  DenseOperator evolve(const DenseOperator& rho, double t) const;

 private:
  int n_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd vectors_;
};

DenseOperator evolve_deviation(const DenseOperator& hamiltonian, const DenseOperator& rho,
                               double t);

// Tr[a b] / 2^n.
Complex trace_overlap(const DenseOperator& a, const DenseOperator& b);

double max_abs(const DenseOperator& op);
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

// Max-norm of S H_xx S - H_dq for random nearest-neighbour couplings, with
// S the product of sigma_x over odd sites.
double similarity_check(int n, std::uint64_t seed,
                        const OracleBudget& budget = OracleBudget::from_env());

}  // namespace spinwire::oracle
