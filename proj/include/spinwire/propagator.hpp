#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinwire/chain.hpp"
#include "spinwire/pauli.hpp"

namespace spinwire {

using Complex = std::complex<double>;

// Eigen-decomposition of the single-particle hopping matrix M (zero diagonal,
// M_{j,j+1} = d_j). Column k of `modes` is the mode with energy omegas[k];
// omegas ascend and each column's first non-negligible entry is positive.
struct SpectralDecomposition {
  Eigen::VectorXd omegas;
  Eigen::MatrixXd modes;

  int n() const { return static_cast<int>(omegas.size()); }
};

// Single-excitation propagator A(t) = exp(-i M t); entry (j-1, l-1) is the
// amplitude <l| U(t) |j>.
class Propagator {
 public:
  Propagator(double time, Eigen::MatrixXcd amplitudes);

  double time() const { return time_; }
  int n() const { return static_cast<int>(amplitudes_.rows()); }
  const Eigen::MatrixXcd& amplitudes() const { return amplitudes_; }

  // 1-based access.
  Complex operator()(int j, int l) const;
  double probability(int j, int l) const { return std::norm((*this)(j, l)); }

 private:
  double time_;
  Eigen::MatrixXcd amplitudes_;
};

SpectralDecomposition spectral_decompose(const ChainSpec& spec);
Propagator propagate(const SpectralDecomposition& decomp, double t);
Propagator propagate(const ChainSpec& spec, double t);

// Closed-form sine-mode amplitude of the homogeneous chain.
Complex homogeneous_amplitude(int n, double d, int j, int l, double t);

// Amplitude of the engineered chain built from the Jacobi-polynomial mode
// coefficients; exact integer arithmetic limits it to n <= kMaxJacobiChain.
inline constexpr int kMaxJacobiChain = 48;
Complex engineered_amplitude(int n, double d, int j, int l, double t);

// Mode coefficient alpha_j(k) of the engineered chain, j, k in 1..n. Mode k has
// energy (2d/n)(2k - (n+1)), ascending like spectral_decompose(); the classical
// Jacobi-polynomial expression labels the same mode n+1-k.
double engineered_mode_coefficient(int n, int j, int k);

// ---- many-body layer -------------------------------------------------------

// Determinant of [A_{p_a r_b}]: amplitude <r| U(t) |p> between excitation
// configurations given as ascending 1-based site lists.
Complex slater_amplitude(const Propagator& prop, const std::vector<int>& sources,
                         const std::vector<int>& targets);

// Operator written in the Z basis: coefficient of |ket><bra| keyed by
// (ket, bra) bitstrings of '0'/'1', character i for site i+1, '1' = excitation.
using BasisCoefficients = std::map<std::pair<std::string, std::string>, Complex>;

inline constexpr int kMaxOverlapChain = 14;

// Tr[U a U^dagger b] evaluated through Slater determinants of A(t).
Complex mixed_state_overlap(const Propagator& prop, const BasisCoefficients& a,
                            const BasisCoefficients& b);

// ---- quadratic (free-fermion) layer -----------------------------------------

// Tr[U P U^dagger Q] / 2^n for Pauli sums P, Q evolved by the nearest-neighbour
// xx or dq Hamiltonian whose single-particle propagator is `prop`. Pauli
// strings map to Majorana monomials through the Jordan-Wigner string, so the
// infinite-temperature contraction reduces to a determinant of the Majorana
// rotation.
double free_fermion_correlation(const Propagator& prop, Model model, const PauliSum& p,
                                const PauliSum& q);

// Real orthogonal 2n x 2n matrix R with U gamma_a U^dagger = sum_b R_ab gamma_b
// under xx evolution (gamma_{2j-1} = string * X_j, gamma_{2j} = string * Y_j).
Eigen::MatrixXd majorana_rotation(const Propagator& prop);

// Normalized polarization correlation Tr[dz_j(t) dz_l] / 2^n.
double polarization_correlation(const Propagator& prop, int j, int l, Model model);
double polarization_correlation(const ChainSpec& spec, int j, int l, double t, Model model);

enum class StateKind { kZEnds, kYLogical, kXLogical, kFullZ };

// Tr[rho(t) rho(0)] / Tr[rho(0)^2] for the end-polarized or y-logical state.
double end_autocorrelation(const Propagator& prop, StateKind initial, Model model);
double end_autocorrelation(const ChainSpec& spec, double t, StateKind initial, Model model);

}  // namespace spinwire
