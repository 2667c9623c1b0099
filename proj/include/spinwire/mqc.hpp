#pragma once

#include <map>
#include <memory>

#include "spinwire/chain.hpp"
#include "spinwire/oracle.hpp"
#include "spinwire/states.hpp"

namespace spinwire {

// Multiple-quantum-coherence intensities J^q(t), q in -n..n.
struct MqcSpectrum {
  double time = 0.0;
  std::map<int, double> intensities;
  // Sum_q J^q(0) = Tr[rho(0) Z] / 2^n.
  double normalization = 0.0;
  // Largest |Im J^q| discarded when the phase-cycled signal was transformed.
  double imaginary_residue = 0.0;

  double at(int order) const;
  double total() const;
  // J^q / normalization; states with a vanishing sum (the logical ones) are
  // returned unscaled.
  double normalized(int order) const;
};

inline constexpr int kDefaultPhaseSteps = 8;

// Closed forms for homogeneous nearest-neighbour dq evolution, kappa = pi k/(n+1),
// omega_k = 2 d cos(kappa); order 0 and 2 only (J^{-2} = J^{2}).
double mqc_z_analytic(int n, double d, int order, double t);
double mqc_ylog_analytic(int n, double d, int order, double t);
double mqc_xlog_analytic(int n, double d, int order, double t);

// Orders -2, 0, 2 of the closed forms above for z_ends, y_logical or x_logical.
MqcSpectrum mqc_analytic(int n, double d, StateKind initial, double t);

// Phase-cycled MQC signal from the dense oracle: S(phi) = Tr[R_phi rho(t)
// R_phi^dagger U Z U^dagger] / 2^n with R_phi = exp(-i phi Z / 2), followed by a
// discrete Fourier transform over phi_m = 2 pi m / phase_steps.
class MqcOracle {
 public:
  MqcOracle(const ChainSpec& spec, const DeviationState& initial,
            const oracle::OracleBudget& budget = oracle::OracleBudget::from_env());

  int n() const { return n_; }
  double normalization() const { return normalization_; }
  MqcSpectrum spectrum(double t, int phase_steps = kDefaultPhaseSteps) const;

 private:
  int n_;
  double normalization_;
  std::shared_ptr<const oracle::Evolver> evolver_;
  oracle::DenseOperator initial_;
  oracle::DenseOperator z_;
};

MqcSpectrum mqc_oracle(const ChainSpec& spec, const DeviationState& initial, double t,
                       int phase_steps = kDefaultPhaseSteps);

}  // namespace spinwire
