#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "spinwire/chain.hpp"
#include "spinwire/pauli.hpp"
#include "spinwire/propagator.hpp"

namespace spinwire {

enum class LogicalAxis { kX, kY, kZ, kIdentity };
inline constexpr std::array<LogicalAxis, 4> kLogicalAxes = {LogicalAxis::kX, LogicalAxis::kY,
                                                            LogicalAxis::kZ,
                                                            LogicalAxis::kIdentity};

std::string_view to_string(LogicalAxis axis);

// Two-spin logical observables. Sources sit on sites (1, 2); targets on the
// mirrored pair with the template's first site mapped to n and the second to
// n-1, e.g. the xx y target is (Y_n X_{n-1} - X_n Y_{n-1}) / 2.
//   xx, code space {|01>, |10>}: (XX + YY)/2, (YX - XY)/2, (ZI - IZ)/2, (II - ZZ)/2
//   dq, code space {|00>, |11>}: (XX - YY)/2, (YX + XY)/2, (ZI + IZ)/2, (II + ZZ)/2
class LogicalBasis {
 public:
  explicit LogicalBasis(Model model);

  Model model() const { return model_; }
  PauliSum source(int n, LogicalAxis axis) const;
  PauliSum target(int n, LogicalAxis axis) const;

 private:
  Model model_;
};

LogicalBasis logical_basis(Model model);

// C_alpha(t) = Tr[U O_alpha U^dagger O'_alpha] / Tr[O_alpha^2]; all four
// observables have Tr[O^2] / 2^n = 1/2, so perfect transport reads exactly 1.
struct LogicalCorrelations {
  std::array<double, 4> values{};  // indexed as kLogicalAxes

  double operator[](LogicalAxis axis) const { return values[static_cast<std::size_t>(axis)]; }
  double fidelity() const;
};

// Free-fermion evaluation for any nearest-neighbour chain. With
// `parity_correction` the targets are conjugated by X_{n-1} X_n, the pi
// rotation about x on the final pair.
LogicalCorrelations logical_correlations(const Propagator& prop, Model model,
                                         bool parity_correction = false);
LogicalCorrelations logical_correlations(const ChainSpec& spec, double t, Model model,
                                         bool parity_correction = false);

// Closed forms in the homogeneous sine-mode amplitudes.
double logical_transport_homogeneous(int n, double d, LogicalAxis axis, double t);

// Closed forms of the engineered chain in tau = 2 d t / n.
double logical_transport_engineered(int n, double d, LogicalAxis axis, double t);

double entanglement_fidelity(int n, double d, Family family, double t);

// True when even n needs the collective pi-x rotation for perfect dq transport.
bool dq_parity_correction(int n);

struct LogicalTransportCurve {
  std::vector<double> times;
  std::array<std::vector<double>, 4> values;  // indexed as kLogicalAxes
  std::vector<double> fidelity;
};

LogicalTransportCurve logical_transport_curve(int n, double d, Family family,
                                              std::span<const double> times);

}  // namespace spinwire
