#include "spinwire/mqc.hpp"

#include <cmath>
#include <numbers>

#include "spinwire/error.hpp"

namespace spinwire {

double MqcSpectrum::at(int order) const {
  auto it = intensities.find(order);
  return it == intensities.end() ? 0.0 : it->second;
}

double MqcSpectrum::total() const {
  double sum = 0.0;
  for (const auto& [order, value] : intensities) sum += value;
  return sum;
}

double MqcSpectrum::normalized(int order) const {
  return std::abs(normalization) > 1e-12 ? at(order) / normalization : at(order);
}

namespace {

struct OrderConstants {
  double alpha;
  double phi;
};

OrderConstants order_constants(int order) {
  if (order == 0) return {2.0, 0.0};
  if (order == 2 || order == -2) return {1.0, std::numbers::pi / 2.0};
  throw Error(ErrorCode::kInvalidOrder, "analytic MQC supports orders 0 and +-2, got " +
                                            std::to_string(order));
}

}  // namespace

double mqc_z_analytic(int n, double d, int order, double t) {
  if (n < 2) throw Error(ErrorCode::kChainTooShort, "MQC needs n >= 2");
  const auto [alpha, phi] = order_constants(order);
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double kappa = std::numbers::pi * k / (n + 1);
    const double omega = 2.0 * d * std::cos(kappa);
    const double c = std::cos(2.0 * omega * t + phi);
    sum += std::sin(kappa) * std::sin(kappa) * c * c;
  }
  return alpha / (n + 1) * sum;
}

double mqc_ylog_analytic(int n, double d, int order, double t) {
  if (n < 4) throw Error(ErrorCode::kChainTooShort, "logical MQC needs n >= 4");
  const auto [alpha, phi] = order_constants(order);
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double kappa = std::numbers::pi * k / (n + 1);
    const double omega = 2.0 * d * std::cos(kappa);
    sum += std::sin(kappa) * std::sin(2.0 * kappa) * std::sin(4.0 * omega * t + 2.0 * phi);
  }
  return alpha / (n + 1) * sum;
}

double mqc_xlog_analytic(int n, double /*d*/, int order, double /*t*/) {
  if (n < 4) throw Error(ErrorCode::kChainTooShort, "logical MQC needs n >= 4");
  order_constants(order);
  return 0.0;
}

MqcSpectrum mqc_analytic(int n, double d, StateKind initial, double t) {
  double (*form)(int, double, int, double) = nullptr;
  switch (initial) {
    case StateKind::kZEnds: form = mqc_z_analytic; break;
    case StateKind::kYLogical: form = mqc_ylog_analytic; break;
    case StateKind::kXLogical: form = mqc_xlog_analytic; break;
    default:
      throw Error(ErrorCode::kInvalidParameter,
                  "no closed form for initial state " + std::string(to_string(initial)));
  }
  MqcSpectrum out;
  out.time = t;
  for (int q : {-2, 0, 2}) {
    out.intensities[q] = form(n, d, q, t);
    out.normalization += form(n, d, q, 0.0);
  }
  return out;
}

MqcOracle::MqcOracle(const ChainSpec& spec, const DeviationState& initial,
                     const oracle::OracleBudget& budget)
    : n_(spec.n()),
      normalization_(0.0),
      initial_(oracle::to_dense(initial.terms())),
      z_(oracle::total_z(spec.n())) {
  if (initial.n() != spec.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "initial state and chain differ in n");
  }
  evolver_ = std::make_shared<const oracle::Evolver>(oracle::build_hamiltonian(spec, budget));
  normalization_ = oracle::trace_overlap(initial_, z_).real();
}

MqcSpectrum MqcOracle::spectrum(double t, int phase_steps) const {
  const oracle::DenseOperator rho = evolver_->evolve(initial_, t);
  const oracle::DenseOperator observable = evolver_->evolve(z_, t);
  const Eigen::Index dim = rho.dim();

  // Coherence order of |a><b| is (z_a - z_b)/2 = (#excitations in b) - (#in a).
  auto order_of = [](Eigen::Index a, Eigen::Index b) {
    return __builtin_popcountll(static_cast<unsigned long long>(b)) -
           __builtin_popcountll(static_cast<unsigned long long>(a));
  };
  int max_order = 0;
  const double cutoff = 1e-12 * std::max(1.0, oracle::max_abs(rho));
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (Eigen::Index a = 0; a < dim; ++a) {
      if (std::abs(rho.entries()(a, b)) > cutoff) max_order = std::max(max_order, std::abs(order_of(a, b)));
    }
  }
  if (phase_steps <= 2 * max_order) {
    throw Error(ErrorCode::kAliasing, "phase_steps = " + std::to_string(phase_steps) +
                                          " cannot resolve coherence order " +
                                          std::to_string(max_order));
  }

  // R_phi is diagonal, so R rho R^dagger multiplies |a><b| by exp(-i phi q_ab).
  std::vector<Complex> signal(static_cast<std::size_t>(phase_steps));
  for (int m = 0; m < phase_steps; ++m) {
    const double phi = 2.0 * std::numbers::pi * m / phase_steps;
    Complex s = 0.0;
    for (Eigen::Index b = 0; b < dim; ++b) {
      for (Eigen::Index a = 0; a < dim; ++a) {
        const Complex rotated = rho.entries()(a, b) * std::polar(1.0, -order_of(a, b) * phi);
        s += rotated * observable.entries()(b, a);
      }
    }
    signal[static_cast<std::size_t>(m)] = s / static_cast<double>(dim);
  }

  MqcSpectrum out;
  out.time = t;
  out.normalization = normalization_;
  const int resolved = std::min(n_, (phase_steps - 1) / 2);
  for (int q = -resolved; q <= resolved; ++q) {
    Complex j = 0.0;
    for (int m = 0; m < phase_steps; ++m) {
      const double phi = 2.0 * std::numbers::pi * m / phase_steps;
      j += signal[static_cast<std::size_t>(m)] * std::polar(1.0, q * phi);
    }
    j /= static_cast<double>(phase_steps);
    out.intensities[q] = j.real();
    out.imaginary_residue = std::max(out.imaginary_residue, std::abs(j.imag()));
  }
  return out;
}

MqcSpectrum mqc_oracle(const ChainSpec& spec, const DeviationState& initial, double t,
                       int phase_steps) {
  return MqcOracle(spec, initial).spectrum(t, phase_steps);
}

}  // namespace spinwire
