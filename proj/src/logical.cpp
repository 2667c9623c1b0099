#include "spinwire/logical.hpp"

#include <cmath>
#include <numbers>

#include "spinwire/error.hpp"

namespace spinwire {

std::string_view to_string(LogicalAxis axis) {
  switch (axis) {
    case LogicalAxis::kX: return "x";
    case LogicalAxis::kY: return "y";
    case LogicalAxis::kZ: return "z";
    case LogicalAxis::kIdentity: return "identity";
  }
  return "?";
}

namespace {

void check_length(int n) {
  if (n < 4) throw Error(ErrorCode::kChainTooShort, "logical transport needs n >= 4");
}

struct Factor {
  double weight;
  char first;   // letter on the encoding spin (site 1, or n for targets)
  char second;  // letter on its neighbour (site 2, or n-1)
};

// xx encodes in {|01>, |10>}, dq in {|00>, |11>}.
std::vector<Factor> logical_template(Model model, LogicalAxis axis) {
  const bool dq = model == Model::kDQ;
  switch (axis) {
    case LogicalAxis::kX: return {{0.5, 'X', 'X'}, {dq ? -0.5 : 0.5, 'Y', 'Y'}};
    case LogicalAxis::kY: return {{0.5, 'Y', 'X'}, {dq ? 0.5 : -0.5, 'X', 'Y'}};
    case LogicalAxis::kZ: return {{0.5, 'Z', 'I'}, {dq ? 0.5 : -0.5, 'I', 'Z'}};
    case LogicalAxis::kIdentity: return {{0.5, 'I', 'I'}, {dq ? 0.5 : -0.5, 'Z', 'Z'}};
  }
  return {};
}

PauliSum place(int n, Model model, LogicalAxis axis, int first_site, int second_site) {
  PauliSum op(n);
  for (const auto& [weight, first, second] : logical_template(model, axis)) {
    std::vector<std::pair<int, char>> factors;
    if (first != 'I') factors.emplace_back(first_site, first);
    if (second != 'I') factors.emplace_back(second_site, second);
    op.add(weight, std::move(factors));
  }
  return op;
}

}  // namespace

LogicalBasis::LogicalBasis(Model model) : model_(model) {
  if (model == Model::kDipolar) {
    throw Error(ErrorCode::kUnsupportedModel, "logical encodings exist for xx and dq only");
  }
}

PauliSum LogicalBasis::source(int n, LogicalAxis axis) const {
  check_length(n);
  return place(n, model_, axis, 1, 2);
}

PauliSum LogicalBasis::target(int n, LogicalAxis axis) const {
  check_length(n);
  return place(n, model_, axis, n, n - 1);
}

LogicalBasis logical_basis(Model model) { return LogicalBasis(model); }

double LogicalCorrelations::fidelity() const {
  return (values[0] + values[1] + values[2] + values[3]) / 4.0;
}

LogicalCorrelations logical_correlations(const Propagator& prop, Model model,
                                         bool parity_correction) {
  const int n = prop.n();
  check_length(n);
  const LogicalBasis basis(model);
  LogicalCorrelations out;
  for (std::size_t i = 0; i < kLogicalAxes.size(); ++i) {
    const PauliSum source = basis.source(n, kLogicalAxes[i]);
    PauliSum target = basis.target(n, kLogicalAxes[i]);
    if (parity_correction) target = conjugate_by_x(target, {n - 1, n});
    out.values[i] = free_fermion_correlation(prop, model, source, target) / source.overlap(source);
  }
  return out;
}

LogicalCorrelations logical_correlations(const ChainSpec& spec, double t, Model model,
                                         bool parity_correction) {
  check_length(spec.n());
  return logical_correlations(propagate(spec, t), model, parity_correction);
}

double logical_transport_homogeneous(int n, double d, LogicalAxis axis, double t) {
  check_length(n);
  auto a = [&](int j, int l) { return homogeneous_amplitude(n, d, j, l, t); };
  switch (axis) {
    case LogicalAxis::kIdentity: {
      const Complex det = a(1, n - 1) * a(2, n) - a(1, n) * a(2, n - 1);
      return 0.5 * (1.0 + std::norm(det));
    }
    case LogicalAxis::kX:
    case LogicalAxis::kY: {
      // Double sum over mode pairs; x takes omega_h - omega_k, y takes
      // omega_h + omega_k and the sign (-1)^{n+1}.
      const bool y = axis == LogicalAxis::kY;
      const double unit = std::numbers::pi / (n + 1);
      Complex sum = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double kappa = unit * k;
        const double omega_k = 2.0 * d * std::cos(kappa);
        for (int h = 1; h <= n; ++h) {
          const double eta = unit * h;
          const double omega_h = 2.0 * d * std::cos(eta);
          const double bracket =
              std::sin(2.0 * eta) * std::sin(kappa) + std::sin(eta) * std::sin(2.0 * kappa);
          const double sign = (h + k) % 2 == 0 ? 1.0 : -1.0;
          sum += sign * bracket * bracket * std::polar(1.0, t * (y ? omega_h + omega_k : omega_h - omega_k));
        }
      }
      const double prefactor = 2.0 / ((n + 1.0) * (n + 1.0));
      return prefactor * (y && n % 2 == 0 ? -1.0 : 1.0) * sum.real();
    }
    case LogicalAxis::kZ:
      return 0.5 * (std::norm(a(1, n)) - 2.0 * std::norm(a(1, n - 1)) + std::norm(a(2, n - 1)));
  }
  return 0.0;
}

double logical_transport_engineered(int n, double d, LogicalAxis axis, double t) {
  check_length(n);
  if (!(d > 0.0)) throw Error(ErrorCode::kInvalidParameter, "d must be > 0");
  const double tau = normalized_time(n, d, t);
  const double s = std::sin(tau);
  const double c2 = std::cos(tau) * std::cos(tau);
  const double m = n - 1.0;
  switch (axis) {
    case LogicalAxis::kIdentity: return 0.5 * (1.0 + std::pow(s, 4 * (n - 2)));
    case LogicalAxis::kX: return std::pow(s, 2 * (n - 2));
    case LogicalAxis::kY: return std::pow(s, 2 * (n - 2)) * (1.0 - 2.0 * m * c2);
    case LogicalAxis::kZ: {
      const double bracket = m * c2 - 1.0;
      return 0.5 * (std::pow(s, 2 * (n - 3)) * bracket * bracket + std::pow(s, 2 * (n - 1)) -
                    2.0 * m * c2 * std::pow(s, 2 * (n - 2)));
    }
  }
  return 0.0;
}

double entanglement_fidelity(int n, double d, Family family, double t) {
  double sum = 0.0;
  for (LogicalAxis axis : kLogicalAxes) {
    switch (family) {
      case Family::kHomogeneous: sum += logical_transport_homogeneous(n, d, axis, t); break;
      case Family::kEngineered: sum += logical_transport_engineered(n, d, axis, t); break;
      default:
        throw Error(ErrorCode::kUnsupportedFamily,
                    "closed-form fidelity exists for homogeneous and engineered chains");
    }
  }
  return sum / 4.0;
}

bool dq_parity_correction(int n) {
  check_length(n);
  return n % 2 == 0;
}

LogicalTransportCurve logical_transport_curve(int n, double d, Family family,
                                              std::span<const double> times) {
  check_length(n);
  LogicalTransportCurve curve;
  curve.times.assign(times.begin(), times.end());
  for (auto& series : curve.values) series.reserve(times.size());
  curve.fidelity.reserve(times.size());
  for (double t : times) {
    double sum = 0.0;
    for (std::size_t i = 0; i < kLogicalAxes.size(); ++i) {
      double value = 0.0;
      switch (family) {
        case Family::kHomogeneous:
          value = logical_transport_homogeneous(n, d, kLogicalAxes[i], t);
          break;
        case Family::kEngineered:
          value = logical_transport_engineered(n, d, kLogicalAxes[i], t);
          break;
        default:
          throw Error(ErrorCode::kUnsupportedFamily,
                      "closed-form curves exist for homogeneous and engineered chains");
      }
      curve.values[i].push_back(value);
      sum += value;
    }
    curve.fidelity.push_back(sum / 4.0);
  }
  return curve;
}

}  // namespace spinwire
