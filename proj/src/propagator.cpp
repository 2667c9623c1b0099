#include "spinwire/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinwire/error.hpp"
#include "spinwire/states.hpp"

namespace spinwire {

namespace {

void check_site(int n, int j) {
  if (j < 1 || j > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "site " + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
}

void check_nearest_neighbor(const ChainSpec& spec) {
  if (spec.is_long_range() || spec.model() == Model::kDipolar) {
    throw Error(ErrorCode::kUnsupportedModel,
                "dipolar chains are not free-fermion; use the dense oracle");
  }
}

}  // namespace

Propagator::Propagator(double time, Eigen::MatrixXcd amplitudes)
    : time_(time), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.rows() != amplitudes_.cols() || amplitudes_.rows() < 1) {
    throw Error(ErrorCode::kDimensionMismatch, "propagator must be square and non-empty");
  }
}

Complex Propagator::operator()(int j, int l) const {
  check_site(n(), j);
  check_site(n(), l);
  return amplitudes_(j - 1, l - 1);
}

SpectralDecomposition spectral_decompose(const ChainSpec& spec) {
  check_nearest_neighbor(spec);
  const int n = spec.n();
  SpectralDecomposition out;
  if (n == 1) {
    out.omegas = Eigen::VectorXd::Zero(1);
    out.modes = Eigen::MatrixXd::Identity(1, 1);
    return out;
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int j = 0; j + 1 < n; ++j) sub(j) = spec.couplings()[static_cast<std::size_t>(j)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidParameter, "tridiagonal eigensolver did not converge");
  }
  out.omegas = solver.eigenvalues();
  out.modes = solver.eigenvectors();
  for (int k = 0; k < n; ++k) {
    auto column = out.modes.col(k);
    const double cutoff = 1e-12 * column.cwiseAbs().maxCoeff();
    for (int j = 0; j < n; ++j) {
      if (std::abs(column(j)) > cutoff) {
        if (column(j) < 0.0) column = -column;
        break;
      }
    }
  }
  return out;
}

Propagator propagate(const SpectralDecomposition& decomp, double t) {
  if (!std::isfinite(t)) throw Error(ErrorCode::kInvalidParameter, "time must be finite");
  const int n = decomp.n();
  Eigen::VectorXcd phases(n);
  for (int k = 0; k < n; ++k) phases(k) = std::polar(1.0, -decomp.omegas(k) * t);
  // Only the upper triangle is summed; mirroring keeps A exactly symmetric.
  Eigen::MatrixXcd a(n, n);
  for (int j = 0; j < n; ++j) {
    for (int l = j; l < n; ++l) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k) sum += decomp.modes(j, k) * decomp.modes(l, k) * phases(k);
      a(j, l) = sum;
      a(l, j) = sum;
    }
  }
  return Propagator(t, std::move(a));
}

Propagator propagate(const ChainSpec& spec, double t) {
  return propagate(spectral_decompose(spec), t);
}

Complex homogeneous_amplitude(int n, double d, int j, int l, double t) {
  if (n < 1) throw Error(ErrorCode::kInvalidDimension, "n must be >= 1");
  check_site(n, j);
  check_site(n, l);
  Complex sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double kappa = std::numbers::pi * k / (n + 1);
    const double omega = 2.0 * d * std::cos(kappa);
    sum += std::sin(kappa * j) * std::sin(kappa * l) * std::polar(1.0, -omega * t);
  }
  return sum * (2.0 / (n + 1));
}

namespace {

__int128 binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  __int128 result = 1;
  for (int i = 1; i <= bottom; ++i) result = result * (top - bottom + i) / i;
  return result;
}

}  // namespace

double engineered_mode_coefficient(int n, int j, int k) {
  if (n < 1 || n > kMaxJacobiChain) {
    throw Error(ErrorCode::kSize, "Jacobi mode coefficients need 1 <= n <= " +
                                      std::to_string(kMaxJacobiChain));
  }
  check_site(n, j);
  check_site(n, k);
  k = n + 1 - k;
  // 2^{(n+1)/2 - j} sqrt(k/j C(n,k)/C(n,j)) P_{n-j}^{(j-k, j+k-n-1)}(0); at x = 0
  // the Jacobi polynomial is 2^{-(n-j)} sum_s (-1)^s C(n-k, n-j-s) C(k-1, s).
  __int128 sum = 0;
  const int degree = n - j;
  for (int s = 0; s <= degree; ++s) {
    const __int128 term = binomial(n - k, degree - s) * binomial(k - 1, s);
    sum += (s % 2 == 0) ? term : -term;
  }
  const long double log_ratio = std::lgamma(static_cast<long double>(j)) +
                                std::lgamma(static_cast<long double>(n - j + 1)) -
                                std::lgamma(static_cast<long double>(k)) -
                                std::lgamma(static_cast<long double>(n - k + 1));
  const long double scale = std::exp(0.5L * log_ratio - 0.5L * (n - 1) * std::log(2.0L));
  return static_cast<double>(scale * static_cast<long double>(sum));
}

Complex engineered_amplitude(int n, double d, int j, int l, double t) {
  if (n < 1) throw Error(ErrorCode::kInvalidDimension, "n must be >= 1");
  check_site(n, j);
  check_site(n, l);
  Complex sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double omega = 2.0 * d / n * (2.0 * k - (n + 1));
    sum += engineered_mode_coefficient(n, j, k) * engineered_mode_coefficient(n, l, k) *
           std::polar(1.0, -omega * t);
  }
  return sum;
}

// ---- many-body layer -------------------------------------------------------

namespace {

void check_configuration(int n, const std::vector<int>& sites) {
  for (std::size_t i = 0; i < sites.size(); ++i) {
    check_site(n, sites[i]);
    if (i > 0 && sites[i] <= sites[i - 1]) {
      throw Error(ErrorCode::kInvalidConfiguration,
                  "configuration must list distinct sites in ascending order");
    }
  }
}

Complex determinant_of(const Propagator& prop, const std::vector<int>& sources,
                       const std::vector<int>& targets) {
  const auto m = static_cast<Eigen::Index>(sources.size());
  if (m == 0) return 1.0;
  Eigen::MatrixXcd block(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      block(a, b) = prop.amplitudes()(sources[static_cast<std::size_t>(a)] - 1,
                                      targets[static_cast<std::size_t>(b)] - 1);
    }
  }
  if (m == 1) return block(0, 0);
  return block.partialPivLu().determinant();
}

std::vector<int> occupied_sites(const std::string& bits, int n) {
  if (bits.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "bitstring '" + bits + "' does not have length " + std::to_string(n));
  }
  std::vector<int> sites;
  for (int j = 0; j < n; ++j) {
    const char c = bits[static_cast<std::size_t>(j)];
    if (c == '1') {
      sites.push_back(j + 1);
    } else if (c != '0') {
      throw Error(ErrorCode::kParse, "bitstrings use '0' and '1' only");
    }
  }
  return sites;
}

}  // namespace

Complex slater_amplitude(const Propagator& prop, const std::vector<int>& sources,
                         const std::vector<int>& targets) {
  if (sources.size() != targets.size() || sources.empty()) {
    throw Error(ErrorCode::kArity, "source and target configurations need equal, nonzero size");
  }
  check_configuration(prop.n(), sources);
  check_configuration(prop.n(), targets);
  return determinant_of(prop, sources, targets);
}

Complex mixed_state_overlap(const Propagator& prop, const BasisCoefficients& a,
                            const BasisCoefficients& b) {
  const int n = prop.n();
  if (n > kMaxOverlapChain) {
    throw Error(ErrorCode::kSize, "mixed_state_overlap supports n <= " +
                                      std::to_string(kMaxOverlapChain));
  }
  struct Entry {
    std::vector<int> ket;
    std::vector<int> bra;
    Complex weight;
  };
  auto unpack = [n](const BasisCoefficients& coefficients) {
    std::vector<Entry> entries;
    entries.reserve(coefficients.size());
    for (const auto& [key, weight] : coefficients) {
      entries.push_back({occupied_sites(key.first, n), occupied_sites(key.second, n), weight});
    }
    return entries;
  };
  const auto source = unpack(a);
  const auto target = unpack(b);

  std::map<std::pair<std::vector<int>, std::vector<int>>, Complex> cache;
  auto amplitude = [&](const std::vector<int>& from, const std::vector<int>& to) {
    auto key = std::make_pair(from, to);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Complex value = determinant_of(prop, from, to);
    cache.emplace(std::move(key), value);
    return value;
  };

  // U|p><q|U^dagger = sum A_{p r} A*_{q s} |r><s|, and Tr[|r><s| b] = b_{s r}.
  Complex total = 0.0;
  for (const auto& [p, q, weight_a] : source) {
    for (const auto& [s, r, weight_b] : target) {
      if (p.size() != r.size() || q.size() != s.size()) continue;
      total += weight_a * weight_b * amplitude(p, r) * std::conj(amplitude(q, s));
    }
  }
  return total;
}

// ---- quadratic (free-fermion) layer -----------------------------------------

namespace {

// Product of Majorana operators, kept in ascending mode order (0-based modes).
struct MajoranaMonomial {
  Complex phase = 1.0;
  std::vector<int> modes;

  // Right-multiplies by gamma_mode using gamma_a gamma_b = -gamma_b gamma_a
  // (a != b) and gamma_a^2 = 1.
  void multiply(int mode) {
    auto it = std::lower_bound(modes.begin(), modes.end(), mode);
    const auto larger = std::distance(it, modes.end());
    if (it != modes.end() && *it == mode) {
      if ((larger - 1) % 2 != 0) phase = -phase;
      modes.erase(it);
    } else {
      if (larger % 2 != 0) phase = -phase;
      modes.insert(it, mode);
    }
  }
};

MajoranaMonomial to_majorana(const std::string& letters) {
  // X_j = S_j gamma_{2j-1}, Y_j = S_j gamma_{2j}, Z_j = -i gamma_{2j-1} gamma_{2j},
  // with the Jordan-Wigner string S_j = prod_{k<j} Z_k.
  MajoranaMonomial m;
  const auto n = static_cast<int>(letters.size());
  for (int j = 0; j < n; ++j) {
    const char c = letters[static_cast<std::size_t>(j)];
    if (c == 'I') continue;
    if (c == 'Z') {
      m.phase *= Complex(0.0, -1.0);
      m.multiply(2 * j);
      m.multiply(2 * j + 1);
      continue;
    }
    for (int k = 0; k < j; ++k) {
      m.phase *= Complex(0.0, -1.0);
      m.multiply(2 * k);
      m.multiply(2 * k + 1);
    }
    m.multiply(c == 'X' ? 2 * j : 2 * j + 1);
  }
  return m;
}

}  // namespace

Eigen::MatrixXd majorana_rotation(const Propagator& prop) {
  const int n = prop.n();
  const Eigen::MatrixXcd& a = prop.amplitudes();
  Eigen::MatrixXd r(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      const double re = a(j, l).real();
      const double im = a(j, l).imag();
      r(2 * j, 2 * l) = re;
      r(2 * j, 2 * l + 1) = im;
      r(2 * j + 1, 2 * l) = -im;
      r(2 * j + 1, 2 * l + 1) = re;
    }
  }
  return r;
}

double free_fermion_correlation(const Propagator& prop, Model model, const PauliSum& p,
                                const PauliSum& q) {
  if (model == Model::kDipolar) {
    throw Error(ErrorCode::kUnsupportedModel, "dipolar evolution is not free-fermion");
  }
  if (p.n() != prop.n() || q.n() != prop.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "operator size differs from the propagator");
  }
  // U_dq = S U_xx S with S = prod_odd X, so dq correlations are xx correlations
  // of the conjugated operators.
  const PauliSum lhs = model == Model::kDQ ? conjugate_odd_sites(p) : p;
  const PauliSum rhs = model == Model::kDQ ? conjugate_odd_sites(q) : q;

  const Eigen::MatrixXd r = majorana_rotation(prop);
  std::vector<std::pair<MajoranaMonomial, double>> right;
  right.reserve(rhs.terms().size());
  for (const auto& [letters, w] : rhs.terms()) right.emplace_back(to_majorana(letters), w);

  // Infinite-temperature Wick contraction: <gamma'_A gamma_B> with only the
  // cross contractions R_ab surviving gives (-1)^{m(m-1)/2} det R[A, B].
  Complex total = 0.0;
  for (const auto& [letters, w] : lhs.terms()) {
    const MajoranaMonomial left = to_majorana(letters);
    const auto m = static_cast<Eigen::Index>(left.modes.size());
    for (const auto& [mono, v] : right) {
      if (static_cast<Eigen::Index>(mono.modes.size()) != m) continue;
      double contraction = 1.0;
      if (m > 0) {
        Eigen::MatrixXd block(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
          for (Eigen::Index k = 0; k < m; ++k) {
            block(i, k) = r(left.modes[static_cast<std::size_t>(i)],
                            mono.modes[static_cast<std::size_t>(k)]);
          }
        }
        contraction = block.determinant();
        if ((m * (m - 1) / 2) % 2 != 0) contraction = -contraction;
      }
      total += w * v * left.phase * mono.phase * contraction;
    }
  }
  return total.real();
}

double polarization_correlation(const Propagator& prop, int j, int l, Model model) {
  if (model == Model::kDipolar) {
    throw Error(ErrorCode::kUnsupportedModel, "dipolar evolution is not free-fermion");
  }
  const double p = prop.probability(j, l);
  if (model == Model::kDQ && (j - l) % 2 != 0) return -p;
  return p;
}

double polarization_correlation(const ChainSpec& spec, int j, int l, double t, Model model) {
  check_site(spec.n(), j);
  check_site(spec.n(), l);
  return polarization_correlation(propagate(spec, t), j, l, model);
}

double end_autocorrelation(const Propagator& prop, StateKind initial, Model model) {
  const int n = prop.n();
  switch (initial) {
    case StateKind::kZEnds: {
      if (n < 2) throw Error(ErrorCode::kChainTooShort, "z_ends needs n >= 2");
      const double sum = polarization_correlation(prop, 1, 1, model) +
                         polarization_correlation(prop, n, n, model) +
                         polarization_correlation(prop, 1, n, model) +
                         polarization_correlation(prop, n, 1, model);
      return sum / 2.0;
    }
    case StateKind::kYLogical: {
      const DeviationState state = prepare_state(n, initial);
      return free_fermion_correlation(prop, model, state.terms(), state.terms()) /
             state.terms().overlap(state.terms());
    }
    default:
      throw Error(ErrorCode::kInvalidParameter, "autocorrelation supports z_ends and y_logical");
  }
}

double end_autocorrelation(const ChainSpec& spec, double t, StateKind initial, Model model) {
  if (initial == StateKind::kYLogical && spec.n() < 4) {
    throw Error(ErrorCode::kChainTooShort, "y_logical needs n >= 4");
  }
  return end_autocorrelation(propagate(spec, t), initial, model);
}

}  // namespace spinwire
