#include "spinwire/chain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "spinwire/error.hpp"

namespace spinwire {

std::string_view to_string(Model model) {
  switch (model) {
    case Model::kXX: return "xx";
    case Model::kDQ: return "dq";
    case Model::kDipolar: return "dipolar";
  }
  return "?";
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kHomogeneous: return "homogeneous";
    case Family::kEngineered: return "engineered";
    case Family::kDipolar: return "dipolar";
    case Family::kCustom: return "custom";
  }
  return "?";
}

Model parse_model(std::string_view text) {
  if (text == "xx") return Model::kXX;
  if (text == "dq") return Model::kDQ;
  if (text == "dipolar" || text == "dipolar-secular") return Model::kDipolar;
  throw Error(ErrorCode::kParse, "unknown model '" + std::string(text) + "'");
}

Family parse_family(std::string_view text) {
  if (text == "homogeneous") return Family::kHomogeneous;
  if (text == "engineered") return Family::kEngineered;
  if (text == "dipolar") return Family::kDipolar;
  if (text == "custom") return Family::kCustom;
  throw Error(ErrorCode::kParse, "unknown family '" + std::string(text) + "'");
}

ChainSpec::ChainSpec(int n, std::vector<double> couplings, Model model, Family family,
                     double scale)
    : n_(n), model_(model), family_(family), scale_(scale), couplings_(std::move(couplings)) {
  if (n < 1) throw Error(ErrorCode::kInvalidDimension, "chain needs at least one spin");
  if (couplings_.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorCode::kInvalidDimension,
                "expected " + std::to_string(n - 1) + " couplings, got " +
                    std::to_string(couplings_.size()));
  }
  for (double c : couplings_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::kInvalidParameter, "non-finite coupling");
  }
}

ChainSpec ChainSpec::long_range(Eigen::MatrixXd pairs, Family family, double scale) {
  const auto n = static_cast<int>(pairs.rows());
  if (n < 1 || pairs.cols() != pairs.rows()) {
    throw Error(ErrorCode::kInvalidDimension, "pair coupling matrix must be square and non-empty");
  }
  if (!pairs.allFinite()) throw Error(ErrorCode::kInvalidParameter, "non-finite coupling");
  if ((pairs - pairs.transpose()).cwiseAbs().maxCoeff() > 0.0 ||
      pairs.diagonal().cwiseAbs().maxCoeff() > 0.0) {
    throw Error(ErrorCode::kInvalidParameter, "pair couplings must be symmetric, zero diagonal");
  }
  std::vector<double> nn(static_cast<std::size_t>(n - 1));
  for (int j = 0; j + 1 < n; ++j) nn[static_cast<std::size_t>(j)] = pairs(j, j + 1);
  ChainSpec spec(n, std::move(nn), Model::kDipolar, family, scale);
  spec.pairs_ = std::move(pairs);
  return spec;
}

double ChainSpec::pair_coupling(int j, int l) const {
  if (j < 1 || l < 1 || j > n_ || l > n_) {
    throw Error(ErrorCode::kIndexOutOfRange, "site index outside 1..n");
  }
  if (is_long_range()) return pairs_(j - 1, l - 1);
  if (std::abs(j - l) != 1) return 0.0;
  return couplings_[static_cast<std::size_t>(std::min(j, l) - 1)];
}

Eigen::MatrixXd ChainSpec::coupling_matrix() const {
  if (is_long_range()) return pairs_;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  for (int j = 0; j + 1 < n_; ++j) {
    m(j, j + 1) = couplings_[static_cast<std::size_t>(j)];
    m(j + 1, j) = couplings_[static_cast<std::size_t>(j)];
  }
  return m;
}

ChainSpec ChainSpec::with_model(Model model) const {
  if (is_long_range() && model != Model::kDipolar) {
    throw Error(ErrorCode::kUnsupportedModel, "long-range couplings only support the dipolar model");
  }
  ChainSpec copy = *this;
  copy.model_ = model;
  return copy;
}

ChainSpec ChainSpec::with_couplings(std::vector<double> couplings) const {
  if (is_long_range()) {
    throw Error(ErrorCode::kUnsupportedModel, "use long_range() to rebuild a long-range chain");
  }
  return ChainSpec(n_, std::move(couplings), model_, Family::kCustom, scale_);
}

bool operator==(const ChainSpec& a, const ChainSpec& b) {
  if (a.n_ != b.n_ || a.model_ != b.model_ || a.family_ != b.family_ || a.scale_ != b.scale_ ||
      a.couplings_ != b.couplings_ || a.is_long_range() != b.is_long_range()) {
    return false;
  }
  return !a.is_long_range() || a.pairs_ == b.pairs_;
}

double dipolar_prefactor(double gyromagnetic_ratio) {
  constexpr double kMu0 = 1.25663706212e-6;
  constexpr double kHbar = 1.054571817e-34;
  return kMu0 / (16.0 * std::numbers::pi) * gyromagnetic_ratio * gyromagnetic_ratio * kHbar;
}

ChainSpec homogeneous_couplings(int n, double d, Model model) {
  if (n < 1) throw Error(ErrorCode::kInvalidDimension, "n must be >= 1");
  if (!std::isfinite(d)) throw Error(ErrorCode::kInvalidParameter, "d must be finite");
  return ChainSpec(n, std::vector<double>(static_cast<std::size_t>(n - 1), d), model,
                   Family::kHomogeneous, d);
}

ChainSpec engineered_couplings(int n, double d, Model model) {
  if (n < 2) throw Error(ErrorCode::kInvalidDimension, "engineered chains need n >= 2");
  if (!(d > 0.0) || !std::isfinite(d)) throw Error(ErrorCode::kInvalidParameter, "d must be > 0");
  std::vector<double> couplings(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) {
    // Evaluated from the mirrored index too, so d_j == d_{n-j} bit for bit.
    const double jj = static_cast<double>(std::min(j, n - j));
    const double kk = static_cast<double>(std::max(j, n - j));
    couplings[static_cast<std::size_t>(j - 1)] = 2.0 * d * std::sqrt(jj * kk) / n;
  }
  return ChainSpec(n, std::move(couplings), model, Family::kEngineered, d);
}

ChainSpec dipolar_couplings(const DipolarGeometry& geometry, Truncation truncation,
                            Model nearest_neighbor_model) {
  const auto& pos = geometry.positions;
  const auto n = static_cast<int>(pos.size());
  if (n < 1) throw Error(ErrorCode::kInvalidDimension, "geometry has no sites");
  if (!std::isfinite(geometry.prefactor)) {
    throw Error(ErrorCode::kInvalidParameter, "prefactor must be finite");
  }
  for (int j = 0; j + 1 < n; ++j) {
    const double gap = pos[static_cast<std::size_t>(j + 1)] - pos[static_cast<std::size_t>(j)];
    if (!(gap > 0.0)) {
      throw Error(ErrorCode::kDegenerateGeometry, "positions must be strictly increasing");
    }
  }
  // Collinear chain along the field: 1 - 3 cos^2(0) = -2.
  constexpr double kAngular = -2.0;
  auto coupling = [&](int j, int l) {
    const double r = std::abs(pos[static_cast<std::size_t>(l)] - pos[static_cast<std::size_t>(j)]);
    return geometry.prefactor * kAngular / (r * r * r);
  };
  if (truncation == Truncation::kFull) {
    Eigen::MatrixXd pairs = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        pairs(j, l) = coupling(j, l);
        pairs(l, j) = pairs(j, l);
      }
    }
    return ChainSpec::long_range(std::move(pairs), Family::kDipolar, geometry.prefactor);
  }
  std::vector<double> couplings(static_cast<std::size_t>(n - 1));
  for (int j = 0; j + 1 < n; ++j) couplings[static_cast<std::size_t>(j)] = coupling(j, j + 1);
  return ChainSpec(n, std::move(couplings), nearest_neighbor_model, Family::kDipolar,
                   geometry.prefactor);
}

std::vector<double> implant_spacings(int n, double r_min) {
  if (n < 2) throw Error(ErrorCode::kInvalidDimension, "need n >= 2");
  if (!(r_min > 0.0)) throw Error(ErrorCode::kInvalidParameter, "r_min must be > 0");
  std::vector<double> positions(static_cast<std::size_t>(n), 0.0);
  const double numerator = r_min * std::cbrt(n / 2.0);
  for (int j = 1; j < n; ++j) {
    const double jj = static_cast<double>(std::min(j, n - j));
    const double kk = static_cast<double>(std::max(j, n - j));
    const double gap = numerator / std::pow(jj * kk, 1.0 / 6.0);
    positions[static_cast<std::size_t>(j)] = positions[static_cast<std::size_t>(j - 1)] + gap;
  }
  return positions;
}

ChainSpec perturb_couplings(const ChainSpec& spec, double relative_sigma, std::uint64_t seed) {
  if (!(relative_sigma >= 0.0) || !std::isfinite(relative_sigma)) {
    throw Error(ErrorCode::kInvalidParameter, "relative_sigma must be >= 0");
  }
  if (relative_sigma == 0.0) return spec;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, relative_sigma);
  if (spec.is_long_range()) {
    Eigen::MatrixXd pairs = spec.coupling_matrix();
    for (int j = 0; j < spec.n(); ++j) {
      for (int l = j + 1; l < spec.n(); ++l) {
        pairs(j, l) *= 1.0 + noise(rng);
        pairs(l, j) = pairs(j, l);
      }
    }
    return ChainSpec::long_range(std::move(pairs), Family::kCustom, spec.scale());
  }
  std::vector<double> couplings(spec.couplings().begin(), spec.couplings().end());
  for (double& c : couplings) c *= 1.0 + noise(rng);
  return spec.with_couplings(std::move(couplings));
}

TransferTiming engineered_timing(int n, double d) {
  if (n < 1) throw Error(ErrorCode::kInvalidDimension, "n must be >= 1");
  if (!(d > 0.0)) throw Error(ErrorCode::kInvalidParameter, "d must be > 0");
  // Single-particle levels are spaced by 4d/n, so the mirror image forms
  // after a relative phase of pi between neighbouring levels.
  const double t_star = std::numbers::pi * n / (4.0 * d);
  return {t_star, n / t_star};
}

TransferTiming transfer_timing(const ChainSpec& spec) {
  if (spec.family() != Family::kEngineered) {
    throw Error(ErrorCode::kUnsupportedFamily,
                "mirror time is only defined for engineered couplings, got " +
                    std::string(to_string(spec.family())));
  }
  return engineered_timing(spec.n(), spec.scale());
}

double normalized_time(int n, double d, double t) { return 2.0 * d * t / n; }

}  // namespace spinwire
