#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace spinwire {

// Two-body interaction realized on each bond (or pair, for kDipolar).
//   kXX      : d/2 (XX + YY), excitation conserving flip-flop
//   kDQ      : d/2 (XX - YY), double-quantum
//   kDipolar : d [ZZ - (XX + YY)/2], secular dipolar
enum class Model { kXX, kDQ, kDipolar };

// How the couplings were produced. Only kEngineered carries a closed-form
// mirror time; kCustom marks anything edited after generation.
enum class Family { kHomogeneous, kEngineered, kDipolar, kCustom };

enum class Truncation { kNearestNeighbor, kFull };

std::string_view to_string(Model model);
std::string_view to_string(Family family);
Model parse_model(std::string_view text);
Family parse_family(std::string_view text);

class ChainSpec {
 public:
  // Nearest-neighbour chain; `couplings[j-1]` is the bond between sites j and j+1.
  ChainSpec(int n, std::vector<double> couplings, Model model = Model::kXX,
            Family family = Family::kCustom, double scale = 0.0);

  // Long-range chain (secular dipolar). `pairs` must be symmetric with a zero
  // diagonal; the nearest-neighbour list is taken from its first off-diagonal.
  static ChainSpec long_range(Eigen::MatrixXd pairs, Family family = Family::kDipolar,
                              double scale = 0.0);

  int n() const { return n_; }
  Model model() const { return model_; }
  Family family() const { return family_; }
  // Coupling scale d of a generated family (max coupling for kEngineered).
  double scale() const { return scale_; }
  std::span<const double> couplings() const { return couplings_; }
  bool is_long_range() const { return pairs_.size() != 0; }

  // Pair coupling d_{jl} with 1-based sites; zero beyond nearest neighbours
  // unless the chain is long-range.
  double pair_coupling(int j, int l) const;
  Eigen::MatrixXd coupling_matrix() const;

  ChainSpec with_model(Model model) const;
  ChainSpec with_couplings(std::vector<double> couplings) const;

  friend bool operator==(const ChainSpec& a, const ChainSpec& b);

 private:
  ChainSpec() = default;

  int n_ = 0;
  Model model_ = Model::kXX;
  Family family_ = Family::kCustom;
  double scale_ = 0.0;
  std::vector<double> couplings_;
  Eigen::MatrixXd pairs_;
};

struct DipolarGeometry {
  std::vector<double> positions;  // site coordinates along the chain axis [m]
  double prefactor = 1.0;         // coupling scale, d_{jl} = prefactor (1 - 3cos^2 0) / r^3
};

struct TransferTiming {
  double t_star = 0.0;          // mirror time
  double group_velocity = 0.0;  // sites per unit time
};

// mu0/(16 pi) * gamma^2 * hbar in SI units (rad/s * m^3).
double dipolar_prefactor(double gyromagnetic_ratio);

ChainSpec homogeneous_couplings(int n, double d, Model model = Model::kXX);
ChainSpec engineered_couplings(int n, double d, Model model = Model::kXX);
ChainSpec dipolar_couplings(const DipolarGeometry& geometry, Truncation truncation,
                            Model nearest_neighbor_model = Model::kXX);
std::vector<double> implant_spacings(int n, double r_min);
ChainSpec perturb_couplings(const ChainSpec& spec, double relative_sigma, std::uint64_t seed);

// Mirror time and group velocity of the engineered family with scale d.
TransferTiming transfer_timing(const ChainSpec& spec);
TransferTiming engineered_timing(int n, double d);

// Normalized time tau = 2 d t / n of the engineered family; the mirror time
// sits at tau = pi/2.
double normalized_time(int n, double d, double t);

}  // namespace spinwire
