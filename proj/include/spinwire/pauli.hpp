#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinwire {

// Pauli strings are stored as letter strings over {I, X, Y, Z}; character i
// acts on site i+1, so "ZI" is sigma_z on site 1 of a two-spin chain.
void validate_pauli_string(std::string_view letters);

// Weighted sum of Hermitian Pauli strings on n sites with real weights.
class PauliSum {
 public:
  explicit PauliSum(int n);

  int n() const { return n_; }
  const std::map<std::string, double>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Adds `weight` to the string built from (site, letter) factors with 1-based
  // sites; unlisted sites carry the identity.
  PauliSum& add(double weight, std::initializer_list<std::pair<int, char>> factors);
  PauliSum& add(double weight, std::vector<std::pair<int, char>> factors);
  PauliSum& add(std::string letters, double weight);

  double weight(const std::string& letters) const;

  // Tr[this * other] / 2^n; Pauli strings are orthonormal under this product.
  double overlap(const PauliSum& other) const;

  PauliSum scaled(double factor) const;
  PauliSum operator+(const PauliSum& other) const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  int n_;
  std::map<std::string, double> terms_;
};

// Conjugation by a product of sigma_x on `sites` (1-based): flips the sign
// of every Y and Z factor on those sites.
PauliSum conjugate_by_x(const PauliSum& op, const std::vector<int>& sites);

// The xx <-> dq similarity transformation, sigma_x on every odd site.
PauliSum conjugate_odd_sites(const PauliSum& op);

// Traceless deviation operator: a PauliSum with no identity component.
class DeviationState {
 public:
  explicit DeviationState(PauliSum terms);

  int n() const { return terms_.n(); }
  const PauliSum& terms() const { return terms_; }

 private:
  PauliSum terms_;
};

}  // namespace spinwire

namespace spinwire {

// Collective rotation exp(-i angle sum_j sigma_z^j / 2) applied by conjugation:
// X -> cos(angle) X + sin(angle) Y, Y -> cos(angle) Y - sin(angle) X per site.
PauliSum rotate_about_z(const PauliSum& op, double angle);

}  // namespace spinwire
