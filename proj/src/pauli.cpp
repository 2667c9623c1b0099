#include "spinwire/pauli.hpp"

#include <algorithm>
#include <cmath>

#include "spinwire/error.hpp"

namespace spinwire {

void validate_pauli_string(std::string_view letters) {
  for (char c : letters) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw Error(ErrorCode::kParse, "bad Pauli letter '" + std::string(1, c) + "'");
    }
  }
}

PauliSum::PauliSum(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kInvalidDimension, "Pauli sums need n >= 1");
}

PauliSum& PauliSum::add(double weight, std::initializer_list<std::pair<int, char>> factors) {
  return add(weight, std::vector<std::pair<int, char>>(factors));
}

PauliSum& PauliSum::add(double weight, std::vector<std::pair<int, char>> factors) {
  std::string letters(static_cast<std::size_t>(n_), 'I');
  for (auto [site, letter] : factors) {
    if (site < 1 || site > n_) throw Error(ErrorCode::kIndexOutOfRange, "site outside 1..n");
    auto& slot = letters[static_cast<std::size_t>(site - 1)];
    if (slot != 'I') throw Error(ErrorCode::kInvalidConfiguration, "site listed twice");
    slot = letter;
  }
  return add(std::move(letters), weight);
}

PauliSum& PauliSum::add(std::string letters, double weight) {
  if (letters.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorCode::kDimensionMismatch, "Pauli string length differs from n");
  }
  validate_pauli_string(letters);
  if (!std::isfinite(weight)) throw Error(ErrorCode::kInvalidParameter, "non-finite weight");
  auto [it, inserted] = terms_.try_emplace(std::move(letters), weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0.0) terms_.erase(it);
  } else if (weight == 0.0) {
    terms_.erase(it);
  }
  return *this;
}

double PauliSum::weight(const std::string& letters) const {
  auto it = terms_.find(letters);
  return it == terms_.end() ? 0.0 : it->second;
}

double PauliSum::overlap(const PauliSum& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::kDimensionMismatch, "Pauli sums on different n");
  double total = 0.0;
  for (const auto& [letters, w] : terms_) total += w * other.weight(letters);
  return total;
}

PauliSum PauliSum::scaled(double factor) const {
  PauliSum out(n_);
  for (const auto& [letters, w] : terms_) out.add(letters, w * factor);
  return out;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::kDimensionMismatch, "Pauli sums on different n");
  PauliSum out = *this;
  for (const auto& [letters, w] : other.terms_) out.add(letters, w);
  return out;
}

PauliSum conjugate_by_x(const PauliSum& op, const std::vector<int>& sites) {
  PauliSum out(op.n());
  for (const auto& [letters, w] : op.terms()) {
    double sign = 1.0;
    for (int site : sites) {
      if (site < 1 || site > op.n()) throw Error(ErrorCode::kIndexOutOfRange, "site outside 1..n");
      const char c = letters[static_cast<std::size_t>(site - 1)];
      if (c == 'Y' || c == 'Z') sign = -sign;
    }
    out.add(letters, sign * w);
  }
  return out;
}

PauliSum conjugate_odd_sites(const PauliSum& op) {
  std::vector<int> odd;
  for (int j = 1; j <= op.n(); j += 2) odd.push_back(j);
  return conjugate_by_x(op, odd);
}

DeviationState::DeviationState(PauliSum terms) : terms_(std::move(terms)) {
  const std::string identity(static_cast<std::size_t>(terms_.n()), 'I');
  if (terms_.weight(identity) != 0.0) {
    throw Error(ErrorCode::kInvalidParameter, "deviation states must be traceless");
  }
}

}  // namespace spinwire

namespace spinwire {

PauliSum rotate_about_z(const PauliSum& op, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  PauliSum out(op.n());
  for (const auto& [letters, w] : op.terms()) {
    std::vector<std::pair<std::string, double>> partial{{"", w}};
    for (char letter : letters) {
      std::vector<std::pair<std::string, double>> next;
      next.reserve(partial.size() * 2);
      for (auto& [prefix, weight] : partial) {
        if (letter == 'X') {
          next.emplace_back(prefix + 'X', weight * c);
          next.emplace_back(prefix + 'Y', weight * s);
        } else if (letter == 'Y') {
          next.emplace_back(prefix + 'Y', weight * c);
          next.emplace_back(prefix + 'X', -weight * s);
        } else {
          next.emplace_back(prefix + letter, weight);
        }
      }
      partial = std::move(next);
    }
    for (auto& [result, weight] : partial) {
      if (std::abs(weight) > 1e-15 * std::abs(w)) out.add(std::move(result), weight);
    }
  }
  return out;
}

}  // namespace spinwire
