#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearpoint/errors.hpp"

namespace nearpoint {

/// Exponent vector x_1^{e_1}...x_n^{e_n}, ordered graded-lexicographically
/// (total degree first, then x_1 > x_2 > ... > x_n).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : exps_(n_vars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
    for (unsigned e : exps_) degree_ += e;
  }

  static Monomial variable(std::size_t n_vars, std::size_t j, unsigned power = 1) {
    Monomial m(n_vars);
    m.exps_.at(j) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t n_vars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t j) const { return exps_[j]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  Monomial operator*(const Monomial& other) const {
    if (other.n_vars() != n_vars()) throw MismatchError("monomials over different variable counts");
    Monomial m(*this);
    for (std::size_t j = 0; j < exps_.size(); ++j) m.exps_[j] += other.exps_[j];
    m.degree_ += other.degree_;
    return m;
  }

  bool divisible_by(const Monomial& d) const {
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      if (exps_[j] < d.exps_[j]) return false;
    }
    return true;
  }

  /// x^e with e_j lowered by one; nullopt when e_j = 0.
  std::optional<Monomial> lowered(std::size_t j) const {
    if (exps_[j] == 0) return std::nullopt;
    Monomial m(*this);
    --m.exps_[j];
    --m.degree_;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

  /// "x1^2*x3"; the empty product prints as "1".
  std::string format(const std::function<std::string(std::size_t)>& name) const {
    std::string out;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      if (exps_[j] == 0) continue;
      if (!out.empty()) out += '*';
      out += name(j);
      if (exps_[j] > 1) out += '^' + std::to_string(exps_[j]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Name of coordinate j (0-based) in literals: x1, x2, ...
inline std::string coordinate_name(std::size_t j) { return "x" + std::to_string(j + 1); }

}  // namespace nearpoint
