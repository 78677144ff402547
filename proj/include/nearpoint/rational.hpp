#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nearpoint {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline void check_compatible(const Rational&, const Rational&) {}

/// Canonical text: "p" when the reduced denominator is 1, "p/q" with q > 0 otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p", "p/q" or "-p/q". Returns nullopt on malformed text or q = 0.
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos++]);
    }
    return pos > start;
  };
  std::string num;
  std::string den = "1";
  if (!digits(num)) return std::nullopt;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den.clear();
    if (!digits(den)) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  mpz_class d(den);
  if (sgn(d) == 0) return std::nullopt;
  Rational r(mpz_class(num), d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

inline RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Gauss-Jordan inverse over Q; nullopt when singular.
inline std::optional<RationalMatrix> inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || is_zero(m[row][col])) continue;
      const Rational f = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

/// Incrementally built row-echelon basis of a subspace of Q^dim.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the stored rows; the result is zero iff v lies in the span.
  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (is_zero(v[p])) continue;
      const Rational f = v[p];
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
  }

  bool contains(const std::vector<Rational>& v) const {
    for (const auto& x : reduce(v)) {
      if (!is_zero(x)) return false;
    }
    return true;
  }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const std::vector<Rational>& v) {
    auto reduced = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && is_zero(reduced[p])) ++p;
    if (p == dim_) return false;
    const Rational scale = 1 / reduced[p];
    for (auto& x : reduced) x *= scale;
    rows_.push_back(std::move(reduced));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nearpoint
