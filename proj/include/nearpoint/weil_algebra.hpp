#pragma once

// Weil algebras: finite-dimensional local R-algebras given by a basis and
// exact structure constants, together with their elements.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nearpoint/errors.hpp"
#include "nearpoint/monomial.hpp"
#include "nearpoint/rational.hpp"

namespace nearpoint {

using Coords = std::vector<Rational>;

/// Basis labels plus structure constants c[i][j][k] (coefficient of a_k in a_i*a_j).
/// Index 0 is reserved for the unit.
struct StructureTable {
  std::vector<std::string> labels;
  std::vector<Rational> constants;

  StructureTable() = default;
  explicit StructureTable(std::vector<std::string> basis_labels)
      : labels(std::move(basis_labels)),
        constants(labels.size() * labels.size() * labels.size(), Rational(0)) {}

  std::size_t dim() const noexcept { return labels.size(); }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return constants[(i * dim() + j) * dim() + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[(i * dim() + j) * dim() + k];
  }
};

/// Result of a successful locality check. filtration[k] spans V_k, with
/// A = V_0 + ... + V_h, V_0 = R*1 and V_k + m^{k+1} = m^k.
struct LocalCertificate {
  std::size_t height = 0;
  std::vector<std::vector<Coords>> filtration;
};

namespace detail {

inline Coords table_product(const StructureTable& t, const Coords& a, const Coords& b) {
  const std::size_t d = t.dim();
  Coords out(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(b[j])) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (!is_zero(t.at(i, j, k))) out[k] += ab * t.at(i, j, k);
      }
    }
  }
  return out;
}

inline Coords unit_vector(std::size_t dim, std::size_t i) {
  Coords v(dim, Rational(0));
  v[i] = 1;
  return v;
}

inline bool all_zero(const Coords& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

inline std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace detail

/// Confirms unit, commutativity, associativity and that span(a_1..a_{d-1}) is a
/// nilpotent ideal. Throws AlgebraError naming the offending basis indices.
inline LocalCertificate validate_local(const StructureTable& t) {
  const std::size_t d = t.dim();
  if (d == 0) throw AlgebraError("algebra must have dimension >= 1");
  if (t.constants.size() != d * d * d) throw AlgebraError("structure-constant table has wrong size");

  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const Rational expect = (j == k) ? Rational(1) : Rational(0);
      if (t.at(0, j, k) != expect || t.at(j, 0, k) != expect) {
        throw AlgebraError("unit law fails: a_0 is not a two-sided unit at basis triple " +
                           detail::triple(0, j, k));
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (t.at(i, j, k) != t.at(j, i, k)) {
          throw AlgebraError("not commutative at basis triple " + detail::triple(i, j, k));
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Coords ij = detail::table_product(t, detail::unit_vector(d, i), detail::unit_vector(d, j));
      for (std::size_t k = 0; k < d; ++k) {
        const Coords lhs = detail::table_product(t, ij, detail::unit_vector(d, k));
        const Coords jk = detail::table_product(t, detail::unit_vector(d, j), detail::unit_vector(d, k));
        const Coords rhs = detail::table_product(t, detail::unit_vector(d, i), jk);
        if (lhs != rhs) throw AlgebraError("not associative at basis triple " + detail::triple(i, j, k));
      }
    }
  }
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t j = 1; j < d; ++j) {
      if (!is_zero(t.at(i, j, 0))) {
        throw AlgebraError("span(a_1..a_{d-1}) is not an ideal: unit component in a_i*a_j at basis triple " +
                           detail::triple(i, j, 0));
      }
    }
  }

  // Powers of m = span(a_1..), each kept as a list of independent spanning vectors.
  std::vector<std::vector<Coords>> powers;
  {
    std::vector<Coords> whole;
    for (std::size_t i = 0; i < d; ++i) whole.push_back(detail::unit_vector(d, i));
    powers.push_back(std::move(whole));
    std::vector<Coords> m;
    for (std::size_t i = 1; i < d; ++i) m.push_back(detail::unit_vector(d, i));
    powers.push_back(std::move(m));
  }
  while (!powers.back().empty()) {
    EchelonBasis span(d);
    std::vector<Coords> next;
    for (std::size_t i = 1; i < d; ++i) {
      for (const auto& v : powers.back()) {
        Coords p = detail::table_product(t, detail::unit_vector(d, i), v);
        if (span.insert(p)) next.push_back(std::move(p));
      }
    }
    if (next.size() == powers.back().size()) {
      // m^{k+1} = m^k != 0: locate a non-nilpotent basis element for the message.
      for (std::size_t i = 1; i < d; ++i) {
        Coords p = detail::unit_vector(d, i);
        for (std::size_t e = 1; e < d + 1; ++e) p = detail::table_product(t, p, p);
        if (!detail::all_zero(p)) {
          throw AlgebraError("non-nilpotent non-unit part: basis element " + std::to_string(i) + " (" +
                             t.labels[i] + ") has nonzero powers of every order");
        }
      }
      throw AlgebraError("non-nilpotent non-unit part: m^k stabilizes at a nonzero ideal");
    }
    powers.push_back(std::move(next));
  }

  LocalCertificate cert;
  cert.height = powers.size() - 2;  // last nonzero power index
  for (std::size_t k = 0; k <= cert.height; ++k) {
    EchelonBasis span(d);
    for (const auto& v : powers[k + 1]) span.insert(v);
    std::vector<Coords> level;
    for (const auto& v : powers[k]) {
      if (span.insert(v)) level.push_back(v);
    }
    cert.filtration.push_back(std::move(level));
  }
  return cert;
}

class WeilAlgebra;
using AlgebraPtr = std::shared_ptr<const WeilAlgebra>;

/// Immutable Weil algebra. Always held through AlgebraPtr; elements compare
/// their algebra by identity.
class WeilAlgebra {
 public:
  /// Validates the table (validate_local) and builds the algebra.
  static AlgebraPtr make(StructureTable table) {
    LocalCertificate cert = validate_local(table);
    return AlgebraPtr(new WeilAlgebra(std::move(table), std::move(cert)));
  }

  /// Skips validation. Only for mutation tests of downstream checks; height
  /// falls back to dim-1 and the filtration to {1} + {a_1..} when invalid.
  static AlgebraPtr make_unchecked(StructureTable table) {
    LocalCertificate cert;
    try {
      cert = validate_local(table);
    } catch (const AlgebraError&) {
      const std::size_t d = table.dim();
      cert.height = d > 0 ? d - 1 : 0;
      cert.filtration.push_back({detail::unit_vector(d, 0)});
      std::vector<Coords> rest;
      for (std::size_t i = 1; i < d; ++i) rest.push_back(detail::unit_vector(d, i));
      if (!rest.empty()) cert.filtration.push_back(std::move(rest));
    }
    return AlgebraPtr(new WeilAlgebra(std::move(table), std::move(cert)));
  }

  std::size_t dim() const noexcept { return table_.dim(); }
  std::size_t height() const noexcept { return cert_.height; }
  const std::vector<std::string>& labels() const noexcept { return table_.labels; }
  const std::string& label(std::size_t i) const { return table_.labels.at(i); }
  const StructureTable& table() const noexcept { return table_; }
  const LocalCertificate& certificate() const noexcept { return cert_; }
  const std::vector<std::vector<Coords>>& filtration() const noexcept { return cert_.filtration; }

  /// Nonzero (k, c[i][j][k]) pairs.
  const std::vector<std::pair<std::size_t, Rational>>& products(std::size_t i, std::size_t j) const {
    return sparse_[i * dim() + j];
  }

  /// Coordinates of v in the filtration-adapted basis (V_0 vectors first, then V_1, ...).
  Coords to_adapted(const Coords& v) const { return multiply(adapted_inverse_, v); }
  /// Filtration level of each adapted-basis vector.
  const std::vector<std::size_t>& adapted_levels() const noexcept { return adapted_levels_; }
  const std::vector<Coords>& adapted_basis() const noexcept { return adapted_basis_; }

 private:
  WeilAlgebra(StructureTable table, LocalCertificate cert) : table_(std::move(table)), cert_(std::move(cert)) {
    const std::size_t d = dim();
    sparse_.resize(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          if (!is_zero(table_.at(i, j, k))) sparse_[i * d + j].emplace_back(k, table_.at(i, j, k));
        }
      }
    }
    for (std::size_t level = 0; level < cert_.filtration.size(); ++level) {
      for (const auto& v : cert_.filtration[level]) {
        adapted_basis_.push_back(v);
        adapted_levels_.push_back(level);
      }
    }
    if (adapted_basis_.size() == d) {
      RationalMatrix columns(d, Coords(d, Rational(0)));
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < d; ++r) columns[r][c] = adapted_basis_[c][r];
      }
      if (auto inv = inverse(columns)) adapted_inverse_ = std::move(*inv);
    }
  }

  StructureTable table_;
  LocalCertificate cert_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
  std::vector<Coords> adapted_basis_;
  std::vector<std::size_t> adapted_levels_;
  RationalMatrix adapted_inverse_;
};

/// Element of A as a coordinate vector in the algebra's basis.
class AElement {
 public:
  AElement(AlgebraPtr alg, Coords coords) : alg_(std::move(alg)), c_(std::move(coords)) {
    if (!alg_) throw MismatchError("AElement needs an algebra");
    if (c_.size() != alg_->dim()) throw MismatchError("coordinate vector length differs from algebra dimension");
  }

  static AElement zero(const AlgebraPtr& alg) { return AElement(alg, Coords(alg->dim(), Rational(0))); }
  static AElement scalar(const AlgebraPtr& alg, const Rational& r) {
    AElement e = zero(alg);
    e.c_[0] = r;
    return e;
  }
  static AElement one(const AlgebraPtr& alg) { return scalar(alg, Rational(1)); }
  static AElement basis(const AlgebraPtr& alg, std::size_t i) {
    AElement e = zero(alg);
    e.c_.at(i) = 1;
    return e;
  }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Coords& coords() const noexcept { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const { return detail::all_zero(c_); }
  /// True when the element is a real multiple of the unit.
  bool is_scalar() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return nearpoint::is_zero(x); });
  }

  friend bool operator==(const AElement& a, const AElement& b) {
    return a.alg_.get() == b.alg_.get() && a.c_ == b.c_;
  }

  AElement operator-() const {
    AElement r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  AElement& operator+=(const AElement& o) {
    same_algebra(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  AElement& operator-=(const AElement& o) {
    same_algebra(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  AElement& operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
  }
  friend AElement operator+(AElement a, const AElement& b) { return a += b; }
  friend AElement operator-(AElement a, const AElement& b) { return a -= b; }
  friend AElement operator*(AElement a, const Rational& r) { return a *= r; }
  friend AElement operator*(const Rational& r, AElement a) { return a *= r; }

  friend AElement operator*(const AElement& a, const AElement& b) {
    a.same_algebra(b);
    const WeilAlgebra& alg = *a.alg_;
    const std::size_t d = alg.dim();
    Coords out(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (nearpoint::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (nearpoint::is_zero(b.c_[j])) continue;
        const Rational ab = a.c_[i] * b.c_[j];
        for (const auto& [k, c] : alg.products(i, j)) out[k] += ab * c;
      }
    }
    return AElement(a.alg_, std::move(out));
  }
  AElement& operator*=(const AElement& o) { return *this = *this * o; }

  void same_algebra(const AElement& o) const {
    if (alg_.get() != o.alg_.get()) throw MismatchError("elements belong to different algebras");
  }

 private:
  AlgebraPtr alg_;
  Coords c_;
};

inline bool is_zero(const AElement& a) { return a.is_zero(); }
inline AElement zero_like(const AElement& a) { return AElement::zero(a.algebra()); }
inline AElement one_like(const AElement& a) { return AElement::one(a.algebra()); }
inline void check_compatible(const AElement& a, const AElement& b) { a.same_algebra(b); }

/// The quotient map A -> A/m = R; coordinate 0 in the adapted basis.
inline Rational augmentation(const AElement& a) { return a[0]; }

inline AElement pow(const AElement& a, unsigned e) {
  AElement r = AElement::one(a.algebra());
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

/// a^{-1} = lambda^{-1} * sum_{k=0..h} (-n/lambda)^k for a = lambda + n, n nilpotent.
inline AElement invert(const AElement& a) {
  const Rational lambda = augmentation(a);
  if (is_zero(lambda)) throw NotInvertibleError("element lies in the maximal ideal (augmentation 0)");
  const AlgebraPtr& alg = a.algebra();
  const Rational inv_lambda = 1 / lambda;
  const AElement step = (a - AElement::scalar(alg, lambda)) * Rational(-inv_lambda);
  AElement term = AElement::one(alg);
  AElement sum = AElement::zero(alg);
  for (std::size_t k = 0; k <= alg->height() && !term.is_zero(); ++k) {
    sum += term;
    term *= step;
  }
  return sum * inv_lambda;
}

/// Rendering in algebra basis order: "2 + 3*eps", "-eps^2", "0".
inline std::string to_string(const AElement& a) {
  std::string out;
  const auto& alg = *a.algebra();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Rational& c = a[i];
    if (is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string body;
    if (i == 0) {
      body = to_string(mag);
    } else {
      body = (mag == 1) ? alg.label(i) : to_string(mag) + "*" + alg.label(i);
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

using AMatrix = std::vector<std::vector<AElement>>;

inline AMatrix multiply(const AMatrix& a, const AMatrix& b) {
  const AlgebraPtr& alg = a.at(0).at(0).algebra();
  AMatrix out(a.size(), std::vector<AElement>(b.at(0).size(), AElement::zero(alg)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline std::vector<AElement> multiply(const AMatrix& m, const std::vector<AElement>& v) {
  const AlgebraPtr& alg = v.at(0).algebra();
  std::vector<AElement> out(m.size(), AElement::zero(alg));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

inline AMatrix identity_matrix(const AlgebraPtr& alg, std::size_t n) {
  AMatrix m(n, std::vector<AElement>(n, AElement::zero(alg)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = AElement::one(alg);
  return m;
}

inline AMatrix lift(const AlgebraPtr& alg, const RationalMatrix& m) {
  AMatrix out;
  for (const auto& row : m) {
    std::vector<AElement> r;
    for (const auto& x : row) r.push_back(AElement::scalar(alg, x));
    out.push_back(std::move(r));
  }
  return out;
}

inline RationalMatrix augmentation(const AMatrix& m) {
  RationalMatrix out;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(augmentation(x));
    out.push_back(std::move(r));
  }
  return out;
}

inline bool is_identity(const AMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const AElement& x = m[i][j];
      if (i == j ? !(x.is_scalar() && x[0] == 1) : !x.is_zero()) return false;
    }
  }
  return true;
}

/// Exact inverse over A of a square matrix whose augmentation image M_0 is
/// invertible over R: (sum_k (-M_0^{-1} N)^k) M_0^{-1} with N = M - M_0.
/// The series terminates because the entries of (M_0^{-1} N)^k lie in m^k.
inline AMatrix nil_matrix_invert(const AMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  for (const auto& row : m) {
    if (row.size() != n) throw MismatchError("nil_matrix_invert needs a square matrix");
  }
  const AlgebraPtr& alg = m[0][0].algebra();
  const auto inv0 = inverse(augmentation(m));
  if (!inv0) throw NotInvertibleError("augmentation image of the matrix is singular");
  const AMatrix inv0_a = lift(alg, *inv0);
  AMatrix step = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) step[i][j] = m[i][j] - AElement::scalar(alg, augmentation(m[i][j]));
  }
  step = multiply(inv0_a, step);
  for (auto& row : step) {
    for (auto& x : row) x = -x;
  }
  AMatrix sum = identity_matrix(alg, n);
  AMatrix term = step;
  for (std::size_t k = 1; k <= alg->height() * n + 1; ++k) {
    bool zero = true;
    for (const auto& row : term) {
      for (const auto& x : row) zero = zero && x.is_zero();
    }
    if (zero) break;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
    }
    term = multiply(term, step);
  }
  AMatrix result = multiply(sum, inv0_a);
  if (!is_identity(multiply(m, result)) || !is_identity(multiply(result, m))) {
    throw NotInvertibleError("Neumann series did not produce a two-sided inverse (algebra not local?)");
  }
  return result;
}

/// Solves M v = rhs level by level along the filtration A = V_0 + ... + V_h:
/// at level k the residual lies in m^k and its V_k components are removed by
/// real solves against M_0. Independent of nil_matrix_invert.
inline std::vector<AElement> filtration_solve(const AMatrix& m, const std::vector<AElement>& rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw MismatchError("filtration_solve: right-hand side has wrong length");
  if (n == 0) return {};
  const AlgebraPtr& alg = rhs[0].algebra();
  const auto inv0 = inverse(augmentation(m));
  if (!inv0) throw NotInvertibleError("augmentation image of the matrix is singular");
  const auto& basis = alg->adapted_basis();
  const auto& levels = alg->adapted_levels();
  if (basis.size() != alg->dim()) throw AlgebraError("algebra has no adapted filtration basis");

  std::vector<AElement> v(n, AElement::zero(alg));
  for (std::size_t level = 0; level <= alg->height(); ++level) {
    const auto mv = multiply(m, v);
    std::vector<Coords> residual;
    for (std::size_t i = 0; i < n; ++i) residual.push_back(alg->to_adapted((rhs[i] - mv[i]).coords()));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (levels[b] != level) continue;
      std::vector<Rational> component(n);
      for (std::size_t i = 0; i < n; ++i) component[i] = residual[i][b];
      const auto u = multiply(*inv0, component);
      for (std::size_t i = 0; i < n; ++i) v[i] += AElement(alg, basis[b]) * u[i];
    }
  }
  const auto check = multiply(m, v);
  if (check != rhs) throw NotInvertibleError("filtration solve left a nonzero residual (algebra not local?)");
  return v;
}

/// Truncated polynomial algebra R[g_1..g_k] / (relations + all monomials of degree > degree_cap).
/// The basis is the surviving monomials in graded-lex order, the unit first.
inline AlgebraPtr make_truncated_polynomial_algebra(std::vector<std::string> generators,
                                                    const std::vector<Monomial>& relations,
                                                    std::optional<unsigned> degree_cap) {
  const std::size_t k = generators.size();
  for (const auto& r : relations) {
    if (r.n_vars() != k) throw AlgebraError("relation has the wrong number of generators");
    if (r.degree() == 0) throw AlgebraError("relation 1 is not contained in the maximal ideal");
  }
  unsigned max_degree = 0;
  if (degree_cap) {
    max_degree = *degree_cap;
  } else {
    for (std::size_t g = 0; g < k; ++g) {
      std::optional<unsigned> pure;
      for (const auto& r : relations) {
        if (r.degree() == r[g]) pure = pure ? std::min(*pure, r[g]) : r[g];
      }
      if (!pure) {
        throw AlgebraError("quotient is infinite-dimensional: no pure power of generator '" + generators[g] +
                           "' among the relations and no degree cap");
      }
      max_degree += *pure - 1;
    }
  }

  // Enumerate surviving monomials degree by degree, lexicographically descending.
  std::vector<Monomial> basis;
  std::vector<unsigned> exps(k, 0);
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    std::vector<Monomial> layer;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
      if (pos + 1 >= k) {
        if (k > 0) exps[k - 1] = left;
        if (k > 0 || left == 0) layer.emplace_back(exps);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        exps[pos] = e;
        rec(pos + 1, left - e);
      }
    };
    rec(0, deg);
    for (auto& mono : layer) {
      const bool killed = std::any_of(relations.begin(), relations.end(),
                                      [&](const Monomial& r) { return mono.divisible_by(r); });
      if (!killed) basis.push_back(std::move(mono));
    }
  }

  std::vector<std::string> labels;
  for (const auto& mono : basis) {
    labels.push_back(mono.format([&](std::size_t g) { return generators[g]; }));
  }
  StructureTable table(labels);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Monomial prod = basis[i] * basis[j];
      const auto it = std::find(basis.begin(), basis.end(), prod);
      if (it != basis.end()) table.at(i, j, static_cast<std::size_t>(it - basis.begin())) = 1;
    }
  }
  return WeilAlgebra::make(std::move(table));
}

/// R[eps]/(eps^{order+1}).
inline AlgebraPtr make_jet_algebra_1d(unsigned order, const std::string& name = "eps") {
  return make_truncated_polynomial_algebra({name}, {Monomial(std::vector<unsigned>{order + 1})}, std::nullopt);
}

/// Same algebra with basis b_i = a_{perm[i]}; perm[0] must be 0.
inline AlgebraPtr permute_basis(const WeilAlgebra& alg, std::span<const std::size_t> perm) {
  const std::size_t d = alg.dim();
  if (perm.size() != d || perm[0] != 0) throw AlgebraError("basis permutation must fix the unit index 0");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(alg.label(perm[i]));
  StructureTable t(labels);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) t.at(i, j, k) = alg.table().at(perm[i], perm[j], perm[k]);
    }
  }
  return WeilAlgebra::make(std::move(t));
}

}  // namespace nearpoint
