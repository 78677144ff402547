#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "nearpoint/errors.hpp"
#include "nearpoint/monomial.hpp"
#include "nearpoint/rational.hpp"
#include "nearpoint/weil_algebra.hpp"

namespace nearpoint {

/// Polynomial in x_1..x_n with coefficients in a commutative ring Coeff
/// (Rational for C^inf(M), AElement for the A-polynomial class of C^inf(M^A, A)).
/// Zero coefficients are never stored. `zero_` carries the coefficient context
/// (the algebra, for AElement) so empty polynomials still know their ring.
template <class Coeff>
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coeff>;

  Polynomial(std::size_t n_vars, Coeff zero) : n_(n_vars), zero_(std::move(zero)) {}

  static Polynomial constant(std::size_t n_vars, const Coeff& c) {
    Polynomial p(n_vars, zero_like(c));
    p.add_term(Monomial(n_vars), c);
    return p;
  }

  /// The coordinate function x_j (0-based j).
  static Polynomial variable(std::size_t n_vars, std::size_t j, const Coeff& one) {
    if (j >= n_vars) throw MismatchError("coordinate index out of range");
    Polynomial p(n_vars, zero_like(one));
    p.add_term(Monomial::variable(n_vars, j), one);
    return p;
  }

  std::size_t n_vars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  const Coeff& zero_coefficient() const noexcept { return zero_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }
  Coeff constant_term() const {
    auto it = terms_.find(Monomial(n_));
    return it == terms_.end() ? zero_ : it->second;
  }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (m.n_vars() != n_) throw MismatchError("monomial has the wrong number of variables");
    check_compatible(zero_, c);
    if (nearpoint::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (nearpoint::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Real-valuedness marker for the A-polynomial class; set explicitly at
  /// construction and propagated through ring operations.
  bool real_valued() const noexcept { return real_valued_; }
  Polynomial& mark_real_valued(bool flag = true) {
    real_valued_ = flag;
    return *this;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    real_valued_ = real_valued_ && o.real_valued_;
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    real_valued_ = real_valued_ && o.real_valued_;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.compatible(b);
    Polynomial r(a.n_, a.zero_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    r.real_valued_ = a.real_valued_ && b.real_valued_;
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiplies every coefficient by c.
  Polynomial scaled(const Coeff& c) const {
    Polynomial r(n_, zero_);
    for (const auto& [m, x] : terms_) r.add_term(m, c * x);
    return r;
  }
  Polynomial scaled(const Rational& r) const
    requires(!std::is_same_v<Coeff, Rational>)
  {
    Polynomial out(n_, zero_);
    for (const auto& [m, x] : terms_) out.add_term(m, x * r);
    out.real_valued_ = real_valued_;
    return out;
  }

  /// Formal partial derivative in x_j (0-based), linear in the coefficients.
  Polynomial partial(std::size_t j) const {
    if (j >= n_) throw MismatchError("partial: coordinate index out of range");
    Polynomial r(n_, zero_);
    for (const auto& [m, c] : terms_) {
      if (auto lower = m.lowered(j)) r.add_term(*lower, c * Rational(m[j]));
    }
    return r;
  }

  /// Substitutes point[j] for x_j and contracts in the coefficient ring.
  template <class Point>
  Point evaluate(std::span<const Point> point, const Point& zero, const Point& one) const {
    if (point.size() != n_) throw MismatchError("evaluation point has the wrong dimension");
    std::vector<std::vector<Point>> powers(n_);
    auto power = [&](std::size_t j, unsigned e) -> const Point& {
      auto& cache = powers[j];
      if (cache.empty()) cache.push_back(one);
      while (cache.size() <= e) cache.push_back(cache.back() * point[j]);
      return cache[e];
    };
    Point sum = zero;
    for (const auto& [m, c] : terms_) {
      Point prod = lift_coefficient(c, one);
      for (std::size_t j = 0; j < n_; ++j) {
        if (m[j] > 0) prod = prod * power(j, m[j]);
      }
      sum += prod;
    }
    return sum;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void compatible(const Polynomial& o) const {
    if (o.n_ != n_) throw MismatchError("polynomials over different numbers of variables");
    check_compatible(zero_, o.zero_);
  }

 private:
  template <class Point>
  static Point lift_coefficient(const Coeff& c, const Point& one) {
    if constexpr (std::is_same_v<Coeff, Point>) {
      return c;
    } else {
      return one * c;
    }
  }

  std::size_t n_;
  Coeff zero_;
  Terms terms_;
  bool real_valued_ = false;
};

template <class Coeff>
bool is_zero(const Polynomial<Coeff>& p) {
  return p.is_zero();
}
template <class Coeff>
Polynomial<Coeff> zero_like(const Polynomial<Coeff>& p) {
  return Polynomial<Coeff>(p.n_vars(), p.zero_coefficient());
}
template <class Coeff>
Polynomial<Coeff> one_like(const Polynomial<Coeff>& p) {
  return Polynomial<Coeff>::constant(p.n_vars(), one_like(p.zero_coefficient()));
}
template <class Coeff>
void check_compatible(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
  a.compatible(b);
}

/// Renders terms in descending graded-lex order; `coefficient` returns the
/// text of a coefficient together with whether it needs a leading minus.
template <class Coeff>
std::string format_polynomial(const Polynomial<Coeff>& p,
                              const std::function<std::string(std::size_t)>& var_name,
                              const std::function<std::pair<bool, std::string>(const Coeff&)>& coefficient) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    auto [neg, text] = coefficient(c);
    std::string body;
    if (mono.degree() == 0) {
      body = text;
    } else if (text == "1") {
      body = mono.format(var_name);
    } else {
      body = text + "*" + mono.format(var_name);
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

}  // namespace nearpoint
