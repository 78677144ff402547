#pragma once

// Polynomial models of C^inf(M), C^inf(M^A, A) and of near points, for M = R^n
// with its global chart, plus the prolongation f -> f^A.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nearpoint/errors.hpp"
#include "nearpoint/polynomial.hpp"
#include "nearpoint/rational.hpp"
#include "nearpoint/weil_algebra.hpp"

namespace nearpoint {

using Poly = Polynomial<Rational>;
using APoly = Polynomial<AElement>;

inline Poly zero_poly(std::size_t n) { return Poly(n, Rational(0)); }
inline Poly constant_poly(std::size_t n, const Rational& c) { return Poly::constant(n, c); }
inline Poly coordinate(std::size_t n, std::size_t j) { return Poly::variable(n, j, Rational(1)); }

inline APoly zero_apoly(const AlgebraPtr& alg, std::size_t n) { return APoly(n, AElement::zero(alg)); }
inline APoly constant_apoly(std::size_t n, const AElement& a) { return APoly::constant(n, a); }
/// x_j^A, the prolonged coordinate function (0-based j).
inline APoly coordinate_A(const AlgebraPtr& alg, std::size_t n, std::size_t j) {
  return APoly::variable(n, j, AElement::one(alg));
}

inline const AlgebraPtr& algebra_of(const APoly& p) { return p.zero_coefficient().algebra(); }

/// f^A: formal substitution x_j -> x_j^A, coefficients embedded through the unit.
inline APoly prolong(const Poly& f, const AlgebraPtr& alg) {
  APoly out = zero_apoly(alg, f.n_vars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, AElement::scalar(alg, c));
  return out;
}

/// a * phi for a in A.
inline APoly a_scale(const AElement& a, const APoly& phi) { return phi.scaled(a); }

/// Coefficientwise augmentation: the real polynomial obtained from phi by A -> R.
inline Poly augmentation(const APoly& phi) {
  Poly out = zero_poly(phi.n_vars());
  for (const auto& [m, c] : phi.terms()) out.add_term(m, augmentation(c));
  return out;
}

/// Advisory real-valuedness check: constants that are real multiples of 1_A.
/// The construction flag (APoly::real_valued) remains authoritative.
inline bool looks_real_valued(const APoly& phi) {
  return phi.is_constant() && phi.constant_term().is_scalar();
}

/// A real constant as a member of C^inf(M^A) (flagged real-valued).
inline APoly real_constant(const AlgebraPtr& alg, std::size_t n, const Rational& c) {
  APoly p = constant_apoly(n, AElement::scalar(alg, c));
  p.mark_real_valued();
  return p;
}

/// xi in M^A = A^n, given by its A-valued coordinates.
struct NearPoint {
  AlgebraPtr algebra;
  std::vector<AElement> coords;

  NearPoint(AlgebraPtr alg, std::vector<AElement> c) : algebra(std::move(alg)), coords(std::move(c)) {
    for (const auto& x : coords) {
      if (x.algebra().get() != algebra.get()) throw MismatchError("near point coordinate over a different algebra");
    }
  }

  std::size_t dim() const noexcept { return coords.size(); }

  /// x_0 in M, the origin of xi.
  std::vector<Rational> origin() const {
    std::vector<Rational> x0;
    for (const auto& c : coords) x0.push_back(augmentation(c));
    return x0;
  }
};

inline AElement apoly_eval(const APoly& phi, const NearPoint& xi) {
  if (algebra_of(phi).get() != xi.algebra.get()) throw MismatchError("apoly_eval: algebra mismatch");
  return phi.evaluate<AElement>(std::span<const AElement>(xi.coords), AElement::zero(xi.algebra),
                                AElement::one(xi.algebra));
}

inline Rational poly_eval(const Poly& f, std::span<const Rational> x) {
  return f.evaluate<Rational>(x, Rational(0), Rational(1));
}

/// Polynomial with real coefficients, e.g. "3/2*x1^2*x2 - x3".
inline std::string to_string(const Poly& f) {
  return format_polynomial<Rational>(f, coordinate_name, [](const Rational& c) {
    const bool neg = sgn(c) < 0;
    return std::pair<bool, std::string>(neg, to_string(neg ? Rational(-c) : c));
  });
}

/// A-polynomial with basis labels inside coefficients, e.g. "eps*x1^2 + (1 + eps)*x2".
inline std::string to_string(const APoly& phi) {
  if (phi.is_constant()) return to_string(phi.constant_term());
  const auto& alg = *algebra_of(phi);
  return format_polynomial<AElement>(phi, coordinate_name, [&](const AElement& a) {
    std::size_t nonzero = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      if (!is_zero(a[i])) {
        ++nonzero;
        last = i;
      }
    }
    if (nonzero == 1) {
      const Rational& c = a[last];
      const bool neg = sgn(c) < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (last == 0) return std::pair<bool, std::string>(neg, to_string(mag));
      const std::string text = (mag == 1) ? alg.label(last) : to_string(mag) + "*" + alg.label(last);
      return std::pair<bool, std::string>(neg, text);
    }
    return std::pair<bool, std::string>(false, "(" + to_string(a) + ")");
  });
}

}  // namespace nearpoint
