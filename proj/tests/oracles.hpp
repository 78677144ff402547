#pragma once

// Independent reference computations used to freeze expected values. None of
// these go through substitution, bracket reconstruction or the solvers.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nearpoint/nearpoint.hpp"

namespace oracle {

using namespace nearpoint;

/// Algebras of the fixed test matrix: R[eps]/(eps^2), R[eps]/(eps^4), R[x,y]/m^3.
inline std::vector<AlgebraPtr> test_algebras() {
  return {make_jet_algebra_1d(1), make_jet_algebra_1d(3),
          make_truncated_polynomial_algebra({"x", "y"}, {}, 2u)};
}

inline std::string algebra_name(const AlgebraPtr& alg) {
  std::string out = "A(";
  for (std::size_t i = 0; i < alg->dim(); ++i) out += (i ? "," : "") + alg->label(i);
  return out + ")";
}

inline Rational factorial(unsigned k) {
  Rational out(1);
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

/// f^A(xi) as the finite Taylor sum over multi-indices b with |b| <= deg f of
/// d^b f(x0) / b! * (xi - x0)^b, with x0 the origin of xi.
inline AElement taylor_eval(const Poly& f, const NearPoint& xi) {
  const std::size_t n = xi.dim();
  const auto x0 = xi.origin();
  std::vector<AElement> nil;
  for (std::size_t j = 0; j < n; ++j) nil.push_back(xi.coords[j] - AElement::scalar(xi.algebra, x0[j]));
  unsigned max_degree = 0;
  for (const auto& [m, c] : f.terms()) max_degree = std::max(max_degree, m.degree());

  AElement sum = AElement::zero(xi.algebra);
  std::vector<unsigned> b(n, 0);
  std::function<void(std::size_t, unsigned, const Poly&)> rec = [&](std::size_t j, unsigned left, const Poly& df) {
    if (j == n) {
      Rational weight = poly_eval(df, x0);
      if (is_zero(weight)) return;
      AElement term = AElement::one(xi.algebra);
      for (std::size_t i = 0; i < n; ++i) {
        weight /= factorial(b[i]);
        term = term * pow(nil[i], b[i]);
      }
      term *= weight;
      sum += term;
      return;
    }
    Poly d = df;
    for (unsigned k = 0; k <= left; ++k) {
      b[j] = k;
      rec(j + 1, left - k, d);
      d = d.partial(j);
    }
    b[j] = 0;
  };
  rec(0, max_degree, f);
  return sum;
}

/// Closed form of [X, Y]: components X^Z(Y_j) - Y^Z(X_j), multiplier X^Z(mu_Y) - Y^Z(mu_X),
/// where ^Z is the derivation part alone.
inline DiffOp bracket_closed_form(const DiffOp& x, const DiffOp& y) {
  auto derive = [](const DiffOp& op, const APoly& phi) {
    APoly out = zero_like(phi);
    for (std::size_t j = 0; j < op.n(); ++j) out += op.components[j] * phi.partial(j);
    return out;
  };
  DiffOp out = x;
  for (std::size_t j = 0; j < x.n(); ++j) {
    out.components[j] = derive(x, y.components[j]) - derive(y, x.components[j]);
  }
  out.multiplier = derive(x, y.multiplier) - derive(y, x.multiplier);
  return out;
}

/// sum Lambda^ij,A d_i phi d_j psi + phi E^A(psi) - psi E^A(phi), directly on A-polynomials.
inline APoly jacobi_formula(const JacobiData& jd, const APoly& phi, const APoly& psi) {
  const AlgebraPtr& alg = algebra_of(phi);
  auto reeb = [&](const APoly& p) {
    APoly out = zero_like(p);
    for (std::size_t j = 0; j < jd.n; ++j) out += prolong(jd.e[j], alg) * p.partial(j);
    return out;
  };
  APoly out = phi * reeb(psi) - psi * reeb(phi);
  for (std::size_t i = 0; i < jd.n; ++i) {
    for (std::size_t j = 0; j < jd.n; ++j) out += prolong(jd.lambda[i][j], alg) * phi.partial(i) * psi.partial(j);
  }
  return out;
}

/// Hamiltonian field on the plane for omega = c dx^dy, alpha = a1 dx + a2 dy (constants):
/// i_X omega = c (X1 dy - X2 dx) = d_alpha f.
inline std::vector<Poly> planar_hamiltonian(const Rational& c, const Rational& a1, const Rational& a2, const Poly& f) {
  const Rational inv = Rational(1) / c;
  return {(f.partial(1) + f.scaled(a2)).scaled(inv), -(f.partial(0) + f.scaled(a1)).scaled(inv)};
}

/// -omega(X_f, X_g) for the same planar data.
inline Poly planar_bracket(const Rational& c, const Rational& a1, const Rational& a2, const Poly& f, const Poly& g) {
  const auto xf = planar_hamiltonian(c, a1, a2, f);
  const auto xg = planar_hamiltonian(c, a1, a2, g);
  return -(xf[0] * xg[1] - xf[1] * xg[0]).scaled(c);
}

}  // namespace oracle
