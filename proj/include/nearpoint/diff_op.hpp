#pragma once

// Order-<=1 differential operators on M^A, their tilde extension and the
// A-Lie-Rinehart bracket.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearpoint/errors.hpp"
#include "nearpoint/smooth_fn.hpp"

namespace nearpoint {

/// X = sum_j Z_j (d/dx_j)^A + mu, stored in the prolonged coordinate frame.
/// Acting on f in C^inf(M): X(f) = sum_j Z_j * d_j f^A + f^A * mu, so mu = X(1).
/// mu = 0 exactly when X is a vector field on M^A.
struct DiffOp {
  std::vector<APoly> components;
  APoly multiplier;

  std::size_t n() const noexcept { return components.size(); }
  const AlgebraPtr& algebra() const { return algebra_of(multiplier); }
  bool is_vector_field() const { return multiplier.is_zero(); }

  friend bool operator==(const DiffOp&, const DiffOp&) = default;
};

inline DiffOp zero_diff_op(const AlgebraPtr& alg, std::size_t n) {
  return DiffOp{std::vector<APoly>(n, zero_apoly(alg, n)), zero_apoly(alg, n)};
}

/// Vector field from its components (multiplier 0).
inline DiffOp vector_field(std::vector<APoly> components) {
  if (components.empty()) throw MismatchError("vector field needs at least one component");
  APoly mu = zero_like(components.front());
  return DiffOp{std::move(components), std::move(mu)};
}

/// (d/dx_j)^A, 0-based j.
inline DiffOp coordinate_field(const AlgebraPtr& alg, std::size_t n, std::size_t j) {
  DiffOp x = zero_diff_op(alg, n);
  x.components.at(j) = constant_apoly(n, AElement::one(alg));
  return x;
}

/// The pure multiplication operator f -> f^A * mu.
inline DiffOp multiplication_operator(const APoly& mu) {
  return DiffOp{std::vector<APoly>(mu.n_vars(), zero_like(mu)), mu};
}

namespace detail {

inline void check_op(const DiffOp& x) {
  for (const auto& z : x.components) x.multiplier.compatible(z);
  if (x.multiplier.n_vars() != x.n()) throw MismatchError("diff op has component count != manifold dimension");
}

inline void check_pair(const DiffOp& x, const DiffOp& y) {
  check_op(x);
  check_op(y);
  x.multiplier.compatible(y.multiplier);
}

}  // namespace detail

/// The derivation part sum_j Z_j * d_j phi.
inline APoly derivation_apply(const DiffOp& x, const APoly& phi) {
  detail::check_op(x);
  x.multiplier.compatible(phi);
  APoly out = zero_like(phi);
  for (std::size_t j = 0; j < x.n(); ++j) {
    if (x.components[j].is_zero()) continue;
    out += x.components[j] * phi.partial(j);
  }
  return out;
}

/// X~(phi) = sum_j Z_j d_j phi + phi * mu: the A-linear extension of X to C^inf(M^A, A).
inline APoly tilde_apply(const DiffOp& x, const APoly& phi) {
  APoly out = derivation_apply(x, phi);
  out += phi * x.multiplier;
  return out;
}

/// X(f) for f in C^inf(M).
inline APoly apply(const DiffOp& x, const Poly& f) {
  if (f.n_vars() != x.n()) throw MismatchError("apply: function and operator live on different manifolds");
  return tilde_apply(x, prolong(f, x.algebra()));
}

/// Recovers an operator from its action on 1 and on the coordinate functions:
/// mu = act(1), Z_j = act(x_j) - x_j^A * mu. Exact for every order-<=1 operator.
inline DiffOp reconstruct_diff_op(const AlgebraPtr& alg, std::size_t n, const std::function<APoly(const Poly&)>& act) {
  DiffOp out = zero_diff_op(alg, n);
  out.multiplier = act(constant_poly(n, Rational(1)));
  for (std::size_t j = 0; j < n; ++j) {
    out.components[j] = act(coordinate(n, j)) - coordinate_A(alg, n, j) * out.multiplier;
  }
  return out;
}

/// [X, Y] = X~ o Y - Y~ o X, rebuilt from its action on 1 and the coordinates.
inline DiffOp bracket(const DiffOp& x, const DiffOp& y) {
  detail::check_pair(x, y);
  return reconstruct_diff_op(x.algebra(), x.n(), [&](const Poly& f) {
    return tilde_apply(x, apply(y, f)) - tilde_apply(y, apply(x, f));
  });
}

/// phi * X: scales components and multiplier, so (phi X)(f) = phi * X(f).
inline DiffOp module_action(const APoly& phi, const DiffOp& x) {
  detail::check_op(x);
  DiffOp out = x;
  for (auto& z : out.components) z = phi * z;
  out.multiplier = phi * out.multiplier;
  return out;
}

inline DiffOp scale(const AElement& a, const DiffOp& x) {
  return module_action(constant_apoly(x.n(), a), x);
}

inline DiffOp operator+(const DiffOp& x, const DiffOp& y) {
  detail::check_pair(x, y);
  DiffOp out = x;
  for (std::size_t j = 0; j < x.n(); ++j) out.components[j] += y.components[j];
  out.multiplier += y.multiplier;
  return out;
}

inline DiffOp operator-(const DiffOp& x, const DiffOp& y) {
  detail::check_pair(x, y);
  DiffOp out = x;
  for (std::size_t j = 0; j < x.n(); ++j) out.components[j] -= y.components[j];
  out.multiplier -= y.multiplier;
  return out;
}

inline std::string to_string(const DiffOp& x) {
  std::string out = "diffop{ Z = [";
  for (std::size_t j = 0; j < x.n(); ++j) {
    if (j > 0) out += ", ";
    out += to_string(x.components[j]);
  }
  return out + "], mu = " + to_string(x.multiplier) + " }";
}

/// Outcome of one identity check: pass, or the first failing identity with a witness.
struct Verdict {
  bool ok = true;
  std::string identity;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string identity, std::string witness) { return {false, std::move(identity), std::move(witness)}; }
};

/// Checks on (X, Y, phi):
///  [X, phi Y] = [X~(phi) - phi X~(1)] Y + phi [X, Y]    (operator equality and on each f)
///  [X~, Y~](psi) = [X, Y]~(psi)                          (each psi, including f^A)
/// over the supplied test functions.
inline Verdict check_lie_rinehart(const DiffOp& x, const DiffOp& y, const APoly& phi, const std::vector<Poly>& fs,
                                  const std::vector<APoly>& psis) {
  const AlgebraPtr& alg = x.algebra();
  const std::size_t n = x.n();
  const DiffOp xy = bracket(x, y);
  const DiffOp lhs = bracket(x, module_action(phi, y));
  const APoly one = constant_apoly(n, AElement::one(alg));
  const APoly anchor = tilde_apply(x, phi) - phi * tilde_apply(x, one);
  const DiffOp rhs = module_action(anchor, y) + module_action(phi, xy);
  if (!(lhs == rhs)) {
    return Verdict::fail("[X, phi.Y] = [X~(phi) - phi.X~(1)].Y + phi.[X,Y]",
                         "lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs));
  }
  for (const auto& f : fs) {
    const APoly l = apply(lhs, f);
    const APoly r = tilde_apply(x, phi) * apply(y, f) - phi * apply(y, f) * tilde_apply(x, one) + phi * apply(xy, f);
    if (!(l == r)) {
      return Verdict::fail("[X, phi.Y](f) expansion", "f = " + to_string(f) + "; lhs = " + to_string(l) +
                                                          "; rhs = " + to_string(r));
    }
  }
  std::vector<APoly> all_psis = psis;
  for (const auto& f : fs) all_psis.push_back(prolong(f, alg));
  for (const auto& psi : all_psis) {
    const APoly l = tilde_apply(x, tilde_apply(y, psi)) - tilde_apply(y, tilde_apply(x, psi));
    const APoly r = tilde_apply(xy, psi);
    if (!(l == r)) {
      return Verdict::fail("[X~, Y~] = [X, Y]~", "psi = " + to_string(psi) + "; lhs = " + to_string(l) +
                                                     "; rhs = " + to_string(r));
    }
  }
  return Verdict::pass();
}

}  // namespace nearpoint
