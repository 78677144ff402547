#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nearpoint/nearpoint.hpp"

namespace support {

using namespace nearpoint;

inline AElement element(const AlgebraPtr& alg, std::initializer_list<int> coords) {
  Coords c;
  for (int x : coords) c.emplace_back(x);
  c.resize(alg->dim(), Rational(0));
  return AElement(alg, std::move(c));
}

inline AElement element(const AlgebraPtr& alg, std::vector<Rational> coords) {
  coords.resize(alg->dim(), Rational(0));
  return AElement(alg, std::move(coords));
}

/// Polynomial literal over R^n, e.g. poly(2, "x1^2 - 3/2*x2").
inline Poly poly(std::size_t n, const std::string& text) {
  const Problem p = parse_problem("algebra = jet{ order = 1 }\nn = " + std::to_string(n) + "\npoly f = " + text + "\n");
  return p.polys.at("f");
}

/// A-polynomial literal, with the algebra's identifier labels allowed as coefficients.
inline APoly apoly(const AlgebraPtr& alg, std::size_t n, const std::string& text) {
  Problem p;
  p.algebra = alg;
  p.n = n;
  for (std::size_t i = 1; i < alg->dim(); ++i) p.algebra_names.emplace(alg->label(i), AElement::basis(alg, i));
  return parse_apoly(p, text);
}

}  // namespace support
