#pragma once

// Dense square matrices over a commutative ring (Poly, APoly, Rational):
// cofactor determinant and adjugate, enough for the n <= 4 systems we solve.

#include <cstddef>
#include <vector>

#include "nearpoint/errors.hpp"
#include "nearpoint/smooth_fn.hpp"

namespace nearpoint {

template <class R>
using Matrix = std::vector<std::vector<R>>;

using PolyMatrix = Matrix<Poly>;
using APolyMatrix = Matrix<APoly>;

namespace detail {

template <class R>
void check_square(const Matrix<R>& m) {
  if (m.empty()) throw MismatchError("empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw MismatchError("matrix is not square");
  }
}

template <class R>
Matrix<R> minor_matrix(const Matrix<R>& m, std::size_t row, std::size_t col) {
  Matrix<R> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<R> r;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != col) r.push_back(m[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

template <class R>
Matrix<R> transpose(const Matrix<R>& m) {
  detail::check_square(m);
  Matrix<R> out = m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[j][i];
  }
  return out;
}

template <class R>
R determinant(const Matrix<R>& m) {
  detail::check_square(m);
  if (m.size() == 1) return m[0][0];
  R out = zero_like(m[0][0]);
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (is_zero(m[0][c])) continue;
    R term = m[0][c] * determinant(detail::minor_matrix(m, 0, c));
    if (c % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

/// adj(M) with M * adj(M) = det(M) * I.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
  detail::check_square(m);
  const std::size_t n = m.size();
  if (n == 1) return Matrix<R>{{one_like(m[0][0])}};
  Matrix<R> out = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      R cof = determinant(detail::minor_matrix(m, i, j));
      out[j][i] = (i + j) % 2 == 0 ? cof : R(-cof);
    }
  }
  return out;
}

template <class R>
Matrix<R> matrix_product(const Matrix<R>& a, const Matrix<R>& b) {
  detail::check_square(a);
  detail::check_square(b);
  if (a.size() != b.size()) throw MismatchError("matrix sizes differ");
  Matrix<R> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      R sum = zero_like(a[0][0]);
      for (std::size_t k = 0; k < a.size(); ++k) sum += a[i][k] * b[k][j];
      out[i][j] = sum;
    }
  }
  return out;
}

template <class R>
std::vector<R> matrix_apply(const Matrix<R>& m, const std::vector<R>& v) {
  detail::check_square(m);
  if (v.size() != m.size()) throw MismatchError("matrix and vector sizes differ");
  std::vector<R> out;
  for (const auto& row : m) {
    R sum = zero_like(v[0]);
    for (std::size_t k = 0; k < v.size(); ++k) sum += row[k] * v[k];
    out.push_back(sum);
  }
  return out;
}

inline APolyMatrix prolong(const PolyMatrix& m, const AlgebraPtr& alg) {
  APolyMatrix out;
  for (const auto& row : m) {
    std::vector<APoly> r;
    for (const auto& f : row) r.push_back(prolong(f, alg));
    out.push_back(std::move(r));
  }
  return out;
}

inline PolyMatrix augmentation(const APolyMatrix& m) {
  PolyMatrix out;
  for (const auto& row : m) {
    std::vector<Poly> r;
    for (const auto& phi : row) r.push_back(augmentation(phi));
    out.push_back(std::move(r));
  }
  return out;
}

/// Pointwise value of an APoly matrix at a near point.
inline AMatrix evaluate_at(const APolyMatrix& m, const NearPoint& xi) {
  AMatrix out;
  for (const auto& row : m) {
    std::vector<AElement> r;
    for (const auto& phi : row) r.push_back(apoly_eval(phi, xi));
    out.push_back(std::move(r));
  }
  return out;
}

/// Inverse of phi when its augmentation is a nonzero constant c:
/// phi = c + nu with nu nilpotent, phi^-1 = sum_k (-nu/c)^k / c.
inline APoly apoly_invert(const APoly& phi) {
  const Poly base = augmentation(phi);
  if (!base.is_constant() || base.is_zero()) {
    throw NotInvertibleError("A-polynomial is not invertible: augmentation " + to_string(base) +
                             " is not a nonzero constant");
  }
  const AlgebraPtr& alg = algebra_of(phi);
  const Rational c_inv = Rational(1) / base.constant_term();
  const APoly nu = phi - prolong(base, alg);
  const APoly step = nu.scaled(Rational(-c_inv));
  const APoly first = constant_apoly(phi.n_vars(), AElement::scalar(alg, c_inv));
  APoly term = first;
  APoly out = first;
  for (std::size_t k = 0; k <= alg->height(); ++k) {
    term = term * step;
    if (term.is_zero()) break;
    out += term;
  }
  if (!(out * phi == constant_apoly(phi.n_vars(), AElement::one(alg)))) {
    throw NotInvertibleError("A-polynomial inverse did not terminate");
  }
  return out;
}

}  // namespace nearpoint
