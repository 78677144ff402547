#pragma once

// Exterior forms in the coordinate coframe dx_1..dx_n: real forms on M and
// A-valued forms on M^A, with wedge, exterior derivative, the Lichnerowicz
// differential d_alpha, interior product and Lie derivative.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nearpoint/diff_op.hpp"
#include "nearpoint/errors.hpp"
#include "nearpoint/smooth_fn.hpp"

namespace nearpoint {

/// Strictly increasing 0-based coordinate indices.
using IndexSet = std::vector<std::size_t>;

template <class Coeff>
class Form {
 public:
  using Function = Polynomial<Coeff>;
  using Terms = std::map<IndexSet, Function>;

  Form(std::size_t n, std::size_t degree, Coeff zero) : n_(n), degree_(degree), zero_(std::move(zero)) {}

  /// The 0-form given by a function.
  static Form function(const Function& f) {
    Form out(f.n_vars(), 0, f.zero_coefficient());
    out.add(IndexSet{}, f);
    return out;
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  const Coeff& zero_coefficient() const noexcept { return zero_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Function zero_function() const { return Function(n_, zero_); }

  Function coefficient(const IndexSet& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? zero_function() : it->second;
  }

  /// Adds f * dx_{idx[0]} ^ ... ^ dx_{idx[k-1]}; idx must be strictly increasing.
  void add(const IndexSet& idx, const Function& f) {
    if (idx.size() != degree_) throw MismatchError("form term has the wrong degree");
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (idx[p] >= n_) throw MismatchError("form index out of range");
      if (p > 0 && idx[p - 1] >= idx[p]) throw MismatchError("form indices must be strictly increasing");
    }
    if (f.n_vars() != n_) throw MismatchError("form coefficient over the wrong number of variables");
    check_compatible(zero_, f.zero_coefficient());
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void compatible(const Form& o) const {
    if (o.n_ != n_ || o.degree_ != degree_) throw MismatchError("forms of different dimension or degree");
    check_compatible(zero_, o.zero_);
  }

  Form& operator+=(const Form& o) {
    compatible(o);
    for (const auto& [idx, f] : o.terms_) add(idx, f);
    return *this;
  }
  Form& operator-=(const Form& o) {
    compatible(o);
    for (const auto& [idx, f] : o.terms_) add(idx, -f);
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  Form operator-() const {
    Form out(n_, degree_, zero_);
    for (const auto& [idx, f] : terms_) out.add(idx, -f);
    return out;
  }

  /// g * eta.
  Form multiplied(const Function& g) const {
    Form out(n_, degree_, zero_);
    for (const auto& [idx, f] : terms_) out.add(idx, g * f);
    return out;
  }

  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  std::size_t degree_;
  Coeff zero_;
  Terms terms_;
};

using RForm = Form<Rational>;
using AForm = Form<AElement>;

/// 1-form sum_j c_j dx_j.
template <class Coeff>
Form<Coeff> one_form(const std::vector<Polynomial<Coeff>>& coefficients) {
  if (coefficients.empty()) throw MismatchError("one_form needs n >= 1 coefficients");
  Form<Coeff> out(coefficients.size(), 1, coefficients[0].zero_coefficient());
  for (std::size_t j = 0; j < coefficients.size(); ++j) out.add(IndexSet{j}, coefficients[j]);
  return out;
}

/// eta ^ zeta; graded commutative and bilinear over the coefficient functions.
template <class Coeff>
Form<Coeff> wedge(const Form<Coeff>& eta, const Form<Coeff>& zeta) {
  if (eta.n() != zeta.n()) throw MismatchError("wedge of forms on different manifolds");
  check_compatible(eta.zero_coefficient(), zeta.zero_coefficient());
  Form<Coeff> out(eta.n(), eta.degree() + zeta.degree(), eta.zero_coefficient());
  for (const auto& [i, f] : eta.terms()) {
    for (const auto& [j, g] : zeta.terms()) {
      IndexSet merged;
      bool repeated = false;
      std::size_t inversions = 0;
      for (std::size_t a : i) {
        for (std::size_t b : j) {
          if (a == b) repeated = true;
          if (a > b) ++inversions;
        }
      }
      if (repeated) continue;
      merged.insert(merged.end(), i.begin(), i.end());
      merged.insert(merged.end(), j.begin(), j.end());
      std::sort(merged.begin(), merged.end());
      auto product = f * g;
      out.add(merged, inversions % 2 == 0 ? product : -product);
    }
  }
  return out;
}

/// Coordinate exterior derivative (d on M, d^A on M^A); d(top degree) = 0.
template <class Coeff>
Form<Coeff> exterior_derivative(const Form<Coeff>& eta) {
  Form<Coeff> out(eta.n(), eta.degree() + 1, eta.zero_coefficient());
  for (const auto& [idx, f] : eta.terms()) {
    for (std::size_t j = 0; j < eta.n(); ++j) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      auto df = f.partial(j);
      if (df.is_zero()) continue;
      // dx_j ^ dx_I: moving dx_j into place passes every index of I below j.
      const auto below = static_cast<std::size_t>(std::count_if(idx.begin(), idx.end(), [&](std::size_t i) { return i < j; }));
      IndexSet merged = idx;
      merged.insert(merged.begin() + static_cast<std::ptrdiff_t>(below), j);
      out.add(merged, below % 2 == 0 ? df : -df);
    }
  }
  return out;
}

inline AForm d_A(const AForm& eta) { return exterior_derivative(eta); }

/// d_alpha eta = d eta + alpha ^ eta (on functions: d phi + phi * alpha).
template <class Coeff>
Form<Coeff> d_alpha(const Form<Coeff>& eta, const Form<Coeff>& alpha) {
  if (alpha.degree() != 1) throw MismatchError("d_alpha needs a 1-form alpha");
  return exterior_derivative(eta) + wedge(alpha, eta);
}

/// Contraction in the first slot with the vector field sum_j v_j d/dx_j.
template <class Coeff>
Form<Coeff> interior(std::span<const Polynomial<Coeff>> v, const Form<Coeff>& eta) {
  if (v.size() != eta.n()) throw MismatchError("interior: field and form live on different manifolds");
  if (eta.degree() == 0) return Form<Coeff>(eta.n(), 0, eta.zero_coefficient());
  Form<Coeff> out(eta.n(), eta.degree() - 1, eta.zero_coefficient());
  for (const auto& [idx, f] : eta.terms()) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const auto& vi = v[idx[p]];
      if (vi.is_zero()) continue;
      IndexSet rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      auto term = vi * f;
      out.add(rest, p % 2 == 0 ? term : -term);
    }
  }
  return out;
}

/// i_X eta for a vector field X on M^A. Operators with a multiplier are rejected:
/// the multiplier enters through d_alpha, not through the contraction.
inline AForm interior(const DiffOp& x, const AForm& eta) {
  if (!x.is_vector_field()) throw UnsupportedError("interior product needs a vector field (zero multiplier)");
  return interior<AElement>(std::span<const APoly>(x.components), eta);
}

/// eta(X_1, ..., X_k) = i_{X_k} ... i_{X_1} eta, as a function.
inline APoly evaluate(const AForm& eta, std::span<const DiffOp> fields) {
  if (fields.size() != eta.degree()) throw MismatchError("evaluate: number of fields differs from form degree");
  AForm current = eta;
  for (const auto& x : fields) current = interior(x, current);
  return current.coefficient(IndexSet{});
}

template <class Coeff>
Polynomial<Coeff> evaluate(const Form<Coeff>& eta, const std::vector<std::vector<Polynomial<Coeff>>>& fields) {
  if (fields.size() != eta.degree()) throw MismatchError("evaluate: number of fields differs from form degree");
  Form<Coeff> current = eta;
  for (const auto& v : fields) current = interior<Coeff>(std::span<const Polynomial<Coeff>>(v), current);
  return current.coefficient(IndexSet{});
}

/// Coefficientwise prolongation eta -> eta^A in the coframe (dx_i)^A.
inline AForm prolong_form(const RForm& eta, const AlgebraPtr& alg) {
  AForm out(eta.n(), eta.degree(), AElement::zero(alg));
  for (const auto& [idx, f] : eta.terms()) out.add(idx, prolong(f, alg));
  return out;
}

/// Lie derivative along X = Z + mu with respect to the differential d_alpha
/// (plain d^A when alpha is absent): theta_X = i_Z d_alpha + d_alpha i_Z + mu.
inline AForm lie_derivative(const DiffOp& x, const AForm& eta, const std::optional<AForm>& alpha) {
  const DiffOp z = vector_field(x.components);
  auto d = [&](const AForm& f) { return alpha ? d_alpha(f, *alpha) : d_A(f); };
  AForm out = interior(z, d(eta));
  if (eta.degree() > 0) out += d(interior(z, eta));
  out += eta.multiplied(x.multiplier);
  return out;
}

template <class Coeff>
std::string format_form(const Form<Coeff>& eta, const std::function<std::string(const Polynomial<Coeff>&)>& fn) {
  std::string out = "form" + std::to_string(eta.degree()) + "{ ";
  bool first = true;
  for (const auto& [idx, f] : eta.terms()) {
    if (!first) out += ", ";
    first = false;
    out += "(";
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (p > 0) out += ",";
      out += std::to_string(idx[p] + 1);
    }
    out += "): " + fn(f);
  }
  return out + (first ? "}" : " }");
}

inline std::string to_string(const RForm& eta) {
  return format_form<Rational>(eta, [](const Poly& f) { return to_string(f); });
}
inline std::string to_string(const AForm& eta) {
  return format_form<AElement>(eta, [](const APoly& f) { return to_string(f); });
}

}  // namespace nearpoint
