#pragma once

// A-Jacobi brackets on C^inf(M^A, A): the one induced by a prolonged lcs
// structure (M, alpha, omega), the prolongation of a Jacobi structure (Lambda, E)
// on M through tau_phi, and the generic symplectic Lie-Rinehart-Jacobi engine.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearpoint/diff_op.hpp"
#include "nearpoint/errors.hpp"
#include "nearpoint/forms.hpp"
#include "nearpoint/matrix.hpp"
#include "nearpoint/smooth_fn.hpp"

namespace nearpoint {

/// Locally conformally symplectic data on R^n with cached prolongations.
/// alpha_A and omega_A are plain members so that tests can corrupt them.
struct LcsData {
  AlgebraPtr algebra;
  std::size_t n = 0;
  RForm alpha;
  RForm omega;
  AForm alpha_A;
  AForm omega_A;
};

inline LcsData make_lcs(const AlgebraPtr& alg, RForm alpha, RForm omega) {
  if (alpha.degree() != 1) throw MismatchError("lcs: alpha must be a 1-form");
  if (omega.degree() != 2) throw MismatchError("lcs: omega must be a 2-form");
  if (alpha.n() != omega.n()) throw MismatchError("lcs: alpha and omega live on different manifolds");
  const std::size_t n = omega.n();
  if (n < 2 || n % 2 != 0) throw DegenerateFormError("lcs: manifold dimension must be even and positive");
  AForm alpha_A = prolong_form(alpha, alg);
  AForm omega_A = prolong_form(omega, alg);
  return LcsData{alg, n, std::move(alpha), std::move(omega), std::move(alpha_A), std::move(omega_A)};
}

/// W_ij = omega(d_i, d_j).
template <class Coeff>
Matrix<Polynomial<Coeff>> form_matrix(const Form<Coeff>& omega) {
  if (omega.degree() != 2) throw MismatchError("form_matrix needs a 2-form");
  const std::size_t n = omega.n();
  const Polynomial<Coeff> zero(n, omega.zero_coefficient());
  Matrix<Polynomial<Coeff>> w(n, std::vector<Polynomial<Coeff>>(n, zero));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w[i][j] = omega.coefficient(IndexSet{i, j});
      w[j][i] = -w[i][j];
    }
  }
  return w;
}

template <class Coeff>
std::vector<Polynomial<Coeff>> one_form_coefficients(const Form<Coeff>& eta) {
  if (eta.degree() != 1) throw MismatchError("expected a 1-form");
  std::vector<Polynomial<Coeff>> out;
  for (std::size_t j = 0; j < eta.n(); ++j) out.push_back(eta.coefficient(IndexSet{j}));
  return out;
}

/// d_{alpha^A} omega^A; zero exactly when the prolonged data is lcs-compatible.
inline AForm lcs_defect(const LcsData& lcs) { return d_alpha(lcs.omega_A, lcs.alpha_A); }

/// d alpha; the Lichnerowicz differential squares to zero only when this vanishes.
inline RForm alpha_closedness_defect(const LcsData& lcs) { return exterior_derivative(lcs.alpha); }

inline AForm d_alpha_function(const LcsData& lcs, const APoly& f) {
  return d_alpha(AForm::function(f), lcs.alpha_A);
}

/// Solves i_X omega^A = eta at a near point: (W^A(xi))^T X = eta(xi).
inline std::vector<AElement> solve_interior_at(const AForm& omega_A, const AForm& eta, const NearPoint& xi) {
  const AMatrix t = evaluate_at(transpose(form_matrix(omega_A)), xi);
  if (!inverse(augmentation(t))) {
    std::string origin;
    for (const auto& c : xi.origin()) origin += (origin.empty() ? "" : ", ") + to_string(c);
    throw DegenerateFormError("omega is degenerate at the origin (" + origin + ") of the near point");
  }
  std::vector<AElement> rhs;
  for (const auto& c : one_form_coefficients(eta)) rhs.push_back(apoly_eval(c, xi));
  return multiply(nil_matrix_invert(t), rhs);
}

enum class SolveMode { symbolic, pointwise };

inline const char* to_string(SolveMode m) { return m == SolveMode::symbolic ? "symbolic" : "pointwise"; }

/// Hamiltonian fields X_F with i_{X_F} omega^A = d_{alpha^A} F.
/// Symbolic when the augmentation image of omega^A has constant nonzero
/// determinant; the inverse of (omega^A)^T is then a terminating Neumann
/// series around that image. Otherwise only pointwise solves are available.
class HamiltonianSolver {
 public:
  explicit HamiltonianSolver(LcsData lcs) : lcs_(std::move(lcs)), w_(form_matrix(lcs_.omega_A)) {
    const APolyMatrix t = transpose(w_);
    const PolyMatrix t0 = augmentation(t);
    const Poly det0 = determinant(t0);
    if (det0.is_zero()) throw DegenerateFormError("omega is degenerate: its determinant vanishes identically");
    if (!det0.is_constant()) {
      mode_ = SolveMode::pointwise;
      return;
    }
    mode_ = SolveMode::symbolic;
    const AlgebraPtr& alg = lcs_.algebra;
    const std::size_t n = lcs_.n;
    PolyMatrix inv0 = adjugate(t0);
    const Rational scale = Rational(1) / det0.constant_term();
    for (auto& row : inv0) {
      for (auto& f : row) f = f.scaled(scale);
    }
    const APolyMatrix p = prolong(inv0, alg);
    const APolyMatrix t0_a = prolong(t0, alg);
    APolyMatrix step = p;
    {
      APolyMatrix nil = t;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) nil[i][j] = t[i][j] - t0_a[i][j];
      }
      step = matrix_product(p, nil);
      for (auto& row : step) {
        for (auto& f : row) f = -f;
      }
    }
    APolyMatrix sum = identity(alg, n);
    APolyMatrix term = step;
    for (std::size_t k = 0; k <= alg->height() && !is_zero_matrix(term); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
      }
      term = matrix_product(term, step);
    }
    inverse_ = matrix_product(sum, p);
    if (!(matrix_product(t, inverse_) == identity(alg, n))) {
      throw NotInvertibleError("Neumann series for omega^A did not terminate");
    }
  }

  const LcsData& data() const noexcept { return lcs_; }
  SolveMode mode() const noexcept { return mode_; }
  /// W_ij = omega^A(d_i^A, d_j^A).
  const APolyMatrix& matrix() const noexcept { return w_; }

  DiffOp field(const APoly& f) const {
    require_symbolic();
    return vector_field(matrix_apply(inverse_, one_form_coefficients(d_alpha_function(lcs_, f))));
  }

  /// i_{X_F} omega^A - d_{alpha^A} F, zero for every field returned by field().
  AForm residual(const DiffOp& x, const APoly& f) const {
    return interior(x, lcs_.omega_A) - d_alpha_function(lcs_, f);
  }

  /// {F, G} = -omega^A(X_F, X_G).
  APoly bracket(const APoly& f, const APoly& g) const {
    const std::vector<DiffOp> fields{field(f), field(g)};
    return -evaluate(lcs_.omega_A, fields);
  }

  /// rho_{alpha^A}(X)(G) = X~(G) + G * alpha^A(X).
  APoly rho_apply(const DiffOp& x, const APoly& g) const {
    APoly alpha_x = zero_like(g);
    const auto a = one_form_coefficients(lcs_.alpha_A);
    for (std::size_t j = 0; j < lcs_.n; ++j) alpha_x += a[j] * x.components[j];
    return tilde_apply(x, g) + g * alpha_x;
  }

  std::vector<AElement> field_at(const APoly& f, const NearPoint& xi) const {
    return solve_interior_at(lcs_.omega_A, d_alpha_function(lcs_, f), xi);
  }

  AElement bracket_at(const APoly& f, const APoly& g, const NearPoint& xi) const {
    const auto x = field_at(f, xi);
    const auto y = field_at(g, xi);
    return -pairing_at(x, y, xi);
  }

  AElement rho_at(const APoly& f, const APoly& g, const NearPoint& xi) const {
    const auto x = field_at(f, xi);
    const auto a = one_form_coefficients(lcs_.alpha_A);
    AElement out = AElement::zero(lcs_.algebra);
    const AElement gx = apoly_eval(g, xi);
    for (std::size_t j = 0; j < lcs_.n; ++j) {
      out += x[j] * (apoly_eval(g.partial(j), xi) + gx * apoly_eval(a[j], xi));
    }
    return out;
  }

  /// omega^A(xi)(x, y).
  AElement pairing_at(const std::vector<AElement>& x, const std::vector<AElement>& y, const NearPoint& xi) const {
    const AMatrix w = evaluate_at(w_, xi);
    AElement out = AElement::zero(lcs_.algebra);
    for (std::size_t i = 0; i < lcs_.n; ++i) {
      for (std::size_t j = 0; j < lcs_.n; ++j) {
        if (i != j) out += w[i][j] * x[i] * y[j];
      }
    }
    return out;
  }

 private:
  void require_symbolic() const {
    if (mode_ != SolveMode::symbolic) {
      throw UnsupportedError("symbolic Hamiltonian solve needs omega with constant nonzero determinant; use pointwise solves");
    }
  }

  static APolyMatrix identity(const AlgebraPtr& alg, std::size_t n) {
    APolyMatrix out(n, std::vector<APoly>(n, zero_apoly(alg, n)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = constant_apoly(n, AElement::one(alg));
    return out;
  }

  static bool is_zero_matrix(const APolyMatrix& m) {
    for (const auto& row : m) {
      for (const auto& f : row) {
        if (!f.is_zero()) return false;
      }
    }
    return true;
  }

  LcsData lcs_;
  APolyMatrix w_;
  SolveMode mode_ = SolveMode::pointwise;
  APolyMatrix inverse_;
};

inline DiffOp hamiltonian(const LcsData& lcs, const APoly& f) { return HamiltonianSolver(lcs).field(f); }

/// Hamiltonian field on M as numerators over a common denominator:
/// X_f = adj(W^T) (df + f alpha) / det(W^T).
struct BaseField {
  std::vector<Poly> numerators;
  Poly denominator;
};

inline BaseField base_hamiltonian_fraction(const LcsData& lcs, const Poly& f) {
  const PolyMatrix t = transpose(form_matrix(lcs.omega));
  const Poly det = determinant(t);
  if (det.is_zero()) throw DegenerateFormError("omega is degenerate: its determinant vanishes identically");
  const RForm b = d_alpha(RForm::function(f), lcs.alpha);
  return BaseField{matrix_apply(adjugate(t), one_form_coefficients(b)), det};
}

/// Polynomial Hamiltonian field on M; needs a constant determinant.
inline std::vector<Poly> base_hamiltonian(const LcsData& lcs, const Poly& f) {
  BaseField bf = base_hamiltonian_fraction(lcs, f);
  if (!bf.denominator.is_constant()) throw UnsupportedError("base Hamiltonian field is not polynomial");
  const Rational scale = Rational(1) / bf.denominator.constant_term();
  for (auto& c : bf.numerators) c = c.scaled(scale);
  return bf.numerators;
}

/// {f, g} = -omega(X_f, X_g) on M.
inline Poly base_bracket(const LcsData& lcs, const Poly& f, const Poly& g) {
  const auto x = base_hamiltonian(lcs, f);
  const auto y = base_hamiltonian(lcs, g);
  const PolyMatrix w = form_matrix(lcs.omega);
  Poly out = zero_poly(lcs.n);
  for (std::size_t i = 0; i < lcs.n; ++i) {
    for (std::size_t j = 0; j < lcs.n; ++j) out -= w[i][j] * x[i] * y[j];
  }
  return out;
}

/// (X_f)^A at a near point, prolonging numerators and denominator separately.
inline std::vector<AElement> prolonged_base_field_at(const LcsData& lcs, const Poly& f, const NearPoint& xi) {
  const BaseField bf = base_hamiltonian_fraction(lcs, f);
  const AElement inv = invert(apoly_eval(prolong(bf.denominator, lcs.algebra), xi));
  std::vector<AElement> out;
  for (const auto& c : bf.numerators) out.push_back(apoly_eval(prolong(c, lcs.algebra), xi) * inv);
  return out;
}

/// {f, g}^A at a near point: -N_f^T W N_g / D^2 with every piece prolonged.
inline AElement prolonged_base_bracket_at(const LcsData& lcs, const Poly& f, const Poly& g, const NearPoint& xi) {
  const auto x = prolonged_base_field_at(lcs, f, xi);
  const auto y = prolonged_base_field_at(lcs, g, xi);
  const PolyMatrix w = form_matrix(lcs.omega);
  AElement out = AElement::zero(lcs.algebra);
  for (std::size_t i = 0; i < lcs.n; ++i) {
    for (std::size_t j = 0; j < lcs.n; ++j) {
      if (i != j) out -= apoly_eval(prolong(w[i][j], lcs.algebra), xi) * x[i] * y[j];
    }
  }
  return out;
}

/// A-bilinear bracket on C^inf(M^A, A) with the construction that produced it.
struct ABracket {
  std::string kind;
  std::function<APoly(const APoly&, const APoly&)> eval;

  APoly operator()(const APoly& phi, const APoly& psi) const { return eval(phi, psi); }
};

inline ABracket lcs_bracket(const LcsData& lcs) {
  auto solver = std::make_shared<const HamiltonianSolver>(lcs);
  if (solver->mode() != SolveMode::symbolic) {
    throw UnsupportedError("lcs bracket as a function needs omega with constant nonzero determinant");
  }
  return ABracket{"lcs", [solver](const APoly& f, const APoly& g) { return solver->bracket(f, g); }};
}

/// Jacobi structure on M: {f,g} = sum Lambda^ij d_i f d_j g + f E(g) - g E(f).
struct JacobiData {
  std::size_t n = 0;
  PolyMatrix lambda;
  std::vector<Poly> e;
};

inline JacobiData make_jacobi(PolyMatrix lambda, std::vector<Poly> e) {
  const std::size_t n = e.size();
  if (n == 0 || lambda.size() != n) throw MismatchError("jacobi: Lambda and E have inconsistent sizes");
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i].size() != n) throw MismatchError("jacobi: Lambda is not square");
    if (e[i].n_vars() != n) throw MismatchError("jacobi: E component over the wrong number of variables");
    for (std::size_t j = 0; j < n; ++j) {
      if (lambda[i][j].n_vars() != n) throw MismatchError("jacobi: Lambda entry over the wrong number of variables");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(lambda[i][j] == -lambda[j][i])) {
        throw MismatchError("jacobi: Lambda is not antisymmetric at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
      }
    }
  }
  return JacobiData{n, std::move(lambda), std::move(e)};
}

/// E(g) = sum_j E^j d_j g.
inline Poly reeb_apply(const JacobiData& jd, const Poly& g) {
  Poly out = zero_poly(jd.n);
  for (std::size_t j = 0; j < jd.n; ++j) out += jd.e[j] * g.partial(j);
  return out;
}

inline Poly jacobi_bracket(const JacobiData& jd, const Poly& f, const Poly& g) {
  Poly out = f * reeb_apply(jd, g) - g * reeb_apply(jd, f);
  for (std::size_t i = 0; i < jd.n; ++i) {
    const Poly fi = f.partial(i);
    if (fi.is_zero()) continue;
    for (std::size_t j = 0; j < jd.n; ++j) out += jd.lambda[i][j] * fi * g.partial(j);
  }
  return out;
}

/// The Jacobi structure of (M, alpha, omega): Lambda = W^{-1}, E^j = sum_i Lambda^ij alpha_i.
inline JacobiData jacobi_from_lcs(const LcsData& lcs) {
  const PolyMatrix w = form_matrix(lcs.omega);
  const Poly det = determinant(w);
  if (det.is_zero()) throw DegenerateFormError("omega is degenerate: its determinant vanishes identically");
  if (!det.is_constant()) throw UnsupportedError("Lambda = omega^{-1} is not polynomial");
  const Rational scale = Rational(1) / det.constant_term();
  PolyMatrix lambda = adjugate(w);
  for (auto& row : lambda) {
    for (auto& f : row) f = f.scaled(scale);
  }
  const auto a = one_form_coefficients(lcs.alpha);
  std::vector<Poly> e(lcs.n, zero_poly(lcs.n));
  for (std::size_t j = 0; j < lcs.n; ++j) {
    for (std::size_t i = 0; i < lcs.n; ++i) e[j] += lambda[i][j] * a[i];
  }
  return make_jacobi(std::move(lambda), std::move(e));
}

/// [ad(g)]^A: components (sum_i Lambda^ij d_i g + g E^j)^A, multiplier (-E(g))^A.
inline DiffOp prolonged_ad(const JacobiData& jd, const Poly& g, const AlgebraPtr& alg) {
  DiffOp out = zero_diff_op(alg, jd.n);
  for (std::size_t j = 0; j < jd.n; ++j) {
    Poly v = g * jd.e[j];
    for (std::size_t i = 0; i < jd.n; ++i) v += jd.lambda[i][j] * g.partial(i);
    out.components[j] = prolong(v, alg);
  }
  out.multiplier = prolong(-reeb_apply(jd, g), alg);
  return out;
}

/// tau_phi: g -> -[ad(g)]^A~(phi), an order-<=1 operator recovered from its action.
inline DiffOp tau(const JacobiData& jd, const APoly& phi) {
  const AlgebraPtr& alg = algebra_of(phi);
  if (phi.n_vars() != jd.n) throw MismatchError("tau: function and structure live on different manifolds");
  return reconstruct_diff_op(alg, jd.n, [&](const Poly& g) { return -tilde_apply(prolonged_ad(jd, g, alg), phi); });
}

/// {phi, psi}_A = tau_phi~(psi).
inline ABracket prolong_jacobi(const JacobiData& jd) {
  return ABracket{"prolonged", [jd](const APoly& phi, const APoly& psi) { return tilde_apply(tau(jd, phi), psi); }};
}

/// Symplectic Lie-Rinehart-Jacobi bracket {phi,psi} = -Omega(X_phi, X_psi) with
/// i_{X_phi} Omega = D(phi), D = d^A or d_{alpha^A}. Works directly with the
/// adjugate of Omega over the A-polynomials, independent of HamiltonianSolver.
class LrjEngine {
 public:
  LrjEngine(AForm omega, std::optional<AForm> alpha)
      : omega_(std::move(omega)),
        alpha_(std::move(alpha)),
        transposed_(transpose(form_matrix(omega_))),
        adjugate_(adjugate(transposed_)),
        inverse_det_(inverse_determinant(transposed_)) {}

  APoly differential_coefficient(const APoly& phi, std::size_t j) const {
    const AForm f = AForm::function(phi);
    return (alpha_ ? d_alpha(f, *alpha_) : d_A(f)).coefficient(IndexSet{j});
  }

  DiffOp field(const APoly& phi) const {
    std::vector<APoly> b;
    for (std::size_t j = 0; j < omega_.n(); ++j) b.push_back(differential_coefficient(phi, j));
    auto x = matrix_apply(adjugate_, b);
    for (auto& c : x) c = inverse_det_ * c;
    return vector_field(std::move(x));
  }

  APoly bracket(const APoly& phi, const APoly& psi) const {
    const std::vector<DiffOp> fields{field(phi), field(psi)};
    return -evaluate(omega_, fields);
  }

 private:
  static APoly inverse_determinant(const APolyMatrix& t) {
    const APoly det = determinant(t);
    const Poly det0 = augmentation(det);
    if (det0.is_zero()) throw DegenerateFormError("Omega is degenerate: its determinant vanishes identically");
    if (!det0.is_constant()) throw UnsupportedError("Omega has non-constant determinant");
    return apoly_invert(det);
  }

  AForm omega_;
  std::optional<AForm> alpha_;
  APolyMatrix transposed_;
  APolyMatrix adjugate_;
  APoly inverse_det_;
};

inline ABracket generic_lrj_bracket(const AForm& omega, const std::optional<AForm>& alpha) {
  auto engine = std::make_shared<const LrjEngine>(omega, alpha);
  return ABracket{"symplectic-LRJ", [engine](const APoly& f, const APoly& g) { return engine->bracket(f, g); }};
}

// Per-sample identity checks. Each returns the first failure with a witness.

namespace detail {

inline std::string show(const std::string& name, const APoly& p) { return name + " = " + to_string(p); }

inline Verdict compare(const std::string& identity, const APoly& lhs, const APoly& rhs, const std::string& inputs) {
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail(identity, inputs + "; lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs));
}

inline Verdict compare(const std::string& identity, const AElement& lhs, const AElement& rhs, const std::string& inputs) {
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail(identity, inputs + "; lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs));
}

}  // namespace detail

inline Verdict check_antisymmetry(const ABracket& br, const APoly& phi, const APoly& psi) {
  const std::string in = detail::show("phi", phi) + "; " + detail::show("psi", psi);
  const APoly self = br(phi, phi);
  if (!self.is_zero()) return Verdict::fail("{phi, phi} = 0", in + "; {phi, phi} = " + to_string(self));
  return detail::compare("{phi, psi} = -{psi, phi}", br(phi, psi), -br(psi, phi), in);
}

/// {a phi + chi, psi} = a {phi, psi} + {chi, psi} and the same in the second slot.
inline Verdict check_bilinearity(const ABracket& br, const APoly& phi, const APoly& psi, const APoly& chi,
                                 const AElement& a) {
  const std::string in = detail::show("phi", phi) + "; " + detail::show("psi", psi) + "; " + detail::show("chi", chi) +
                         "; a = " + to_string(a);
  const APoly left = br(a_scale(a, phi) + chi, psi);
  const APoly left_rhs = a_scale(a, br(phi, psi)) + br(chi, psi);
  if (auto v = detail::compare("{a.phi + chi, psi} = a.{phi, psi} + {chi, psi}", left, left_rhs, in); !v.ok) return v;
  const APoly right = br(phi, a_scale(a, psi) + chi);
  const APoly right_rhs = a_scale(a, br(phi, psi)) + br(phi, chi);
  return detail::compare("{phi, a.psi + chi} = a.{phi, psi} + {phi, chi}", right, right_rhs, in);
}

inline Verdict check_jacobi_identity(const ABracket& br, const APoly& phi, const APoly& psi, const APoly& chi) {
  const APoly sum = br(phi, br(psi, chi)) + br(psi, br(chi, phi)) + br(chi, br(phi, psi));
  if (sum.is_zero()) return Verdict::pass();
  return Verdict::fail("{phi, {psi, chi}} + {psi, {chi, phi}} + {chi, {phi, psi}} = 0",
                       detail::show("phi", phi) + "; " + detail::show("psi", psi) + "; " + detail::show("chi", chi) +
                           "; cyclic sum = " + to_string(sum));
}

/// ad(phi) is an order-<=1 operator:
/// {phi, psi1 psi2} = {phi, psi1} psi2 + psi1 {phi, psi2} - psi1 psi2 {phi, 1}.
inline Verdict check_modified_leibniz(const ABracket& br, const APoly& phi, const APoly& psi1, const APoly& psi2) {
  const APoly one = one_like(phi);
  const APoly lhs = br(phi, psi1 * psi2);
  const APoly rhs = br(phi, psi1) * psi2 + psi1 * br(phi, psi2) - psi1 * psi2 * br(phi, one);
  return detail::compare("{phi, psi1.psi2} = {phi, psi1}.psi2 + psi1.{phi, psi2} - psi1.psi2.{phi, 1}", lhs, rhs,
                         detail::show("phi", phi) + "; " + detail::show("psi1", psi1) + "; " +
                             detail::show("psi2", psi2));
}

struct AxiomSample {
  APoly phi;
  APoly psi;
  APoly chi;
  AElement a;
};

struct AxiomOutcome {
  std::string axiom;
  std::size_t checked = 0;
  Verdict verdict;
};

/// Runs the four bracket axioms over the samples; each axiom stops at its first failure.
inline std::vector<AxiomOutcome> check_jacobi_axioms(const ABracket& br, const std::vector<AxiomSample>& samples) {
  std::vector<AxiomOutcome> out{{"antisymmetry", 0, {}}, {"a-bilinearity", 0, {}}, {"jacobi-identity", 0, {}},
                                {"modified-leibniz", 0, {}}};
  for (const auto& s : samples) {
    const Verdict v[4] = {
        out[0].verdict.ok ? check_antisymmetry(br, s.phi, s.psi) : Verdict::pass(),
        out[1].verdict.ok ? check_bilinearity(br, s.phi, s.psi, s.chi, s.a) : Verdict::pass(),
        out[2].verdict.ok ? check_jacobi_identity(br, s.phi, s.psi, s.chi) : Verdict::pass(),
        out[3].verdict.ok ? check_modified_leibniz(br, s.phi, s.psi, s.chi) : Verdict::pass(),
    };
    for (std::size_t k = 0; k < 4; ++k) {
      if (!out[k].verdict.ok) continue;
      ++out[k].checked;
      out[k].verdict = v[k];
    }
  }
  return out;
}

inline Verdict check_hamiltonian_residual(const HamiltonianSolver& s, const APoly& f) {
  const AForm r = s.residual(s.field(f), f);
  if (r.is_zero()) return Verdict::pass();
  return Verdict::fail("i_{X_F} omega^A = d_{alpha^A} F", detail::show("F", f) + "; residual = " + to_string(r));
}

/// -omega^A(X_F, X_G) = rho_{alpha^A}(X_F)(G).
inline Verdict check_two_formula(const HamiltonianSolver& s, const APoly& f, const APoly& g) {
  return detail::compare("-omega^A(X_F, X_G) = X_F~(G) + G.alpha^A(X_F)", s.bracket(f, g), s.rho_apply(s.field(f), g),
                         detail::show("F", f) + "; " + detail::show("G", g));
}

/// [X_F, X_G] = X_{F,G}.
inline Verdict check_hamiltonian_morphism(const HamiltonianSolver& s, const APoly& f, const APoly& g) {
  const DiffOp lhs = bracket(s.field(f), s.field(g));
  const DiffOp rhs = s.field(s.bracket(f, g));
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("[X_F, X_G] = X_{F,G}", detail::show("F", f) + "; " + detail::show("G", g) +
                                                   "; lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs));
}

/// theta_{X_F} omega^A = 0 for the Lie derivative along d_{alpha^A}.
inline Verdict check_lie_derivative_vanishes(const HamiltonianSolver& s, const APoly& f) {
  const AForm l = lie_derivative(s.field(f), s.data().omega_A, s.data().alpha_A);
  if (l.is_zero()) return Verdict::pass();
  return Verdict::fail("theta_{X_F} omega^A = 0", detail::show("F", f) + "; theta = " + to_string(l));
}

/// The generic engine instantiated with (omega^A, d_{alpha^A}) reproduces the lcs fields and bracket.
inline Verdict check_engine_agreement(const HamiltonianSolver& s, const LrjEngine& engine, const APoly& f,
                                      const APoly& g) {
  const DiffOp a = s.field(f);
  const DiffOp b = engine.field(f);
  if (!(a == b)) {
    return Verdict::fail("generic engine X_F = lcs X_F",
                         detail::show("F", f) + "; lcs = " + to_string(a) + "; engine = " + to_string(b));
  }
  return detail::compare("generic engine {F, G} = lcs {F, G}", engine.bracket(f, g), s.bracket(f, g),
                         detail::show("F", f) + "; " + detail::show("G", g));
}

/// X_{f^A} = (X_f)^A componentwise.
inline Verdict check_field_prolongation(const HamiltonianSolver& s, const Poly& f) {
  const auto& lcs = s.data();
  const DiffOp lhs = s.field(prolong(f, lcs.algebra));
  std::vector<APoly> base;
  for (const auto& c : base_hamiltonian(lcs, f)) base.push_back(prolong(c, lcs.algebra));
  const DiffOp rhs = vector_field(std::move(base));
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("X_{f^A} = (X_f)^A",
                       "f = " + to_string(f) + "; lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs));
}

/// {f^A, g^A} = {f, g}^A.
inline Verdict check_bracket_prolongation(const HamiltonianSolver& s, const Poly& f, const Poly& g) {
  const auto& lcs = s.data();
  return detail::compare("{f^A, g^A} = {f, g}^A", s.bracket(prolong(f, lcs.algebra), prolong(g, lcs.algebra)),
                         prolong(base_bracket(lcs, f, g), lcs.algebra),
                         "f = " + to_string(f) + "; g = " + to_string(g));
}

inline Verdict check_field_prolongation_at(const HamiltonianSolver& s, const Poly& f, const NearPoint& xi) {
  const auto& lcs = s.data();
  const auto lhs = s.field_at(prolong(f, lcs.algebra), xi);
  const auto rhs = prolonged_base_field_at(lcs, f, xi);
  for (std::size_t j = 0; j < lcs.n; ++j) {
    if (!(lhs[j] == rhs[j])) {
      return Verdict::fail("X_{f^A}(xi) = (X_f)^A(xi)", "f = " + to_string(f) + "; component " + std::to_string(j + 1) +
                                                            ": lhs = " + to_string(lhs[j]) + "; rhs = " + to_string(rhs[j]));
    }
  }
  return Verdict::pass();
}

inline Verdict check_bracket_prolongation_at(const HamiltonianSolver& s, const Poly& f, const Poly& g,
                                             const NearPoint& xi) {
  const auto& lcs = s.data();
  return detail::compare("{f^A, g^A}(xi) = {f, g}^A(xi)",
                         s.bracket_at(prolong(f, lcs.algebra), prolong(g, lcs.algebra), xi),
                         prolonged_base_bracket_at(lcs, f, g, xi), "f = " + to_string(f) + "; g = " + to_string(g));
}

/// Prolongation coincidence on one pair: field and bracket prolongation, plus
/// agreement of the tau-built bracket with the lcs one on prolonged arguments.
inline Verdict check_prolongation_coincidence(const HamiltonianSolver& s, const ABracket& prolonged, const Poly& f,
                                              const Poly& g) {
  if (auto v = check_field_prolongation(s, f); !v.ok) return v;
  if (auto v = check_bracket_prolongation(s, f, g); !v.ok) return v;
  const AlgebraPtr& alg = s.data().algebra;
  const APoly fa = prolong(f, alg);
  const APoly ga = prolong(g, alg);
  return detail::compare("prolonged {f^A, g^A}_A = lcs {f^A, g^A}", prolonged(fa, ga), s.bracket(fa, ga),
                         "f = " + to_string(f) + "; g = " + to_string(g));
}

}  // namespace nearpoint
