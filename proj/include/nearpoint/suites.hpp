#pragma once

// The verification suites run by `check`: prop1 (prolongation and operator
// laws), lie-rinehart, jacobi-axioms and prolongation. Each identity draws its
// samples from independent seeded streams and stops at its first failure.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nearpoint/diff_op.hpp"
#include "nearpoint/jacobi.hpp"
#include "nearpoint/random.hpp"
#include "nearpoint/report.hpp"

namespace nearpoint {

struct SuiteInput {
  AlgebraPtr algebra;
  std::size_t n = 0;
  std::vector<DiffOp> named_ops;
  std::optional<LcsData> lcs;
  std::optional<JacobiData> jacobi;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100;
  GeneratorLimits limits;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prop1", "lie-rinehart", "jacobi-axioms", "prolongation"};
  return names;
}

namespace detail {

class IdentityRunner {
 public:
  IdentityRunner(const SuiteInput& in, std::string suite, std::vector<IdentityResult>& out)
      : in_(in), suite_(std::move(suite)), out_(out) {}

  void sampled(const std::string& name, const std::function<Verdict(SampleRng&)>& fn) {
    IdentityResult r{suite_, name, Status::pass, 0, std::nullopt, {}};
    const std::string key = suite_ + "/" + name;
    for (std::uint64_t i = 0; i < in_.samples; ++i) {
      const std::uint64_t s = sample_seed(in_.seed, key, i);
      SampleRng rng(s, in_.limits);
      const Verdict v = fn(rng);
      ++r.checked;
      if (!v.ok) {
        r.status = Status::fail;
        r.counterexample = Counterexample{i, s, v.identity, v.witness};
        break;
      }
    }
    out_.push_back(std::move(r));
  }

  void once(const std::string& name, const Verdict& v, bool advisory = false) {
    IdentityResult r{suite_, name, Status::pass, 1, std::nullopt, {}};
    if (!v.ok) {
      r.status = advisory ? Status::advisory : Status::fail;
      r.counterexample = Counterexample{0, in_.seed, v.identity, v.witness};
    }
    out_.push_back(std::move(r));
  }

  void skipped(const std::string& name, const std::string& note) {
    out_.push_back(IdentityResult{suite_, name, Status::skipped, 0, std::nullopt, note});
  }

  /// Sampled check whose failure is recorded without failing the run.
  void advisory(const std::string& name, const std::function<Verdict(SampleRng&)>& fn) {
    sampled(name, fn);
    if (out_.back().status == Status::fail) out_.back().status = Status::advisory;
  }

 private:
  const SuiteInput& in_;
  std::string suite_;
  std::vector<IdentityResult>& out_;
};

inline Verdict equal_or(const std::string& identity, const APoly& lhs, const APoly& rhs, const std::string& inputs) {
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail(identity, inputs + "; lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs));
}

inline Verdict equal_or(const std::string& identity, const DiffOp& lhs, const DiffOp& rhs, const std::string& inputs) {
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail(identity, inputs + "; lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs));
}

inline Verdict equal_or(const std::string& identity, const AElement& lhs, const AElement& rhs,
                        const std::string& inputs) {
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail(identity, inputs + "; lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs));
}

inline std::string fg(const Poly& f, const Poly& g) { return "f = " + to_string(f) + "; g = " + to_string(g); }

inline std::string show_point(const NearPoint& xi) {
  std::string out = "xi = (";
  for (std::size_t j = 0; j < xi.dim(); ++j) out += (j ? ", " : "") + to_string(xi.coords[j]);
  return out + ")";
}

inline void run_prop1(const SuiteInput& in, IdentityRunner& run) {
  const auto& alg = in.algebra;
  const std::size_t n = in.n;
  run.sampled("prolong-additive", [&](SampleRng& rng) {
    const Poly f = random_poly(rng, n), g = random_poly(rng, n);
    return equal_or("(f + g)^A = f^A + g^A", prolong(f + g, alg), prolong(f, alg) + prolong(g, alg), fg(f, g));
  });
  run.sampled("prolong-multiplicative", [&](SampleRng& rng) {
    const Poly f = random_poly(rng, n), g = random_poly(rng, n);
    return equal_or("(f.g)^A = f^A.g^A", prolong(f * g, alg), prolong(f, alg) * prolong(g, alg), fg(f, g));
  });
  run.sampled("prolong-unit", [&](SampleRng& rng) {
    const Rational c = rng.rational();
    return equal_or("c^A = c.1_A", prolong(constant_poly(n, c), alg), constant_apoly(n, AElement::scalar(alg, c)),
                    "c = " + to_string(c));
  });
  run.sampled("prolong-evaluated", [&](SampleRng& rng) {
    const Poly f = random_poly(rng, n), g = random_poly(rng, n);
    const NearPoint xi = random_near_point(rng, alg, n);
    const AElement fx = apoly_eval(prolong(f, alg), xi);
    const AElement gx = apoly_eval(prolong(g, alg), xi);
    const std::string in_text = fg(f, g) + "; " + show_point(xi);
    if (auto v = equal_or("(f.g)^A(xi) = f^A(xi).g^A(xi)", apoly_eval(prolong(f * g, alg), xi), fx * gx, in_text);
        !v.ok) {
      return v;
    }
    return equal_or("(f + g)^A(xi) = f^A(xi) + g^A(xi)", apoly_eval(prolong(f + g, alg), xi), fx + gx, in_text);
  });
  run.sampled("augmentation-origin", [&](SampleRng& rng) {
    const Poly f = random_poly(rng, n);
    const NearPoint xi = random_near_point(rng, alg, n);
    const auto x0 = xi.origin();
    const Rational lhs = augmentation(apoly_eval(prolong(f, alg), xi));
    const Rational rhs = poly_eval(f, x0);
    if (lhs == rhs) return Verdict::pass();
    return Verdict::fail("augmentation(f^A(xi)) = f(origin(xi))",
                         "f = " + to_string(f) + "; " + show_point(xi) + "; lhs = " + to_string(lhs) +
                             "; rhs = " + to_string(rhs));
  });
  run.sampled("partial-commutes", [&](SampleRng& rng) {
    const Poly f = random_poly(rng, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (auto v = equal_or("d_j(f^A) = (d_j f)^A", prolong(f, alg).partial(j), prolong(f.partial(j), alg),
                            "f = " + to_string(f) + "; j = " + std::to_string(j + 1));
          !v.ok) {
        return v;
      }
    }
    return Verdict::pass();
  });
  auto prop1_law = [&](const DiffOp& x, const Poly& f, const Poly& g) {
    const APoly fa = prolong(f, alg), ga = prolong(g, alg);
    const APoly one = apply(x, constant_poly(n, Rational(1)));
    return equal_or("X(f.g) = X(f).g^A + f^A.X(g) - f^A.g^A.X(1)", apply(x, f * g),
                    apply(x, f) * ga + fa * apply(x, g) - fa * ga * one, "X = " + to_string(x) + "; " + fg(f, g));
  };
  run.sampled("prop1-law", [&](SampleRng& rng) {
    const DiffOp x = random_diff_op(rng, alg, n);
    const Poly f = random_poly(rng, n), g = random_poly(rng, n);
    return prop1_law(x, f, g);
  });
  if (in.named_ops.empty()) {
    run.skipped("prop1-law-named", "no named operators in the problem");
  } else {
    std::uint64_t index = 0;
    run.sampled("prop1-law-named", [&](SampleRng& rng) {
      const DiffOp& x = in.named_ops[index++ % in.named_ops.size()];
      const Poly f = random_poly(rng, n), g = random_poly(rng, n);
      return prop1_law(x, f, g);
    });
  }
  run.sampled("tilde-extension", [&](SampleRng& rng) {
    const DiffOp x = random_diff_op(rng, alg, n);
    const Poly f = random_poly(rng, n);
    const APoly phi = random_apoly(rng, alg, n), psi = random_apoly(rng, alg, n);
    const AElement a = random_element(rng, alg);
    const std::string xs = "X = " + to_string(x);
    if (auto v = equal_or("X~(f^A) = X(f)", tilde_apply(x, prolong(f, alg)), apply(x, f), xs + "; f = " + to_string(f));
        !v.ok) {
      return v;
    }
    const std::string ps = xs + "; phi = " + to_string(phi) + "; psi = " + to_string(psi);
    if (auto v = equal_or("X~(a.phi + psi) = a.X~(phi) + X~(psi)", tilde_apply(x, a_scale(a, phi) + psi),
                          a_scale(a, tilde_apply(x, phi)) + tilde_apply(x, psi), ps + "; a = " + to_string(a));
        !v.ok) {
      return v;
    }
    const APoly one = one_like(phi);
    return equal_or("X~(phi.psi) = X~(phi).psi + phi.X~(psi) - phi.psi.X~(1)", tilde_apply(x, phi * psi),
                    tilde_apply(x, phi) * psi + phi * tilde_apply(x, psi) - phi * psi * tilde_apply(x, one), ps);
  });
}

inline void run_lie_rinehart(const SuiteInput& in, IdentityRunner& run) {
  const auto& alg = in.algebra;
  const std::size_t n = in.n;
  auto ops = [](const DiffOp& x, const DiffOp& y) { return "X = " + to_string(x) + "; Y = " + to_string(y); };
  run.sampled("antisymmetry", [&](SampleRng& rng) {
    const DiffOp x = random_diff_op(rng, alg, n), y = random_diff_op(rng, alg, n);
    return equal_or("[X, Y] = -[Y, X]", bracket(x, y), zero_diff_op(alg, n) - bracket(y, x), ops(x, y));
  });
  run.sampled("a-bilinearity", [&](SampleRng& rng) {
    const DiffOp x = random_diff_op(rng, alg, n), y = random_diff_op(rng, alg, n), z = random_diff_op(rng, alg, n);
    const AElement a = random_element(rng, alg);
    const std::string text = ops(x, y) + "; Z = " + to_string(z) + "; a = " + to_string(a);
    if (auto v = equal_or("[X, a.Y + Z] = a.[X, Y] + [X, Z]", bracket(x, scale(a, y) + z),
                          scale(a, bracket(x, y)) + bracket(x, z), text);
        !v.ok) {
      return v;
    }
    return equal_or("[a.X + Z, Y] = a.[X, Y] + [Z, Y]", bracket(scale(a, x) + z, y),
                    scale(a, bracket(x, y)) + bracket(z, y), text);
  });
  run.sampled("jacobi-identity", [&](SampleRng& rng) {
    const DiffOp x = random_diff_op(rng, alg, n), y = random_diff_op(rng, alg, n), z = random_diff_op(rng, alg, n);
    const DiffOp sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    return equal_or("[X, [Y, Z]] + [Y, [Z, X]] + [Z, [X, Y]] = 0", sum, zero_diff_op(alg, n),
                    ops(x, y) + "; Z = " + to_string(z));
  });
  run.sampled("anchor-expansion", [&](SampleRng& rng) {
    const DiffOp x = random_diff_op(rng, alg, n), y = random_diff_op(rng, alg, n);
    const APoly phi = random_apoly(rng, alg, n);
    const Poly f = random_poly(rng, n);
    Verdict v = check_lie_rinehart(x, y, phi, {f}, {});
    if (!v.ok) v.witness = ops(x, y) + "; phi = " + to_string(phi) + "; " + v.witness;
    return v;
  });
  run.sampled("tilde-bracket", [&](SampleRng& rng) {
    const DiffOp x = random_diff_op(rng, alg, n), y = random_diff_op(rng, alg, n);
    const APoly psi = random_apoly(rng, alg, n);
    const APoly lhs = tilde_apply(x, tilde_apply(y, psi)) - tilde_apply(y, tilde_apply(x, psi));
    return equal_or("[X~, Y~](psi) = [X, Y]~(psi)", lhs, tilde_apply(bracket(x, y), psi),
                    ops(x, y) + "; psi = " + to_string(psi));
  });
  run.sampled("tilde-module", [&](SampleRng& rng) {
    const DiffOp x = random_diff_op(rng, alg, n);
    const APoly phi = random_apoly(rng, alg, n), psi = random_apoly(rng, alg, n);
    return equal_or("(phi.X)~(psi) = phi.X~(psi)", tilde_apply(module_action(phi, x), psi), phi * tilde_apply(x, psi),
                    "X = " + to_string(x) + "; phi = " + to_string(phi) + "; psi = " + to_string(psi));
  });
}

inline void run_bracket_axioms(const SuiteInput& in, IdentityRunner& run, const ABracket& br) {
  const auto& alg = in.algebra;
  const std::size_t n = in.n;
  run.sampled("antisymmetry", [&](SampleRng& rng) {
    const APoly phi = random_apoly(rng, alg, n), psi = random_apoly(rng, alg, n);
    return check_antisymmetry(br, phi, psi);
  });
  run.sampled("a-bilinearity", [&](SampleRng& rng) {
    const APoly phi = random_apoly(rng, alg, n), psi = random_apoly(rng, alg, n), chi = random_apoly(rng, alg, n);
    return check_bilinearity(br, phi, psi, chi, random_element(rng, alg));
  });
  run.sampled("jacobi-identity", [&](SampleRng& rng) {
    const APoly phi = random_apoly(rng, alg, n), psi = random_apoly(rng, alg, n), chi = random_apoly(rng, alg, n);
    return check_jacobi_identity(br, phi, psi, chi);
  });
  run.sampled("modified-leibniz", [&](SampleRng& rng) {
    const APoly phi = random_apoly(rng, alg, n), psi1 = random_apoly(rng, alg, n), psi2 = random_apoly(rng, alg, n);
    return check_modified_leibniz(br, phi, psi1, psi2);
  });
}

inline void run_ad_one(const SuiteInput& in, IdentityRunner& run, const ABracket& br, bool poisson) {
  if (!poisson) {
    run.skipped("poisson-ad-one", "structure is not Poisson: ad(1) may be nonzero");
    return;
  }
  run.sampled("poisson-ad-one", [&](SampleRng& rng) {
    const APoly phi = random_apoly(rng, in.algebra, in.n);
    const APoly v = br(phi, one_like(phi));
    if (v.is_zero()) return Verdict::pass();
    return Verdict::fail("{phi, 1} = 0", "phi = " + to_string(phi) + "; {phi, 1} = " + to_string(v));
  });
}

inline void run_jacobi_axioms(const SuiteInput& in, IdentityRunner& run) {
  const auto& alg = in.algebra;
  const std::size_t n = in.n;
  if (in.lcs) {
    const LcsData& lcs = *in.lcs;
    const AForm defect = lcs_defect(lcs);
    run.once("lcs-compatibility",
             defect.is_zero() ? Verdict::pass()
                              : Verdict::fail("d omega^A + alpha^A ^ omega^A = 0", "defect = " + to_string(defect)));
    const RForm dalpha = alpha_closedness_defect(lcs);
    run.once("alpha-closed",
             dalpha.is_zero() ? Verdict::pass() : Verdict::fail("d alpha = 0", "d alpha = " + to_string(dalpha)), true);
    const HamiltonianSolver solver(lcs);
    if (solver.mode() == SolveMode::symbolic) {
      const ABracket br = lcs_bracket(lcs);
      run_bracket_axioms(in, run, br);
      run.sampled("hamiltonian-residual", [&](SampleRng& rng) {
        return check_hamiltonian_residual(solver, random_apoly(rng, alg, n));
      });
      run.sampled("two-formula", [&](SampleRng& rng) {
        const APoly f = random_apoly(rng, alg, n), g = random_apoly(rng, alg, n);
        return check_two_formula(solver, f, g);
      });
      run.sampled("hamiltonian-morphism", [&](SampleRng& rng) {
        const APoly f = random_apoly(rng, alg, n), g = random_apoly(rng, alg, n);
        return check_hamiltonian_morphism(solver, f, g);
      });
      run.sampled("lie-derivative", [&](SampleRng& rng) {
        return check_lie_derivative_vanishes(solver, random_apoly(rng, alg, n));
      });
      const LrjEngine engine(lcs.omega_A, lcs.alpha_A);
      run.sampled("generic-engine", [&](SampleRng& rng) {
        const APoly f = random_apoly(rng, alg, n), g = random_apoly(rng, alg, n);
        return check_engine_agreement(solver, engine, f, g);
      });
      run_ad_one(in, run, br, lcs.alpha.is_zero());
    } else {
      const std::string note = "omega has non-constant determinant: checked pointwise";
      run.sampled("hamiltonian-residual-pointwise", [&](SampleRng& rng) {
        const APoly f = random_apoly(rng, alg, n);
        const NearPoint xi = random_near_point(rng, alg, n);
        const auto x = solver.field_at(f, xi);
        const AMatrix w = evaluate_at(solver.matrix(), xi);
        const auto b = one_form_coefficients(d_alpha_function(lcs, f));
        for (std::size_t j = 0; j < n; ++j) {
          AElement lhs = AElement::zero(alg);
          for (std::size_t i = 0; i < n; ++i) lhs += w[i][j] * x[i];
          if (auto v = equal_or("(i_{X_F} omega^A)(xi) = (d_{alpha^A} F)(xi)", lhs, apoly_eval(b[j], xi),
                                "F = " + to_string(f) + "; " + show_point(xi));
              !v.ok) {
            return v;
          }
        }
        return Verdict::pass();
      });
      run.sampled("antisymmetry-pointwise", [&](SampleRng& rng) {
        const APoly f = random_apoly(rng, alg, n), g = random_apoly(rng, alg, n);
        const NearPoint xi = random_near_point(rng, alg, n);
        return equal_or("{F, G}(xi) = -{G, F}(xi)", solver.bracket_at(f, g, xi), -solver.bracket_at(g, f, xi),
                        "F = " + to_string(f) + "; G = " + to_string(g) + "; " + show_point(xi));
      });
      run.sampled("two-formula-pointwise", [&](SampleRng& rng) {
        const APoly f = random_apoly(rng, alg, n), g = random_apoly(rng, alg, n);
        const NearPoint xi = random_near_point(rng, alg, n);
        return equal_or("-omega^A(X_F, X_G)(xi) = rho(X_F)(G)(xi)", solver.bracket_at(f, g, xi),
                        solver.rho_at(f, g, xi), "F = " + to_string(f) + "; G = " + to_string(g) + "; " + show_point(xi));
      });
      run.sampled("modified-leibniz-pointwise", [&](SampleRng& rng) {
        const APoly f = random_apoly(rng, alg, n), p = random_apoly(rng, alg, n), q = random_apoly(rng, alg, n);
        const NearPoint xi = random_near_point(rng, alg, n);
        const APoly one = one_like(f);
        const AElement px = apoly_eval(p, xi), qx = apoly_eval(q, xi);
        const AElement rhs = solver.bracket_at(f, p, xi) * qx + px * solver.bracket_at(f, q, xi) -
                             px * qx * solver.bracket_at(f, one, xi);
        return equal_or("{F, P.Q}(xi) = ({F, P}.Q + P.{F, Q} - P.Q.{F, 1})(xi)", solver.bracket_at(f, p * q, xi), rhs,
                        "F = " + to_string(f) + "; P = " + to_string(p) + "; Q = " + to_string(q) + "; " +
                            show_point(xi));
      });
      for (const char* name : {"jacobi-identity", "hamiltonian-morphism", "lie-derivative", "generic-engine"}) {
        run.skipped(name, note);
      }
    }
    return;
  }
  if (in.jacobi) {
    const JacobiData& jd = *in.jacobi;
    run.advisory("base-jacobi-identity", [&](SampleRng& rng) {
      const Poly f = random_poly(rng, n), g = random_poly(rng, n), h = random_poly(rng, n);
      const Poly sum = jacobi_bracket(jd, f, jacobi_bracket(jd, g, h)) + jacobi_bracket(jd, g, jacobi_bracket(jd, h, f)) +
                       jacobi_bracket(jd, h, jacobi_bracket(jd, f, g));
      if (sum.is_zero()) return Verdict::pass();
      return Verdict::fail("{f, {g, h}} + cyclic = 0 on M",
                           fg(f, g) + "; h = " + to_string(h) + "; cyclic sum = " + to_string(sum));
    });
    const ABracket br = prolong_jacobi(jd);
    run_bracket_axioms(in, run, br);
    bool poisson = true;
    for (const auto& e : jd.e) poisson = poisson && e.is_zero();
    run_ad_one(in, run, br, poisson);
    return;
  }
  run.skipped("structure", "no structure section in the problem");
}

inline void run_prolongation(const SuiteInput& in, IdentityRunner& run) {
  const auto& alg = in.algebra;
  const std::size_t n = in.n;
  auto lambda_e = [&](const JacobiData& jd, const ABracket& br) {
    run.sampled("lambda-e-prolongation", [&](SampleRng& rng) {
      const Poly f = random_poly(rng, n), g = random_poly(rng, n);
      return equal_or("{f^A, g^A}_A = {f, g}^A", br(prolong(f, alg), prolong(g, alg)),
                      prolong(jacobi_bracket(jd, f, g), alg), fg(f, g));
    });
  };
  if (in.lcs) {
    const HamiltonianSolver solver(*in.lcs);
    if (solver.mode() == SolveMode::symbolic) {
      run.sampled("field-prolongation", [&](SampleRng& rng) {
        return check_field_prolongation(solver, random_poly(rng, n));
      });
      run.sampled("bracket-prolongation", [&](SampleRng& rng) {
        const Poly f = random_poly(rng, n), g = random_poly(rng, n);
        return check_bracket_prolongation(solver, f, g);
      });
      const JacobiData jd = jacobi_from_lcs(*in.lcs);
      const ABracket prolonged = prolong_jacobi(jd);
      run.sampled("tau-agreement", [&](SampleRng& rng) {
        const Poly f = random_poly(rng, n), g = random_poly(rng, n);
        const APoly fa = prolong(f, alg), ga = prolong(g, alg);
        return equal_or("prolonged {f^A, g^A}_A = lcs {f^A, g^A}", prolonged(fa, ga), solver.bracket(fa, ga), fg(f, g));
      });
      lambda_e(jd, prolonged);
    } else {
      const std::string note = "omega has non-constant determinant: base structure is not polynomial";
      run.sampled("field-prolongation-pointwise", [&](SampleRng& rng) {
        const Poly f = random_poly(rng, n);
        return check_field_prolongation_at(solver, f, random_near_point(rng, alg, n));
      });
      run.sampled("bracket-prolongation-pointwise", [&](SampleRng& rng) {
        const Poly f = random_poly(rng, n), g = random_poly(rng, n);
        return check_bracket_prolongation_at(solver, f, g, random_near_point(rng, alg, n));
      });
      run.skipped("tau-agreement", note);
      run.skipped("lambda-e-prolongation", note);
    }
    return;
  }
  if (in.jacobi) {
    lambda_e(*in.jacobi, prolong_jacobi(*in.jacobi));
    return;
  }
  run.skipped("structure", "no structure section in the problem");
}

}  // namespace detail

/// Runs one named suite; structural problems (degenerate omega, unsupported
/// inputs) surface as exceptions rather than identity failures.
inline std::vector<IdentityResult> run_suite(const std::string& suite, const SuiteInput& in) {
  if (in.samples == 0) throw MismatchError("empty sample set: --samples must be positive");
  std::vector<IdentityResult> out;
  detail::IdentityRunner run(in, suite, out);
  if (suite == "prop1") {
    detail::run_prop1(in, run);
  } else if (suite == "lie-rinehart") {
    detail::run_lie_rinehart(in, run);
  } else if (suite == "jacobi-axioms") {
    detail::run_jacobi_axioms(in, run);
  } else if (suite == "prolongation") {
    detail::run_prolongation(in, run);
  } else {
    throw MismatchError("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace nearpoint
