// Acceptance run: one PASS/FAIL line per criterion over the fixed test matrix
// R[eps]/(eps^2), R[eps]/(eps^4), R[x,y]/m^3 with 100 seeded samples per identity.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace nearpoint;

namespace {

constexpr std::uint64_t kSamples = 100;
constexpr std::uint64_t kSeed = 20240601;
const std::filesystem::path source_dir{NEARPOINT_SOURCE_DIR};

/// Counts exact checks and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& why) {
    ++checked_;
    if (!ok && failure_.empty()) failure_ = why();
    if (!ok) ++failed_;
  }
  void expect(const Verdict& v, const std::string& where) {
    expect(v.ok, [&] { return where + ": " + v.identity + " (" + v.witness + ")"; });
  }
  void note(const std::string& text) { notes_ += "; " + text; }
  void merge_error(const std::string& what) {
    ++checked_;
    ++failed_;
    if (failure_.empty()) failure_ = what;
  }

  bool ok() const { return failed_ == 0 && checked_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(checked_ - failed_) + "/" + std::to_string(checked_) + " exact checks";
    if (!failure_.empty()) s += "; first failure: " + failure_;
    return s + notes_;
  }

 private:
  std::uint64_t checked_ = 0;
  std::uint64_t failed_ = 0;
  std::string failure_;
  std::string notes_;
};

/// Runs `body(rng, algebra, n)` for every algebra, each n in `dims` and 100 samples.
void sweep(Tally& t, const std::string& name, std::initializer_list<std::size_t> dims,
           const std::function<void(SampleRng&, const AlgebraPtr&, std::size_t, const std::string&)>& body) {
  for (const auto& alg : oracle::test_algebras()) {
    for (std::size_t n : dims) {
      for (std::uint64_t i = 0; i < kSamples; ++i) {
        SampleRng rng(sample_seed(kSeed, name + "/" + oracle::algebra_name(alg) + "/n" + std::to_string(n), i));
        const std::string where = oracle::algebra_name(alg) + " n=" + std::to_string(n) + " sample " + std::to_string(i);
        try {
          body(rng, alg, n, where);
        } catch (const std::exception& e) {
          t.merge_error(where + ": unexpected error: " + e.what());
        }
      }
    }
  }
}

RForm planar_form(const Poly& w) {
  RForm out(2, 2, Rational(0));
  out.add({0, 1}, w);
  return out;
}

RForm planar_alpha(int a1) {
  RForm out(2, 1, Rational(0));
  out.add({0}, constant_poly(2, a1));
  return out;
}

std::string show(const APoly& p) { return to_string(p); }

Tally criterion_1() {
  Tally t;
  sweep(t, "prolong-hom", {1, 2}, [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t n, const std::string& w) {
    const Poly f = random_poly(rng, n), g = random_poly(rng, n);
    t.expect(prolong(f * g, alg) == prolong(f, alg) * prolong(g, alg), [&] { return w + ": f = " + to_string(f); });
  });
  return t;
}

Tally criterion_2() {
  Tally t;
  sweep(t, "taylor", {1, 2}, [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t n, const std::string& w) {
    const Poly f = random_poly(rng, n);
    const NearPoint xi = random_near_point(rng, alg, n);
    t.expect(apoly_eval(prolong(f, alg), xi) == oracle::taylor_eval(f, xi), [&] { return w + ": f = " + to_string(f); });
  });
  return t;
}

Tally criterion_3() {
  Tally t;
  sweep(t, "prop1", {1, 2}, [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t n, const std::string& w) {
    const DiffOp x = random_diff_op(rng, alg, n);
    const Poly f = random_poly(rng, n), g = random_poly(rng, n);
    const APoly fa = prolong(f, alg), ga = prolong(g, alg);
    const APoly rhs = apply(x, f) * ga + fa * apply(x, g) - fa * ga * apply(x, constant_poly(n, 1));
    t.expect(apply(x, f * g) == rhs, [&] { return w + ": X = " + to_string(x); });
  });
  return t;
}

Tally criterion_4() {
  Tally t;
  sweep(t, "lie-rinehart", {1, 2}, [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t n, const std::string& w) {
    const DiffOp x = random_diff_op(rng, alg, n), y = random_diff_op(rng, alg, n), z = random_diff_op(rng, alg, n);
    const APoly phi = random_apoly(rng, alg, n), psi = random_apoly(rng, alg, n);
    const AElement a = random_element(rng, alg);
    const Poly f = random_poly(rng, n);
    const DiffOp zero = zero_diff_op(alg, n);
    const DiffOp xy = bracket(x, y);
    t.expect(xy == oracle::bracket_closed_form(x, y), [&] { return w + ": bracket vs closed form"; });
    t.expect(xy == zero - bracket(y, x), [&] { return w + ": antisymmetry"; });
    t.expect(bracket(x, scale(a, y) + z) == scale(a, xy) + bracket(x, z), [&] { return w + ": A-bilinearity"; });
    t.expect(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, xy) == zero,
             [&] { return w + ": Jacobi identity"; });
    t.expect(check_lie_rinehart(x, y, phi, {f}, {psi}), w);
  });
  return t;
}

Tally criterion_5() {
  Tally t;
  sweep(t, "nondegeneracy", {2}, [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t n, const std::string& w) {
    Poly wpoly = random_poly(rng, n);
    wpoly.add_term(Monomial(std::vector<unsigned>(n, 0)), rng.nonzero_rational() - wpoly.constant_term());
    const LcsData lcs = make_lcs(alg, RForm(n, 1, Rational(0)), planar_form(wpoly));
    const APoly f = random_apoly(rng, alg, n);
    NearPoint xi = random_near_point(rng, alg, n);
    for (auto& c : xi.coords) c -= AElement::scalar(alg, augmentation(c));
    const auto x = HamiltonianSolver(lcs).field_at(f, xi);
    // Residual of i_X(w dx1^dx2) = dF, written out: w X1 dx2 - w X2 dx1.
    const AElement wx = apoly_eval(prolong(wpoly, alg), xi);
    t.expect(-x[1] * wx == apoly_eval(f.partial(0), xi) && x[0] * wx == apoly_eval(f.partial(1), xi),
             [&] { return w + ": w = " + to_string(wpoly) + "; F = " + show(f); });

    AMatrix m(3, std::vector<AElement>(3, AElement::zero(alg)));
    for (auto& row : m) {
      for (auto& e : row) e = random_element(rng, alg);
    }
    for (std::size_t i = 0; i < 3; ++i) m[i][i] += AElement::scalar(alg, 10 * (i + 1));
    const AMatrix inv = nil_matrix_invert(m);
    t.expect(is_identity(multiply(m, inv)) && is_identity(multiply(inv, m)), [&] { return w + ": M.M^-1 != I"; });
  });

  const auto alg = make_jet_algebra_1d(2);
  const LcsData degenerate = make_lcs(alg, RForm(2, 1, Rational(0)), planar_form(coordinate(2, 0)));
  const NearPoint at_origin(alg, {AElement::basis(alg, 1), AElement::zero(alg)});
  bool rejected = false;
  try {
    HamiltonianSolver(degenerate).field_at(coordinate_A(alg, 2, 1), at_origin);
  } catch (const DegenerateFormError&) {
    rejected = true;
  }
  t.expect(rejected, [] { return std::string("omega = x1 dx1^dx2 accepted at the origin"); });
  bool singular = false;
  try {
    nil_matrix_invert(AMatrix{{AElement::basis(alg, 1)}});
  } catch (const NotInvertibleError&) {
    singular = true;
  }
  t.expect(singular, [] { return std::string("[[eps]] inverted"); });
  return t;
}

Tally criterion_6() {
  Tally t;
  for (int a1 : {0, 1}) {
    const std::string label = a1 == 0 ? "alpha=0" : "alpha=dx";
    sweep(t, "prolongation-" + label, {2},
          [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t, const std::string& w) {
            const LcsData lcs = make_lcs(alg, planar_alpha(a1), planar_form(constant_poly(2, 1)));
            const HamiltonianSolver solver(lcs);
            const Poly f = random_poly(rng, 2), g = random_poly(rng, 2);
            std::vector<APoly> expected;
            for (const auto& c : oracle::planar_hamiltonian(1, a1, 0, f)) expected.push_back(prolong(c, alg));
            t.expect(solver.field(prolong(f, alg)) == vector_field(expected),
                     [&] { return label + " " + w + ": X_{f^A} for f = " + to_string(f); });
            t.expect(solver.bracket(prolong(f, alg), prolong(g, alg)) ==
                         prolong(oracle::planar_bracket(1, a1, 0, f, g), alg),
                     [&] { return label + " " + w + ": {f^A, g^A} for f = " + to_string(f) + ", g = " + to_string(g); });
          });
  }
  return t;
}

Tally criterion_7() {
  Tally t;
  sweep(t, "transported", {2}, [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t, const std::string& w) {
    const LcsData lcs = make_lcs(alg, planar_alpha(1), planar_form(constant_poly(2, 1)));
    const HamiltonianSolver solver(lcs);
    const ABracket br = lcs_bracket(lcs);
    const APoly phi = random_apoly(rng, alg, 2), psi = random_apoly(rng, alg, 2), chi = random_apoly(rng, alg, 2);
    t.expect(check_two_formula(solver, phi, psi), w);
    t.expect(check_hamiltonian_morphism(solver, phi, psi), w);
    t.expect(check_lie_derivative_vanishes(solver, phi), w);
    t.expect(check_modified_leibniz(br, phi, psi, chi), w);
  });
  return t;
}

Tally criterion_8() {
  Tally t;
  const LcsData base = make_lcs(make_jet_algebra_1d(1), planar_alpha(1), planar_form(constant_poly(2, 1)));
  const PolyMatrix curved{{zero_poly(2), coordinate(2, 0) * coordinate(2, 0) + coordinate(2, 1)},
                          {-(coordinate(2, 0) * coordinate(2, 0) + coordinate(2, 1)), zero_poly(2)}};
  const std::vector<std::pair<std::string, JacobiData>> inputs{
      {"lcs-derived", jacobi_from_lcs(base)},
      {"poisson", make_jacobi({{zero_poly(2), constant_poly(2, 1)}, {constant_poly(2, -1), zero_poly(2)}},
                              {zero_poly(2), zero_poly(2)})},
      {"curved-poisson", make_jacobi(curved, {zero_poly(2), zero_poly(2)})},
  };
  for (const auto& [label, jd] : inputs) {
    const ABracket br = prolong_jacobi(jd);
    sweep(t, "prolonged-" + label, {2}, [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t, const std::string& w) {
      const Poly f = random_poly(rng, 2), g = random_poly(rng, 2);
      const APoly fa = prolong(f, alg), ga = prolong(g, alg);
      const APoly lhs = br(fa, ga);
      t.expect(lhs == prolong(jacobi_bracket(jd, f, g), alg),
               [&] { return label + " " + w + ": f = " + to_string(f) + "; g = " + to_string(g); });
      const APoly phi = random_apoly(rng, alg, 2), psi = random_apoly(rng, alg, 2);
      t.expect(br(phi, psi) == oracle::jacobi_formula(jd, phi, psi), [&] { return label + " " + w + ": formula"; });
      if (label == "lcs-derived") {
        const LcsData lcs = make_lcs(alg, planar_alpha(1), planar_form(constant_poly(2, 1)));
        t.expect(lhs == HamiltonianSolver(lcs).bracket(fa, ga), [&] { return w + ": prolonged vs lcs"; });
      }
    });
  }
  return t;
}

Tally criterion_9() {
  Tally t;
  for (const auto& alg : oracle::test_algebras()) {
    const APoly one = constant_apoly(2, AElement::one(alg));
    const ABracket jacobi = lcs_bracket(make_lcs(alg, planar_alpha(1), planar_form(constant_poly(2, 1))));
    const APoly witness = jacobi(coordinate_A(alg, 2, 1), one);
    t.expect(witness == one, [&] { return oracle::algebra_name(alg) + ": {y^A, 1} = " + show(witness); });
  }
  sweep(t, "poisson-ad-one", {2}, [&](SampleRng& rng, const AlgebraPtr& alg, std::size_t, const std::string& w) {
    const ABracket poisson = lcs_bracket(make_lcs(alg, planar_alpha(0), planar_form(constant_poly(2, 1))));
    const APoly phi = random_apoly(rng, alg, 2);
    const APoly value = poisson(phi, constant_apoly(2, AElement::one(alg)));
    t.expect(value.is_zero(), [&] { return w + ": {phi, 1} = " + show(value); });
  });
  return t;
}

/// A failing report must name a counterexample that the same seed reproduces,
/// including from a run truncated just after the failing sample.
void expect_replayable(Tally& t, const std::string& label, const SuiteInput& in, const std::string& suite) {
  const auto first = run_suite(suite, in);
  const auto again = run_suite(suite, in);
  const IdentityResult* failure = nullptr;
  for (const auto& r : first) {
    if (r.status == Status::fail) {
      failure = &r;
      break;
    }
  }
  t.expect(failure != nullptr && failure->counterexample.has_value(),
           [&] { return label + ": suite " + suite + " passed on corrupted input"; });
  if (failure == nullptr || !failure->counterexample) return;
  SuiteInput truncated = in;
  truncated.samples = failure->counterexample->sample + 1;
  const auto replay = run_suite(suite, truncated);
  bool reproduced = false;
  for (const auto& r : replay) {
    if (r.name == failure->name && r.counterexample) {
      reproduced = r.counterexample->sample_seed == failure->counterexample->sample_seed &&
                   r.counterexample->witness == failure->counterexample->witness;
    }
  }
  bool stable = first.size() == again.size();
  for (std::size_t i = 0; stable && i < first.size(); ++i) {
    stable = first[i].status == again[i].status &&
             first[i].counterexample.has_value() == again[i].counterexample.has_value() &&
             (!first[i].counterexample || first[i].counterexample->witness == again[i].counterexample->witness);
  }
  t.expect(reproduced && stable, [&] { return label + ": counterexample for " + failure->name + " not replayable"; });
  t.note(label + ": " + suite + "/" + failure->name + " fails at sample " +
         std::to_string(failure->counterexample->sample) + ", seed " +
         std::to_string(failure->counterexample->sample_seed));
}

Tally criterion_10() {
  Tally t;
  // One structure constant of R[eps]/(eps^4) corrupted: eps^2 * eps^2 = eps^3 instead of 0.
  StructureTable table = make_jet_algebra_1d(3)->table();
  table.at(2, 2, 3) = 1;
  bool named = false;
  try {
    validate_local(table);
  } catch (const AlgebraError& e) {
    named = std::string(e.what()).find("basis triple") != std::string::npos;
  }
  t.expect(named, [] { return std::string("validate_local accepted the corrupted table"); });
  SuiteInput corrupted_algebra;
  corrupted_algebra.algebra = WeilAlgebra::make_unchecked(table);
  corrupted_algebra.n = 2;
  corrupted_algebra.seed = kSeed;
  corrupted_algebra.samples = kSamples;
  expect_replayable(t, "corrupted structure constant", corrupted_algebra, "prop1");

  // One coefficient of omega^A corrupted: (dx1^dx2)^A becomes (1 + eps x1^A) dx1^dx2.
  const auto alg = make_jet_algebra_1d(2);
  LcsData lcs = make_lcs(alg, planar_alpha(1), planar_form(constant_poly(2, 1)));
  AForm w(2, 2, AElement::zero(alg));
  w.add({0, 1}, constant_apoly(2, AElement::one(alg)) + a_scale(AElement::basis(alg, 1), coordinate_A(alg, 2, 0)));
  lcs.omega_A = w;
  SuiteInput corrupted_omega;
  corrupted_omega.algebra = alg;
  corrupted_omega.n = 2;
  corrupted_omega.lcs = lcs;
  corrupted_omega.seed = kSeed;
  corrupted_omega.samples = kSamples;
  expect_replayable(t, "corrupted omega^A coefficient", corrupted_omega, "prolongation");

  // A non-closed omega on R^4 breaks the Jacobi identity itself.
  const Problem p = load_problem(source_dir / "tests" / "data" / "corrupted_omega.np");
  SuiteInput non_closed;
  non_closed.algebra = p.algebra;
  non_closed.n = p.n;
  non_closed.lcs = p.lcs;
  non_closed.seed = kSeed;
  non_closed.samples = kSamples;
  expect_replayable(t, "non-closed omega", non_closed, "jacobi-axioms");
  return t;
}

Tally criterion_11() {
  Tally t;
  for (const std::string name : {"lcs_jet2", "jacobi_2jets"}) {
    const Problem p = load_problem(source_dir / "problems" / (name + ".np"));
    const auto suites = selected_suites(p, "");
    const std::string a = report_json(run_checks(p, suites, p.seed, p.samples));
    const std::string b = report_json(run_checks(p, suites, p.seed, p.samples));
    t.expect(a == b, [&] { return name + ": reports differ between runs"; });
    std::ifstream golden(source_dir / "tests" / "golden" / (name + ".json"), std::ios::binary);
    std::stringstream buffer;
    buffer << golden.rdbuf();
    t.expect(golden.good() && buffer.str() == a, [&] { return name + ": report differs from golden file"; });
  }
  return t;
}

}  // namespace

int main() {
  const std::pair<const char*, Tally (*)()> criteria[] = {
      {"prolongation is a ring homomorphism", criterion_1},
      {"formal substitution equals the Taylor-sum oracle", criterion_2},
      {"order-1 operator law X(fg) = X(f)g^A + f^A X(g) - f^A g^A X(1)", criterion_3},
      {"operator bracket: antisymmetry, A-bilinearity, Jacobi, module expansion, tilde naturality", criterion_4},
      {"nondegenerate solves have zero residual, matrix inverses round-trip, degenerate omega rejected", criterion_5},
      {"X_{f^A} = (X_f)^A and {f^A, g^A} = {f, g}^A for alpha = 0 and alpha = dx", criterion_6},
      {"lcs instance: two bracket formulas agree, Hamiltonian morphism, theta_X omega^A = 0, ad Leibniz", criterion_7},
      {"prolonged (Lambda, E) brackets equal {f, g}^A and agree with the lcs bracket", criterion_8},
      {"Jacobi witness {y^A, 1} = 1 for alpha = dx; {phi, 1} = 0 for alpha = 0", criterion_9},
      {"corrupted algebra constant or omega coefficient fails with a replayable counterexample", criterion_10},
      {"identical inputs give byte-identical JSON matching the golden files", criterion_11},
  };
  bool all = true;
  int index = 1;
  for (const auto& [title, run] : criteria) {
    Tally t;
    try {
      t = run();
    } catch (const std::exception& e) {
      t.merge_error(std::string("unexpected error: ") + e.what());
    }
    all = all && t.ok();
    std::cout << (t.ok() ? "[PASS] " : "[FAIL] ") << index++ << ". " << title << " (" << t.summary() << ")\n"
              << std::flush;
  }
  return all ? 0 : 1;
}
