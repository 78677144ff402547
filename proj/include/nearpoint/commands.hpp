#pragma once

// The validate, check and bracket commands behind the CLI, writing to caller
// streams and returning the process exit code:
// 0 = all pass, 1 = identity or validation failure, 2 = structural or parse error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nearpoint/errors.hpp"
#include "nearpoint/jacobi.hpp"
#include "nearpoint/problem.hpp"
#include "nearpoint/report.hpp"
#include "nearpoint/suites.hpp"

namespace nearpoint {

enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_error = 2 };

struct CheckOptions {
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::filesystem::path> json_path;
  bool quiet = false;
};

/// Suites named by --suite (or the file's checks list, or all of them).
inline std::vector<std::string> selected_suites(const Problem& p, const std::string& requested) {
  std::vector<std::string> wanted;
  if (!requested.empty()) {
    wanted.push_back(requested);
  } else if (!p.checks.empty()) {
    wanted = p.checks;
  } else {
    wanted.push_back("all");
  }
  std::vector<std::string> out;
  for (const auto& w : wanted) {
    if (w == "all") {
      for (const auto& s : suite_names()) out.push_back(s);
      continue;
    }
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == w;
    if (!known) throw SemanticError("unknown suite '" + w + "' (expected prop1, lie-rinehart, jacobi-axioms, prolongation or all)");
    out.push_back(w);
  }
  std::vector<std::string> unique;
  for (const auto& s : suite_names()) {
    for (const auto& o : out) {
      if (o == s) {
        unique.push_back(s);
        break;
      }
    }
  }
  return unique;
}

/// Runs the selected suites; structural problems propagate as exceptions.
inline SuiteReport run_checks(const Problem& p, const std::vector<std::string>& suites, std::uint64_t seed,
                              std::uint64_t samples) {
  if (samples == 0) throw MismatchError("empty sample set: samples must be positive");
  SuiteInput in;
  in.algebra = p.algebra;
  in.n = p.n;
  for (const auto& [name, op] : p.diffops) in.named_ops.push_back(op);
  in.lcs = p.lcs;
  in.jacobi = p.jacobi;
  in.seed = seed;
  in.samples = samples;

  SuiteReport report;
  report.problem = p.name;
  report.algebra_labels = p.algebra->labels();
  report.algebra_height = p.algebra->height();
  report.n = p.n;
  report.structure = p.lcs ? "lcs" : p.jacobi ? "jacobi" : "none";
  report.solve_mode = p.lcs ? to_string(HamiltonianSolver(*p.lcs).mode()) : "n/a";
  report.seed = seed;
  report.samples = samples;
  report.suites = suites;
  for (const auto& s : suites) {
    auto results = run_suite(s, in);
    report.results.insert(report.results.end(), results.begin(), results.end());
  }
  return report;
}

inline std::string report_json(const SuiteReport& report) { return to_json(report).dump(2) + "\n"; }

namespace detail {

inline std::optional<Problem> load_or_report(const std::filesystem::path& path, std::ostream& err, int& code,
                                             int semantic_code) {
  try {
    return load_problem(path);
  } catch (const ParseError& e) {
    err << path.filename().string() << ":" << e.what() << "\n";
    code = exit_error;
  } catch (const Error& e) {
    err << path.filename().string() << ": " << e.what() << "\n";
    code = semantic_code;
  }
  return std::nullopt;
}

}  // namespace detail

/// Parses the file and checks the algebra and structure invariants.
inline int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::exists(path)) {
    err << "cannot open problem file '" << path.string() << "'\n";
    return exit_error;
  }
  int code = exit_pass;
  const auto p = detail::load_or_report(path, err, code, exit_failure);
  if (!p) return code;
  const WeilAlgebra& alg = *p->algebra;
  out << "algebra: ok (dim " << alg.dim() << ", height " << alg.height() << ", basis";
  for (const auto& l : alg.labels()) out << " " << l;
  out << ")\n";
  out << "n = " << p->n << "\n";
  for (const auto& [name, op] : p->diffops) out << "diffop " << name << ": " << to_string(op) << "\n";
  bool ok = true;
  if (p->lcs) {
    const RForm defect = d_alpha(p->lcs->omega, p->lcs->alpha);
    if (defect.is_zero()) {
      out << "lcs: d omega + alpha ^ omega = 0: ok\n";
    } else {
      out << "lcs: d omega + alpha ^ omega = " << to_string(defect) << ": FAILED\n";
      ok = false;
    }
    const RForm dalpha = exterior_derivative(p->lcs->alpha);
    out << "lcs: d alpha = 0: " << (dalpha.is_zero() ? "ok" : "advisory, d alpha = " + to_string(dalpha)) << "\n";
    try {
      const HamiltonianSolver solver(*p->lcs);
      out << "lcs: omega nondegenerate: ok (" << to_string(solver.mode()) << " solves)\n";
    } catch (const Error& e) {
      out << "lcs: omega nondegenerate: FAILED (" << e.what() << ")\n";
      ok = false;
    }
  } else if (p->jacobi) {
    out << "jacobi: Lambda antisymmetric: ok\n";
  } else {
    out << "structure: none\n";
  }
  out << (ok ? "valid\n" : "invalid\n");
  return ok ? exit_pass : exit_failure;
}

inline int cmd_check(const std::filesystem::path& path, const CheckOptions& opt, std::ostream& out,
                     std::ostream& err) {
  if (!std::filesystem::exists(path)) {
    err << "cannot open problem file '" << path.string() << "'\n";
    return exit_error;
  }
  int code = exit_pass;
  const auto p = detail::load_or_report(path, err, code, exit_error);
  if (!p) return code;
  SuiteReport report;
  try {
    const std::uint64_t samples = opt.samples.value_or(p->samples);
    if (samples == 0) {
      err << "error: empty sample set rejected (samples must be positive)\n";
      return exit_error;
    }
    report = run_checks(*p, selected_suites(*p, opt.suite), opt.seed.value_or(p->seed), samples);
  } catch (const Error& e) {
    err << "structural error: " << e.what() << "\n";
    return exit_error;
  }
  if (opt.json_path) {
    std::ofstream j(*opt.json_path, std::ios::binary);
    if (!j) {
      err << "cannot write JSON report to '" << opt.json_path->string() << "'\n";
      return exit_error;
    }
    j << report_json(report);
  }
  if (!opt.quiet) {
    out << to_text(report);
  } else if (!report.passed()) {
    for (const auto& r : report.results) {
      if (r.status == Status::fail && r.counterexample) {
        out << r.suite << "/" << r.name << ": " << r.counterexample->identity << "; sample " << r.counterexample->sample
            << ": " << r.counterexample->witness << "\n";
      }
    }
  }
  return report.passed() ? exit_pass : exit_failure;
}

/// Prints {F, G} and, when both arguments are prolongations, the base bracket.
inline int cmd_bracket(const std::filesystem::path& path, const std::string& f_text, const std::string& g_text,
                       std::ostream& out, std::ostream& err) {
  if (!std::filesystem::exists(path)) {
    err << "cannot open problem file '" << path.string() << "'\n";
    return exit_error;
  }
  int code = exit_pass;
  const auto p = detail::load_or_report(path, err, code, exit_error);
  if (!p) return code;
  try {
    if (!p->lcs && !p->jacobi) throw SemanticError("problem has no structure section");
    const APoly f = parse_apoly(*p, f_text);
    const APoly g = parse_apoly(*p, g_text);
    const ABracket br = p->lcs ? lcs_bracket(*p->lcs) : prolong_jacobi(*p->jacobi);
    out << to_string(br(f, g)) << "\n";
    auto is_prolongation = [](const APoly& phi) {
      for (const auto& [m, c] : phi.terms()) {
        if (!c.is_scalar()) return false;
      }
      return true;
    };
    if (is_prolongation(f) && is_prolongation(g)) {
      const Poly fb = augmentation(f), gb = augmentation(g);
      const Poly base = p->lcs ? base_bracket(*p->lcs, fb, gb) : jacobi_bracket(*p->jacobi, fb, gb);
      out << "base: " << to_string(base) << "\n";
    }
  } catch (const ParseError& e) {
    err << "argument:" << e.what() << "\n";
    return exit_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_pass;
}

}  // namespace nearpoint
