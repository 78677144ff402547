#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace nearpoint;

namespace {

const std::filesystem::path source_dir{NEARPOINT_SOURCE_DIR};

std::filesystem::path problem(const std::string& name) { return source_dir / "problems" / name; }
std::filesystem::path fixture(const std::string& name) { return source_dir / "tests" / "data" / name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome validate(const std::filesystem::path& p) {
  std::ostringstream out, err;
  const int code = cmd_validate(p, out, err);
  return {code, out.str(), err.str()};
}

Outcome check(const std::filesystem::path& p, CheckOptions opt = {}) {
  std::ostringstream out, err;
  const int code = cmd_check(p, opt, out, err);
  return {code, out.str(), err.str()};
}

Outcome bracket(const std::filesystem::path& p, const std::string& f, const std::string& g) {
  std::ostringstream out, err;
  const int code = cmd_bracket(p, f, g, out, err);
  return {code, out.str(), err.str()};
}

template <class E>
std::string message_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const E& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(Parser, ShippedProblem) {
  const Problem p = load_problem(problem("lcs_jet2.np"));
  EXPECT_EQ(p.name, "lcs_jet2.np");
  EXPECT_EQ(p.algebra->dim(), 3u);
  EXPECT_EQ(p.n, 2u);
  EXPECT_EQ(p.seed, 42u);
  EXPECT_EQ(p.samples, 100u);
  ASSERT_TRUE(p.lcs.has_value());
  EXPECT_EQ(to_string(p.lcs->alpha), "form1{ (1): 1 }");
  EXPECT_EQ(to_string(p.apolys.at("F")), "eps*x1 + (1 + eps^2)*x2");
  EXPECT_EQ(p.diffops.size(), 2u);
}

TEST(Parser, TableAndJacobi) {
  const Problem p = parse_problem(
      "algebra = table{ dim = 2, labels = [1, e], constants = [ (0,0,0): 1, (0,1,1): 1, (1,0,1): 1 ] }\n"
      "n = 2\n"
      "structure = jacobi{ Lambda = [[0, x1], [-x1, 0]], E = [0, 0] }\n");
  EXPECT_EQ(p.algebra->height(), 1u);
  ASSERT_TRUE(p.jacobi.has_value());
  EXPECT_EQ(to_string(p.jacobi->lambda[0][1]), "x1");
}

TEST(Parser, MalformedRationalPosition) {
  const std::string msg = message_of<ParseError>("algebra = jet{ order = 1 }\nn = 1\npoly f = 3/0*x1\n");
  EXPECT_NE(msg.find("3:10: malformed rational '3/0'"), std::string::npos) << msg;
}

TEST(Parser, UnexpectedTokenPosition) {
  try {
    parse_problem("algebra = jet{ order = 1 }\nn = 2\npoly f = x1 +* x2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 14u);
  }
}

TEST(Parser, SemanticErrorsNameTheEntity) {
  const std::string unknown = message_of<SemanticError>("algebra = jet{ order = 1 }\nn = 2\npoly g = x1 + h\n");
  EXPECT_NE(unknown.find("poly g"), std::string::npos) << unknown;
  EXPECT_NE(unknown.find("'h'"), std::string::npos) << unknown;
  const std::string valued = message_of<SemanticError>("algebra = jet{ order = 1 }\nn = 2\npoly g = eps*x1\n");
  EXPECT_NE(valued.find("A-valued"), std::string::npos) << valued;
}

TEST(Parser, CoordinateOutOfRange) {
  EXPECT_THROW(parse_problem("algebra = jet{ order = 1 }\nn = 2\npoly g = x3\n"), SemanticError);
}

TEST(Parser, IdempotentTableRejected) {
  EXPECT_THROW(load_problem(fixture("idempotent.np")), AlgebraError);
}

TEST(Commands, ValidateExitCodes) {
  EXPECT_EQ(validate(problem("lcs_jet2.np")).code, exit_pass);
  EXPECT_EQ(validate(problem("jacobi_2jets.np")).code, exit_pass);
  EXPECT_EQ(validate(fixture("dual_numbers_table.np")).code, exit_pass);
  const Outcome idem = validate(fixture("idempotent.np"));
  EXPECT_EQ(idem.code, exit_failure);
  EXPECT_NE(idem.err.find("non-nilpotent non-unit part"), std::string::npos) << idem.err;
  const Outcome bad = validate(fixture("bad_rational.np"));
  EXPECT_EQ(bad.code, exit_error);
  EXPECT_NE(bad.err.find("malformed rational"), std::string::npos) << bad.err;
  EXPECT_EQ(validate(fixture("corrupted_omega.np")).code, exit_failure);
  EXPECT_EQ(validate(fixture("missing.np")).code, exit_error);
}

TEST(Commands, CheckExitCodes) {
  const Outcome ok = check(problem("lcs_jet2.np"), CheckOptions{"prolongation", std::nullopt, 10, std::nullopt, false});
  EXPECT_EQ(ok.code, exit_pass) << ok.out;
  const Outcome corrupted = check(fixture("corrupted_omega.np"), CheckOptions{{}, std::nullopt, 20, std::nullopt, true});
  EXPECT_EQ(corrupted.code, exit_failure);
  EXPECT_NE(corrupted.out.find("jacobi-axioms/jacobi-identity"), std::string::npos) << corrupted.out;
  const Outcome degenerate = check(fixture("degenerate_omega.np"));
  EXPECT_EQ(degenerate.code, exit_error);
  EXPECT_NE(degenerate.err.find("degenerate"), std::string::npos) << degenerate.err;
  const Outcome empty = check(problem("lcs_jet2.np"), CheckOptions{{}, std::nullopt, 0, std::nullopt, false});
  EXPECT_EQ(empty.code, exit_error);
  EXPECT_NE(empty.err.find("empty sample set"), std::string::npos);
}

TEST(Commands, Bracket) {
  const Outcome xy = bracket(fixture("dual_numbers_table.np"), "x1", "x2");
  EXPECT_EQ(xy.code, exit_pass);
  EXPECT_EQ(xy.out, "-1\nbase: -1\n");
  EXPECT_EQ(bracket(problem("lcs_jet2.np"), "F", "F").out, "0\n");
  EXPECT_EQ(bracket(problem("lcs_jet2.np"), "x2", "1").out, "1\nbase: 1\n");
  const Outcome unresolved = bracket(problem("lcs_jet2.np"), "H", "x1");
  EXPECT_EQ(unresolved.code, exit_error);
  EXPECT_NE(unresolved.err.find("unknown name 'H'"), std::string::npos) << unresolved.err;
}

TEST(Commands, ReportIsDeterministic) {
  const Problem p = load_problem(problem("jacobi_2jets.np"));
  const auto suites = selected_suites(p, "");
  const std::string a = report_json(run_checks(p, suites, 99, 5));
  const std::string b = report_json(run_checks(p, suites, 99, 5));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, report_json(run_checks(p, suites, 100, 5)));
}

TEST(Commands, JsonCarriesReplayData) {
  const Problem p = load_problem(fixture("corrupted_omega.np"));
  const SuiteReport r = run_checks(p, {"jacobi-axioms"}, 3, 20);
  EXPECT_FALSE(r.passed());
  const auto j = to_json(r);
  bool found = false;
  for (const auto& e : j["results"]) {
    if (e["status"] == "fail") {
      found = true;
      EXPECT_TRUE(e.contains("counterexample"));
      EXPECT_TRUE(e["counterexample"].contains("sample_seed"));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["passed"], false);
}
