// nearpoint: validate problem files, run verification suites, evaluate brackets.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nearpoint/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Weil-algebra prolongations and A-Jacobi brackets"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check the algebra and structure invariants of a problem file");
  validate->add_option("problem", validate_path, "Problem file")->required();

  std::string check_path;
  nearpoint::CheckOptions opt;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string json_path;
  auto* check = app.add_subcommand("check", "Run verification suites");
  check->add_option("problem", check_path, "Problem file")->required();
  check->add_option("--suite", opt.suite, "Suite to run")
      ->check(CLI::IsMember({"prop1", "lie-rinehart", "jacobi-axioms", "prolongation", "all"}));
  auto* seed_opt = check->add_option("--seed", seed, "Run seed (overrides the file)");
  auto* samples_opt = check->add_option("--samples", samples, "Samples per identity (overrides the file)");
  auto* json_opt = check->add_option("--json", json_path, "Write the JSON report to this path");
  check->add_flag("--quiet", opt.quiet, "Print only failures");

  std::string bracket_path, f_text, g_text;
  auto* bracket = app.add_subcommand("bracket", "Evaluate {F, G} for names or A-polynomial literals");
  bracket->add_option("problem", bracket_path, "Problem file")->required();
  bracket->add_option("F", f_text, "First argument")->required();
  bracket->add_option("G", g_text, "Second argument")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nearpoint::exit_error;
  }

  if (*validate) return nearpoint::cmd_validate(validate_path, std::cout, std::cerr);
  if (*check) {
    if (*seed_opt) opt.seed = seed;
    if (*samples_opt) opt.samples = samples;
    if (*json_opt) opt.json_path = json_path;
    return nearpoint::cmd_check(check_path, opt, std::cout, std::cerr);
  }
  return nearpoint::cmd_bracket(bracket_path, f_text, g_text, std::cout, std::cerr);
}
