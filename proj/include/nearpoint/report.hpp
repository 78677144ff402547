#pragma once

// Verification reports: per-identity status with a replayable counterexample,
// rendered as text or as deterministic JSON (no timings, fixed key order).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nearpoint/weil_algebra.hpp"

namespace nearpoint {

/// `advisory` records a failed check that does not affect the exit code.
enum class Status { pass, fail, skipped, advisory };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
    case Status::advisory:
      return "advisory";
  }
  return "?";
}

struct Counterexample {
  std::uint64_t sample = 0;
  std::uint64_t sample_seed = 0;
  std::string identity;
  std::string witness;
};

struct IdentityResult {
  std::string suite;
  std::string name;
  Status status = Status::pass;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
};

struct SuiteReport {
  std::string problem;
  std::vector<std::string> algebra_labels;
  std::size_t algebra_height = 0;
  std::size_t n = 0;
  std::string structure;
  std::string solve_mode;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<std::string> suites;
  std::vector<IdentityResult> results;

  bool passed() const {
    for (const auto& r : results) {
      if (r.status == Status::fail) return false;
    }
    return true;
  }
};

inline nlohmann::ordered_json to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["problem"] = report.problem;
  j["algebra"] = {{"dim", report.algebra_labels.size()},
                  {"height", report.algebra_height},
                  {"basis", report.algebra_labels}};
  j["n"] = report.n;
  j["structure"] = report.structure;
  j["solve_mode"] = report.solve_mode;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["suites"] = report.suites;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json e;
    e["suite"] = r.suite;
    e["identity"] = r.name;
    e["status"] = to_string(r.status);
    e["checked"] = r.checked;
    if (!r.note.empty()) e["note"] = r.note;
    if (r.counterexample) {
      e["counterexample"] = {{"sample", r.counterexample->sample},
                             {"sample_seed", r.counterexample->sample_seed},
                             {"identity", r.counterexample->identity},
                             {"witness", r.counterexample->witness}};
    }
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["passed"] = report.passed();
  return j;
}

inline std::string to_text(const SuiteReport& report) {
  std::string out = "problem " + report.problem + ": n = " + std::to_string(report.n) + ", algebra dim " +
                    std::to_string(report.algebra_labels.size()) + ", seed " + std::to_string(report.seed) +
                    ", samples " + std::to_string(report.samples) + "\n";
  for (const auto& r : report.results) {
    out += "  [" + std::string(to_string(r.status)) + "] " + r.suite + "/" + r.name + " (" +
           std::to_string(r.checked) + " checked)";
    if (!r.note.empty()) out += " - " + r.note;
    out += "\n";
    if (r.counterexample) {
      out += "      identity: " + r.counterexample->identity + "\n";
      out += "      sample " + std::to_string(r.counterexample->sample) + " (seed " +
             std::to_string(r.counterexample->sample_seed) + "): " + r.counterexample->witness + "\n";
    }
  }
  out += report.passed() ? "all identities hold\n" : "identity failure\n";
  return out;
}

}  // namespace nearpoint
