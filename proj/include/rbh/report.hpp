#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rbh {

enum class ModeKind { exhaustive, sample, extremal_only };

struct Mode {
  ModeKind kind = ModeKind::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  static Mode exhaustive() { return {}; }
  static Mode sample(std::uint64_t seed, std::uint64_t count) { return {ModeKind::sample, seed, count}; }
  static Mode extremal_only() { return {ModeKind::extremal_only, 0, 0}; }
};

inline std::string mode_name(ModeKind k) {
  switch (k) {
    case ModeKind::exhaustive: return "exhaustive";
    case ModeKind::sample: return "sample";
    case ModeKind::extremal_only: return "extremal-only";
  }
  return "?";
}

/// Outcome of one harness run. `violations` and `exceptions` hold replayable
/// witnesses (BFAM or BGF text, or a short description for numeric suites);
/// `exceptions` are the configurations a statement explicitly excludes.
struct VerificationReport {
  std::string target;
  std::string variant;
  int n = 0;
  Mode mode;
  std::uint64_t cases_checked = 0;
  std::uint64_t hypothesis_cases = 0;
  std::vector<std::string> violations;
  std::vector<std::string> exceptions;
  std::map<std::string, std::uint64_t> counters;
  std::chrono::duration<double> elapsed{0.0};

  bool passed() const { return violations.empty(); }
  std::string verdict() const { return passed() ? "pass" : "fail"; }

  /// Sorts witness lists so merged parallel runs compare equal.
  void canonicalize() {
    std::sort(violations.begin(), violations.end());
    std::sort(exceptions.begin(), exceptions.end());
  }
};

inline nlohmann::json to_json(const VerificationReport& r, bool include_elapsed = true) {
  nlohmann::json mode = {{"kind", mode_name(r.mode.kind)}};
  if (r.mode.kind == ModeKind::sample) {
    mode["seed"] = r.mode.seed;
    mode["count"] = r.mode.count;
  }
  nlohmann::json j = {
      {"target", r.target},
      {"variant", r.variant},
      {"n", r.n},
      {"mode", mode},
      {"cases_checked", r.cases_checked},
      {"hypothesis_cases", r.hypothesis_cases},
      {"violations", r.violations},
      {"exceptions", r.exceptions},
      {"counters", r.counters},
      {"verdict", r.verdict()},
  };
  if (include_elapsed) j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

inline std::string csv_header() {
  return "target,variant,n,mode,cases_checked,hypothesis_cases,violations,exceptions,verdict,elapsed_seconds";
}

inline std::string to_csv_row(const VerificationReport& r) {
  return r.target + "," + r.variant + "," + std::to_string(r.n) + "," + mode_name(r.mode.kind) + "," +
         std::to_string(r.cases_checked) + "," + std::to_string(r.hypothesis_cases) + "," +
         std::to_string(r.violations.size()) + "," + std::to_string(r.exceptions.size()) + "," +
         r.verdict() + "," + std::to_string(r.elapsed.count());
}

}  // namespace rbh
