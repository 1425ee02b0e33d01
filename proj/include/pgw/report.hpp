#pragma once

// Orchestration of the CLI subcommands and report serialization.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pgw/hypothesis.hpp"
#include "pgw/ingest.hpp"
#include "pgw/structure.hpp"

namespace pgw {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotApplicable = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitContradiction = 3;

struct RunOptions {
  bool with_oracle = false;
  std::optional<double> budget_seconds;
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// JSON body with the fixed top-level keys group, hypotheses, witness,
/// verification, oracle and timing. Everything but timing is deterministic.
struct RunReport {
  nlohmann::json body;
  int exit_code = kExitOk;
  std::string message;
};

nlohmann::json describe_subgroup(const PcGroup& G, const Subgroup& H);
nlohmann::json to_json(const HypothesisReport& r);

RunReport run_info(const GroupFile& file, const RunOptions& options);
RunReport run_check(const GroupFile& file, const RunOptions& options);
RunReport run_construct(const GroupFile& file, const RunOptions& options);
RunReport run_count(const GroupFile& file, const RunOptions& options);
/// Full pipeline on the built-in order-3^7 group, asserting every reference
/// fact about it. Exit code 3 if any assertion fails.
RunReport run_demo(const RunOptions& options);

/// The reference facts about the built-in order-3^7 group, checked on G.
std::vector<CheckResult> check_example_group(const PcGroup& G);

/// Canonical JSON (sorted keys). Without timing, output is byte-identical
/// across runs and job counts.
std::string render_json(const RunReport& report, bool with_timing = true);
std::string render_text(const RunReport& report);

}  // namespace pgw
