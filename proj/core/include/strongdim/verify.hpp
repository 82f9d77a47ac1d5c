#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongdim/graph.hpp"

namespace smd {

/// Order ranges for the seeded trial stream. Single-graph theorems use the
/// left range only; kr-plus-h draws r from the left range. Graphs are
/// Erdos-Renyi draws with edge probability p, conditioned on connectivity
/// where the theorem requires it.
struct TrialRanges {
  int left_min = 2;
  int left_max = 9;
  int right_min = 2;
  int right_max = 9;
  double p = 0.5;
};

/// A failed trial, replayable: the serialized graphs are enough to recompute
/// both sides of the comparison.
struct Counterexample {
  int trial = 0;
  std::string case_id;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<std::pair<std::string, std::string>> graphs;  // label -> file text
  double expected = 0.0;
  double oracle = 0.0;
};

/// Outcome of fuzzing one theorem tag over the seeded stream. A pure
/// function of (theorem_id, ranges, trials, seed); wall_time_seconds is
/// informational only and never serialized, so emitted reports stay
/// byte-identical across runs.
struct VerificationReport {
  std::string theorem_id;
  TrialRanges ranges;
  std::uint64_t seed = 0;
  int trials_attempted = 0;
  int trials_applicable = 0;
  int failures = 0;
  std::vector<Counterexample> counterexamples;
  double wall_time_seconds = 0.0;
};

/// The publicly documented theorem tags.
const std::vector<std::string>& known_theorem_tags();

bool is_known_theorem(const std::string& theorem_id);

/// Sensible desk-scale defaults per tag, sized so every constructed graph
/// stays inside the exact-solver caps.
TrialRanges default_trial_ranges(const std::string& theorem_id);

/// Runs `trials` seeded trials of the tagged theorem. Trials whose
/// hypotheses fail are counted as attempted but not applicable. A group tag
/// (e.g. "join-dims") accepts any of its case tags; a case tag (e.g.
/// "join-dims-ii") counts only trials resolved to that case. Throws
/// std::invalid_argument for unknown tags or ranges exceeding solver caps.
VerificationReport verify_theorem(const std::string& theorem_id, const TrialRanges& ranges,
                                  int trials, std::uint64_t seed);

VerificationReport verify_theorem(const std::string& theorem_id, int trials, std::uint64_t seed);

/// Recomputes (expected, oracle) from a counterexample payload.
std::pair<double, double> replay_counterexample(const Counterexample& ce);

/// Deterministic serializations. schema_version is 1.
std::string report_to_json(const VerificationReport& report);
void report_to_text(std::ostream& out, const VerificationReport& report);

}  // namespace smd
