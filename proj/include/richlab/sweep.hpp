#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "richlab/bound_suite.hpp"

namespace richlab {

struct SweepOptions {
  unsigned q = 2;
  std::size_t max_len = 14;
  unsigned jobs = 1;
  /// Also run B8/B9 on the palindromic closure of every word.
  bool include_closures = true;
};

struct BoundTally {
  BoundId id = BoundId::B1;
  std::uint64_t evaluated = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// B8 only: rich instances and how many of them were equalities.
  std::uint64_t equality_instances = 0;
  std::uint64_t equalities = 0;
  double min_slack = 0.0;
  double max_slack = 0.0;
};

struct SweepFinding {
  Word word;
  BoundReport report;
};

struct SweepResult {
  unsigned q = 2;
  std::size_t max_len = 0;
  std::uint64_t words = 0;
  std::uint64_t closures = 0;
  std::array<BoundTally, 12> tallies{};
  /// Failed inequalities, sorted by (word, bound, n).
  std::vector<SweepFinding> violations;
  /// Rich reversal-closed B8 instances without equality, same order.
  std::vector<SweepFinding> equality_failures;
  double elapsed_seconds = 0.0;

  bool clean() const { return violations.empty() && equality_failures.empty(); }
};

/// Runs every bound on every rich word of length <= max_len over q letters,
/// at every admissible order.
SweepResult run_sweep(const SweepOptions& opts);

std::string sweep_csv(const SweepResult& r);
/// Tallies plus every violation and equality failure. Elapsed time is left
/// out so that equal inputs give equal output.
nlohmann::json sweep_json(const SweepResult& r);

}  // namespace richlab
