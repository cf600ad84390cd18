// verifier.hpp -- run strategies against assignments and aggregate
// worst-case guarantees

#pragma once

#include "hats/core.hpp"
#include "hats/strategies.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hats {

struct RunResult {
  Transcript transcript;
  /// Positions whose announcement differs from their hat, ascending.
  std::vector<Position> mistakes;
  /// No-repeat breaches (distinct-colors puzzles only).
  std::size_t violations = 0;
};

/// Plays one assignment. Throws StrategyFault if the strategy announces a
/// color outside the palette.
RunResult run_transcript(const PuzzleSpec& spec, const Strategy& strategy,
                         const Assignment& assignment);

struct SampledMode {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  friend bool operator==(const SampledMode&, const SampledMode&) = default;
};

struct VerificationReport {
  std::uint64_t assignments_checked = 0;
  std::size_t worst_case_mistakes = 0;
  /// always_correct[p]: position p was right on every checked assignment.
  std::vector<bool> always_correct;
  /// First checked assignment attaining worst_case_mistakes, when > 0.
  std::optional<Assignment> counterexample;
  std::uint64_t violations_total = 0;
  std::optional<SampledMode> sampled;
  std::int64_t elapsed_ms = 0;

  std::vector<Position> guaranteed_correct_positions() const;

  /// Folds one run into the report.
  void add(const Assignment& a, const RunResult& run);

  /// Equality of everything except elapsed time.
  friend bool same_outcome(const VerificationReport& a, const VerificationReport& b);
};

/// Identity element for merge(): nothing checked, every position guaranteed.
VerificationReport empty_report(const PuzzleSpec& spec);

/// Combines reports over disjoint partitions. `earlier` must cover
/// assignments that precede those of `later`, so counterexample tie-breaking
/// matches a single pass.
VerificationReport merge(const VerificationReport& earlier, const VerificationReport& later);

/// Checks assignments [first, first + count) in lexicographic order.
VerificationReport verify_range(const PuzzleSpec& spec, const Strategy& strategy,
                                std::uint64_t first, std::uint64_t count);

struct VerifyOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  /// 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Every legal assignment. Throws CapExceeded above the cap; use
/// verify_sampled then.
VerificationReport verify_exhaustive(const PuzzleSpec& spec, const Strategy& strategy,
                                     const VerifyOptions& options = {});

/// Uniform pseudo-random legal assignments, reproducible from `seed`.
VerificationReport verify_sampled(const PuzzleSpec& spec, const Strategy& strategy,
                                  std::uint64_t samples, std::uint64_t seed);

/// The i-th sampled assignment for `seed`. Depends only on (seed, i): a
/// SplitMix64 stream started at seed + (i + 1) * 0x9E3779B97F4A7C15, bounded
/// draws by Lemire's multiply-shift with rejection. Distinct puzzles use a
/// partial Fisher-Yates shuffle; limited supplies reject over-supply strings.
Assignment sample_assignment(const PuzzleSpec& spec, std::uint64_t seed, std::uint64_t index);

}  // namespace hats
