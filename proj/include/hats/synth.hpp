// synth.hpp -- exhaustive search for decision tables with a bounded number
// of guaranteed mistakes

#pragma once

#include "hats/core.hpp"
#include "hats/strategies.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hats {

/// Everything a speaker knows at decision time: the exact sequence of hats
/// seen (front-to-back) and the announcements heard (in speaking order).
struct InformationSet {
  Position speaker = 0;
  std::vector<ColorId> seen;
  std::vector<ColorId> heard;

  friend auto operator<=>(const InformationSet&, const InformationSet&) = default;
};

using DecisionTable = std::map<InformationSet, ColorId>;

struct SearchLimits {
  std::uint64_t max_assignments = 1000;
  std::uint64_t max_information_sets = 100'000;
  std::uint64_t max_nodes = 200'000'000;
};

struct SearchOutcome {
  std::optional<DecisionTable> witness;
  std::uint64_t nodes_explored = 0;
};

/// Depth-first search for a back-to-front decision table under which every
/// assignment has at most `k` mistakes. Tables are filled lazily while
/// replaying assignments in lexicographic order; an information set is fixed
/// the first time some assignment reaches it, candidate colors ascending.
/// A branch is cut as soon as one assignment exceeds `k`.
///
/// Throws SearchLimitExceeded for instances past `limits` and InvalidInput
/// for limited-supply puzzles.
SearchOutcome exists_strategy(const PuzzleSpec& spec, std::size_t k,
                              const SearchLimits& limits = {});

struct SynthesisResult {
  std::size_t min_guaranteed_mistakes = 0;
  DecisionTable witness;
  std::uint64_t nodes_explored = 0;
};

/// Iterative deepening over k = 0, 1, ... ; the first success is optimal.
SynthesisResult min_guaranteed_mistakes(const PuzzleSpec& spec, const SearchLimits& limits = {});

/// Replays a decision table as a Strategy. Unknown information sets raise
/// StrategyFault.
Strategy table_strategy(DecisionTable table, std::size_t n,
                        std::optional<std::size_t> claimed_bound = std::nullopt);

}  // namespace hats
