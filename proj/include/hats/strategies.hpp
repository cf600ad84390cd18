// strategies.hpp -- deterministic guessing rules for line puzzles

#pragma once

#include "hats/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hats {

/// Decision rule: (spec, speaker, hats the speaker sees, transcript so far)
/// -> announced color. Must be pure and must not depend on the speaker's own
/// hat, which is absent from the visible map.
using DecideFn = std::function<ColorId(const PuzzleSpec&, Position, const VisibleHats&,
                                       const Transcript&)>;

struct Strategy {
  std::string id;
  /// Speaking order, as positions.
  std::vector<Position> order;
  DecideFn decide;
  /// Worst-case mistake count the strategy is documented to achieve.
  std::optional<std::size_t> claimed_bound;
};

/// n-1, n-2, ..., 0.
std::vector<Position> back_to_front(std::size_t n);

/// Two logicians: the back names the front hat, the front repeats it.
Strategy copy_front(const PuzzleSpec& spec);

/// Three logicians, two colors: the back says red for "same", blue for
/// "different" about the two hats ahead.
Strategy same_different(const PuzzleSpec& spec);

/// Two colors, any n: the back says red iff the reds it sees are even; the
/// rest say red iff the reds they see plus the reds they heard are even.
Strategy parity(const PuzzleSpec& spec);

/// Any n and N: every speaker announces the color that makes the sum of what
/// it sees, what it heard and its announcement vanish mod N.
Strategy modular_sum(const PuzzleSpec& spec);

/// Distinct-colors puzzle with at most three mistakes.
///
/// The back announces c0 = -(sum seen) mod N. A middle logician wearing c0 may
/// not repeat it and announces the front hat instead (a dodge). Speakers who
/// see the front hat recognise that announcement as a dodge, since no honest
/// middle guess can equal the front hat, and substitute c0 back into the sum.
/// The front announces its zero-sum candidate, or the smallest unannounced
/// color when that candidate was already spoken.
Strategy distinct3(const PuzzleSpec& spec);

/// Lookup by CLI id: copy_front, same_different, parity, modular_sum, distinct3.
Strategy strategy_by_id(const std::string& id, const PuzzleSpec& spec);

const std::vector<std::string>& strategy_ids();

}  // namespace hats
