// epistemic.hpp -- possible-worlds reasoning for limited-supply puzzles
//
// Logicians answer "Do you know the color of your own hat?" truthfully and
// publicly. Each answer filters the set of worlds everybody still considers
// possible. Only the know / don't-know status is treated as public; the
// color carried by Know is kept in the transcript for display.

#pragma once

#include "hats/core.hpp"

#include <vector>

namespace hats {

enum class Status { DontKnow, Know };

/// Sorted, duplicate-free set of supply-legal assignments.
using WorldSet = std::vector<Assignment>;

Status status_of(const Announcement& a);

/// Every assignment respecting the supply. Throws InvalidInput for other
/// puzzle variants.
WorldSet initial_worlds(const PuzzleSpec& spec);

/// What `position` can say in world `actual` given the common world set.
/// Returns Know{c} or DontKnow. Throws InconsistentHistory when `actual` is
/// not in `worlds`.
Announcement knows_own(const PuzzleSpec& spec, const WorldSet& worlds,
                       const Assignment& actual, Position position);

/// Public announcement update: keeps the worlds in which `position` would
/// have given the same status. Throws InconsistentHistory if none survive.
WorldSet announce(const PuzzleSpec& spec, const WorldSet& worlds, Position position,
                  const Announcement& decision);

/// Truthful announcements in `order` for the actual world.
Transcript simulate(const PuzzleSpec& spec, const Assignment& actual,
                    const std::vector<Position>& order);

/// Worlds consistent with the observed statuses, spoken by order[0], order[1], ...
WorldSet consistent_worlds(const PuzzleSpec& spec, const std::vector<Status>& observed,
                           const std::vector<Position>& order);

/// Colors `query` wears across every world consistent with the observed
/// statuses. Throws InconsistentHistory when no world fits.
std::vector<ColorId> deduce(const PuzzleSpec& spec, const std::vector<Status>& observed,
                            const std::vector<Position>& order, Position query);

/// 0, 1, ..., n-1: the joke's first, second, third logician.
std::vector<Position> seating_order(std::size_t n);

}  // namespace hats
