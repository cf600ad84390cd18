#include "hats/epistemic.hpp"

#include <algorithm>
#include <set>

namespace hats {

namespace {

const LimitedSupply& require_limited(const PuzzleSpec& spec) {
  auto* l = std::get_if<LimitedSupply>(&spec.variant());
  if (!l) throw InvalidInput("epistemic reasoning requires a limited-supply puzzle");
  return *l;
}

bool same_view(const PuzzleSpec& spec, const Assignment& a, const Assignment& b,
               Position position) {
  const std::size_t end = spec.visibility() == Visibility::LineForward ? position : a.size();
  for (std::size_t i = 0; i < end; ++i)
    if (i != position && a[i] != b[i]) return false;
  return true;
}

// Own-color knowledge without the membership check.
Announcement knowledge(const PuzzleSpec& spec, const WorldSet& worlds, const Assignment& actual,
                       Position position) {
  std::optional<ColorId> own;
  for (const auto& w : worlds) {
    if (!same_view(spec, w, actual, position)) continue;
    if (own && *own != w[position]) return DontKnow{};
    own = w[position];
  }
  return Know{*own};
}

void check_order(const PuzzleSpec& spec, const std::vector<Position>& order) {
  for (auto p : order)
    if (p >= spec.n()) throw InvalidInput("speaker position " + std::to_string(p) + " out of range");
}

}  // namespace

Status status_of(const Announcement& a) {
  if (std::holds_alternative<DontKnow>(a)) return Status::DontKnow;
  if (std::holds_alternative<Know>(a)) return Status::Know;
  throw InvalidInput("color guesses carry no know/don't-know status");
}

std::vector<Position> seating_order(std::size_t n) {
  std::vector<Position> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return order;
}

WorldSet initial_worlds(const PuzzleSpec& spec) {
  require_limited(spec);
  return enumerate_assignments(spec);
}

Announcement knows_own(const PuzzleSpec& spec, const WorldSet& worlds, const Assignment& actual,
                       Position position) {
  if (position >= spec.n()) throw InvalidInput("position out of range");
  if (!std::binary_search(worlds.begin(), worlds.end(), actual))
    throw InconsistentHistory("the actual world was already eliminated");
  return knowledge(spec, worlds, actual, position);
}

WorldSet announce(const PuzzleSpec& spec, const WorldSet& worlds, Position position,
                  const Announcement& decision) {
  if (position >= spec.n()) throw InvalidInput("position out of range");
  const Status said = status_of(decision);
  WorldSet kept;
  for (const auto& w : worlds)
    if (status_of(knowledge(spec, worlds, w, position)) == said) kept.push_back(w);
  if (kept.empty())
    throw InconsistentHistory("announcement by position " + std::to_string(position) +
                              " contradicts every remaining world");
  return kept;
}

Transcript simulate(const PuzzleSpec& spec, const Assignment& actual,
                    const std::vector<Position>& order) {
  validate(spec, actual);
  check_order(spec, order);
  auto worlds = initial_worlds(spec);
  Transcript t;
  for (auto p : order) {
    auto decision = knows_own(spec, worlds, actual, p);
    worlds = announce(spec, worlds, p, decision);
    t.push(p, decision);
  }
  return t;
}

WorldSet consistent_worlds(const PuzzleSpec& spec, const std::vector<Status>& observed,
                           const std::vector<Position>& order) {
  if (observed.size() > order.size() || observed.size() > spec.n())
    throw InvalidInput("transcript longer than the speaking order");
  check_order(spec, order);
  auto worlds = initial_worlds(spec);
  for (std::size_t i = 0; i < observed.size(); ++i) {
    WorldSet kept;
    for (const auto& w : worlds)
      if (status_of(knowledge(spec, worlds, w, order[i])) == observed[i]) kept.push_back(w);
    if (kept.empty())
      throw InconsistentHistory("no world is consistent with answer " + std::to_string(i + 1));
    worlds = std::move(kept);
  }
  return worlds;
}

std::vector<ColorId> deduce(const PuzzleSpec& spec, const std::vector<Status>& observed,
                            const std::vector<Position>& order, Position query) {
  if (query >= spec.n()) throw InvalidInput("query position out of range");
  std::set<ColorId> colors;
  for (const auto& w : consistent_worlds(spec, observed, order)) colors.insert(w[query]);
  return {colors.begin(), colors.end()};
}

}  // namespace hats
