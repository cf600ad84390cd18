#include "hats/strategies.hpp"

#include <algorithm>

namespace hats {

namespace {

std::uint32_t mod_neg(std::uint64_t sum, std::size_t modulus) {
  return static_cast<std::uint32_t>((modulus - sum % modulus) % modulus);
}

const RepeatedColors& require_repeated(const PuzzleSpec& spec, const std::string& id) {
  auto* r = std::get_if<RepeatedColors>(&spec.variant());
  if (!r) throw InvalidInput(id + " requires the repeated-colors puzzle");
  return *r;
}

std::size_t count_color(const VisibleHats& seen, ColorId c) {
  return static_cast<std::size_t>(std::count_if(
      seen.begin(), seen.end(), [c](const auto& kv) { return kv.second == c; }));
}

std::uint64_t sum_seen(const VisibleHats& seen) {
  std::uint64_t s = 0;
  for (const auto& [pos, c] : seen) s += c.value;
  return s;
}

ColorId smallest_unannounced(std::size_t colors, const Transcript& heard) {
  for (std::uint32_t c = 0; c < colors; ++c)
    if (!heard.announced(ColorId{c})) return ColorId{c};
  throw StrategyFault("every color has already been announced");
}

}  // namespace

std::vector<Position> back_to_front(std::size_t n) {
  std::vector<Position> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = n - 1 - i;
  return order;
}

Strategy copy_front(const PuzzleSpec& spec) {
  const auto& r = require_repeated(spec, "copy_front");
  if (r.n != 2 || r.colors != 2)
    throw InvalidInput("copy_front requires exactly two logicians and two colors");
  auto decide = [](const PuzzleSpec&, Position p, const VisibleHats& seen,
                   const Transcript& heard) -> ColorId {
    if (p == 1) return seen.at(0);
    return heard.guesses().front();
  };
  return {"copy_front", back_to_front(2), decide, 1};
}

Strategy same_different(const PuzzleSpec& spec) {
  const auto& r = require_repeated(spec, "same_different");
  if (r.n != 3 || r.colors != 2)
    throw InvalidInput("same_different requires exactly three logicians and two colors");
  auto flip = [](ColorId c) { return c == kRed ? kBlue : kRed; };
  auto decide = [flip](const PuzzleSpec&, Position p, const VisibleHats& seen,
                       const Transcript& heard) -> ColorId {
    if (p == 2) return seen.at(0) == seen.at(1) ? kRed : kBlue;
    const auto said = heard.guesses();
    const bool same = said[0] == kRed;
    // The middle compares with the front hat it sees; the front compares with
    // what the middle announced.
    const ColorId partner = p == 1 ? seen.at(0) : said[1];
    return same ? partner : flip(partner);
  };
  return {"same_different", back_to_front(3), decide, 1};
}

Strategy parity(const PuzzleSpec& spec) {
  const auto& r = require_repeated(spec, "parity");
  if (r.colors != 2) throw InvalidInput("parity requires two colors");
  auto decide = [](const PuzzleSpec&, Position, const VisibleHats& seen,
                   const Transcript& heard) -> ColorId {
    const auto said = heard.guesses();
    const auto reds = count_color(seen, kRed) +
                      static_cast<std::size_t>(std::count(said.begin(), said.end(), kRed));
    return reds % 2 == 0 ? kRed : kBlue;
  };
  return {"parity", back_to_front(r.n), decide, 1};
}

Strategy modular_sum(const PuzzleSpec& spec) {
  const auto& r = require_repeated(spec, "modular_sum");
  auto decide = [](const PuzzleSpec& s, Position, const VisibleHats& seen,
                   const Transcript& heard) -> ColorId {
    std::uint64_t total = sum_seen(seen);
    for (auto c : heard.guesses()) total += c.value;
    return ColorId{mod_neg(total, s.colors())};
  };
  return {"modular_sum", back_to_front(r.n), decide, 1};
}

Strategy distinct3(const PuzzleSpec& spec) {
  if (!spec.is_distinct()) throw InvalidInput("distinct3 requires the distinct-colors puzzle");
  auto decide = [](const PuzzleSpec& s, Position p, const VisibleHats& seen,
                   const Transcript& heard) -> ColorId {
    const std::size_t n = s.n();
    const std::size_t colors = s.colors();
    if (p == n - 1) return ColorId{mod_neg(sum_seen(seen), colors)};

    const auto said = heard.guesses();
    const ColorId c0 = said.front();
    std::uint64_t total = sum_seen(seen) + c0.value;
    if (p == 0) {
      for (std::size_t i = 1; i < said.size(); ++i) total += said[i].value;
      const ColorId candidate{mod_neg(total, colors)};
      return heard.announced(candidate) ? smallest_unannounced(colors, heard) : candidate;
    }

    const ColorId front = seen.at(0);
    for (std::size_t i = 1; i < said.size(); ++i)
      total += (said[i] == front ? c0 : said[i]).value;
    const ColorId candidate{mod_neg(total, colors)};
    if (!heard.announced(candidate)) return candidate;
    if (!heard.announced(front)) return front;
    return smallest_unannounced(colors, heard);
  };
  return {"distinct3", back_to_front(spec.n()), decide, 3};
}

const std::vector<std::string>& strategy_ids() {
  static const std::vector<std::string> ids = {"copy_front", "same_different", "parity",
                                               "modular_sum", "distinct3"};
  return ids;
}

Strategy strategy_by_id(const std::string& id, const PuzzleSpec& spec) {
  if (id == "copy_front") return copy_front(spec);
  if (id == "same_different") return same_different(spec);
  if (id == "parity") return parity(spec);
  if (id == "modular_sum") return modular_sum(spec);
  if (id == "distinct3") return distinct3(spec);
  throw InvalidInput("unknown strategy '" + id + "'");
}

}  // namespace hats
