#include "hats/synth.hpp"

#include <algorithm>
#include <memory>

namespace hats {

namespace {

std::vector<ColorId> seen_prefix(const Assignment& a, Position p) {
  return {a.hats.begin(), a.hats.begin() + static_cast<std::ptrdiff_t>(p)};
}

class TableSearch {
 public:
  TableSearch(const PuzzleSpec& spec, std::size_t budget, std::uint64_t max_nodes)
      : spec_(spec),
        worlds_(enumerate_assignments(spec)),
        order_(back_to_front(spec.n())),
        budget_(budget),
        max_nodes_(max_nodes) {}

  bool run() {
    std::vector<ColorId> heard;
    return visit(0, 0, heard, 0);
  }

  DecisionTable& table() { return table_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool visit(std::size_t world, std::size_t step, std::vector<ColorId>& heard,
             std::size_t mistakes) {
    if (world == worlds_.size()) return true;
    if (step == order_.size()) {
      std::vector<ColorId> fresh;
      return visit(world + 1, 0, fresh, 0);
    }
    if (++nodes_ > max_nodes_)
      throw SearchLimitExceeded("search exceeded " + std::to_string(max_nodes_) + " nodes");

    const Assignment& a = worlds_[world];
    const Position p = order_[step];
    InformationSet key{p, seen_prefix(a, p), heard};

    auto attempt = [&](ColorId c) {
      const std::size_t m = mistakes + (c != a[p] ? 1 : 0);
      if (m > budget_) return false;
      heard.push_back(c);
      const bool ok = visit(world, step + 1, heard, m);
      heard.pop_back();
      return ok;
    };

    if (auto it = table_.find(key); it != table_.end()) return attempt(it->second);

    for (std::uint32_t v = 0; v < spec_.colors(); ++v) {
      const ColorId c{v};
      if (spec_.no_repeat() && std::find(heard.begin(), heard.end(), c) != heard.end()) continue;
      if (c != a[p] && mistakes + 1 > budget_) continue;
      auto [it, inserted] = table_.emplace(key, c);
      if (attempt(c)) return true;
      table_.erase(it);
    }
    return false;
  }

  const PuzzleSpec& spec_;
  std::vector<Assignment> worlds_;
  std::vector<Position> order_;
  std::size_t budget_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  DecisionTable table_;
};

void check_limits(const PuzzleSpec& spec, const SearchLimits& limits) {
  if (spec.is_limited())
    throw InvalidInput("synthesis supports repeated and distinct puzzles only");
  const auto count = count_assignments(spec, limits.max_assignments + 1);
  if (count > limits.max_assignments)
    throw SearchLimitExceeded(spec.describe() + " has more than " +
                              std::to_string(limits.max_assignments) +
                              " assignments; too large for exhaustive synthesis");
  // Each assignment reaches one information set per speaker.
  if (count * spec.n() > limits.max_information_sets)
    throw SearchLimitExceeded(spec.describe() + " may need more than " +
                              std::to_string(limits.max_information_sets) +
                              " information sets");
}

}  // namespace

SearchOutcome exists_strategy(const PuzzleSpec& spec, std::size_t k, const SearchLimits& limits) {
  check_limits(spec, limits);
  TableSearch search(spec, k, limits.max_nodes);
  SearchOutcome out;
  if (search.run()) out.witness = std::move(search.table());
  out.nodes_explored = search.nodes();
  return out;
}

SynthesisResult min_guaranteed_mistakes(const PuzzleSpec& spec, const SearchLimits& limits) {
  check_limits(spec, limits);
  SynthesisResult result;
  for (std::size_t k = 0; k <= spec.n(); ++k) {
    auto outcome = exists_strategy(spec, k, limits);
    result.nodes_explored += outcome.nodes_explored;
    if (outcome.witness) {
      result.min_guaranteed_mistakes = k;
      result.witness = std::move(*outcome.witness);
      return result;
    }
  }
  // k = n admits any legal table, so the loop always returns.
  throw StrategyFault("no decision table found even with every logician wrong");
}

Strategy table_strategy(DecisionTable table, std::size_t n,
                        std::optional<std::size_t> claimed_bound) {
  auto shared = std::make_shared<const DecisionTable>(std::move(table));
  auto decide = [shared](const PuzzleSpec&, Position p, const VisibleHats& seen,
                         const Transcript& heard) -> ColorId {
    InformationSet key{p, {}, heard.guesses()};
    for (const auto& [pos, c] : seen) key.seen.push_back(c);
    auto it = shared->find(key);
    if (it == shared->end())
      throw StrategyFault("decision table has no entry for position " + std::to_string(p));
    return it->second;
  };
  return {"table", back_to_front(n), decide, claimed_bound};
}

}  // namespace hats
