#include "hats/core.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hats;

namespace {
Assignment hats_of(std::initializer_list<std::uint32_t> v) {
  Assignment a;
  for (auto x : v) a.hats.push_back(ColorId{x});
  return a;
}
}  // namespace

TEST_CASE("palette defaults and parsing") {
  Palette two(2);
  CHECK(two.name(kRed) == "Red");
  CHECK(two.name(kBlue) == "Blue");
  CHECK(two.parse("R") == kRed);
  CHECK(two.parse("blue") == kBlue);
  CHECK(two.parse("1") == kBlue);
  CHECK_THROWS_AS(two.parse("G"), InvalidInput);
  CHECK_THROWS_AS(two.parse("2"), InvalidInput);

  Palette big(12);
  CHECK_FALSE(big.has_names());
  CHECK(big.code(ColorId{11}) == "11");

  CHECK_THROWS_AS(Palette(std::vector<std::string>{"Red", "red"}), InvalidInput);
  Palette figure(std::vector<std::string>{"Yellow", "Red", "Purple", "Blue", "Green"});
  CHECK(figure.parse("Purple") == ColorId{2});
}

TEST_CASE("puzzle spec validation") {
  CHECK_THROWS_AS(PuzzleSpec::repeated(0, 2), InvalidInput);
  CHECK_THROWS_AS(PuzzleSpec::repeated(3, 1), InvalidInput);
  CHECK_THROWS_AS(PuzzleSpec::distinct(0), InvalidInput);
  CHECK_THROWS_AS(PuzzleSpec::limited(3, {1, 1}), InvalidInput);
  CHECK(PuzzleSpec::distinct(4).colors() == 5);
  CHECK(PuzzleSpec::distinct(4).no_repeat());
  CHECK_FALSE(PuzzleSpec::repeated(4, 3).no_repeat());
  CHECK(PuzzleSpec::limited(3, {3, 2}).visibility() == Visibility::Complete);
}

TEST_CASE("assignment validation") {
  const auto d = PuzzleSpec::distinct(3);
  CHECK_NOTHROW(validate(d, hats_of({0, 1, 3})));
  CHECK_THROWS_AS(validate(d, hats_of({0, 0, 3})), InvalidInput);
  CHECK_THROWS_AS(validate(d, hats_of({0, 1})), InvalidInput);
  CHECK_THROWS_AS(validate(d, hats_of({0, 1, 4})), InvalidInput);
  const auto l = PuzzleSpec::limited(3, {3, 2});
  CHECK_THROWS_AS(validate(l, hats_of({1, 1, 1})), InvalidInput);
}

TEST_CASE("enumerate_assignments counts") {
  CHECK(enumerate_assignments(PuzzleSpec::repeated(2, 2)).size() == 4);
  CHECK(enumerate_assignments(PuzzleSpec::distinct(3)).size() == 24);

  // All eight binary strings except blue-blue-blue.
  const auto limited = enumerate_assignments(PuzzleSpec::limited(3, {3, 2}));
  CHECK(limited.size() == 7);
  CHECK(limited == oracle::supply_filter(3, {3, 2}));
  CHECK(std::find(limited.begin(), limited.end(), hats_of({1, 1, 1})) == limited.end());

  CHECK(count_assignments(PuzzleSpec::limited(4, {2, 1, 3})) == oracle::supply_filter(4, {2, 1, 3}).size());
  CHECK(enumerate_assignments(PuzzleSpec::limited(3, {3})).size() == 1);
}

TEST_CASE("enumeration is lexicographic, duplicate-free and legal") {
  for (const auto& spec : {PuzzleSpec::repeated(4, 3), PuzzleSpec::distinct(4),
                           PuzzleSpec::limited(4, {2, 2, 1})}) {
    const auto all = enumerate_assignments(spec);
    CHECK(all.size() == count_assignments(spec));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& a : all) CHECK_NOTHROW(validate(spec, a));
  }
  CHECK(enumerate_assignments(PuzzleSpec::distinct(4)) == oracle::distinct_filter(4));
}

TEST_CASE("distinct assignments leave exactly one color unworn") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& a : enumerate_assignments(PuzzleSpec::distinct(n))) {
      std::set<ColorId> worn(a.hats.begin(), a.hats.end());
      CHECK(worn.size() == n);
    }
  }
}

TEST_CASE("assignment_at agrees with sequential enumeration") {
  for (const auto& spec : {PuzzleSpec::repeated(3, 3), PuzzleSpec::distinct(4),
                           PuzzleSpec::limited(3, {3, 2})}) {
    const auto all = enumerate_assignments(spec);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(assignment_at(spec, i) == all[i]);
    CHECK_THROWS_AS(assignment_at(spec, all.size()), InvalidInput);
  }
}

TEST_CASE("enumeration cap") {
  const auto spec = PuzzleSpec::repeated(24, 2);
  CHECK_THROWS_AS(enumerate_assignments(spec), CapExceeded);
  CHECK_THROWS_AS(enumerate_assignments(PuzzleSpec::repeated(5, 2), 31), CapExceeded);
  CHECK(enumerate_assignments(PuzzleSpec::repeated(5, 2), 32).size() == 32);
  CHECK(count_assignments(PuzzleSpec::distinct(30), 1000) == 1000);
}

TEST_CASE("visible_hats") {
  const auto line = PuzzleSpec::repeated(3, 2);
  const auto rrb = hats_of({0, 0, 1});
  CHECK(visible_hats(line, rrb, 2) == VisibleHats{{0, kRed}, {1, kRed}});
  CHECK(visible_hats(line, rrb, 0).empty());
  CHECK_THROWS_AS(visible_hats(line, rrb, 3), InvalidInput);

  const auto complete = PuzzleSpec::limited(3, {3, 2});
  CHECK(visible_hats(complete, hats_of({0, 1, 0}), 1) == VisibleHats{{0, kRed}, {2, kRed}});

  const auto four = PuzzleSpec::repeated(4, 2);
  for (const auto& a : enumerate_assignments(four))
    for (Position p = 0; p < 4; ++p) {
      CHECK_FALSE(visible_hats(four, a, p).contains(p));
      CHECK(visible_hats(four, a, p).size() == p);
    }
}

TEST_CASE("canonical assignment text") {
  const Palette two(2);
  const auto a = parse_assignment("R,R,B,B,R", two);
  CHECK(a == hats_of({0, 0, 1, 1, 0}));
  CHECK(to_string(a, two) == "R,R,B,B,R");
  CHECK(to_string(hats_of({0, 2, 4, 3}), Palette(12)) == "0,2,4,3");
  CHECK_THROWS_AS(parse_assignment("R,,B", two), InvalidInput);
}

TEST_CASE("transcript bookkeeping") {
  Transcript t;
  t.push(2, ColorGuess{ColorId{3}});
  t.push(1, ColorGuess{ColorId{0}});
  CHECK(t.guesses() == std::vector<ColorId>{ColorId{3}, ColorId{0}});
  CHECK(t.announced(ColorId{3}));
  CHECK_FALSE(t.announced(ColorId{1}));
}
