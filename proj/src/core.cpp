#include "hats/core.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hats {

namespace {

struct DefaultColor {
  const char* name;
  const char* code;
};

constexpr std::array<DefaultColor, 8> kDefaultColors = {{
    {"Red", "R"},
    {"Blue", "B"},
    {"Green", "G"},
    {"Yellow", "Y"},
    {"Purple", "P"},
    {"Orange", "O"},
    {"White", "W"},
    {"Black", "K"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap;
  return std::min(a * b, cap);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a > cap - std::min(b, cap)) return cap;
  return std::min(a + b, cap);
}

std::uint64_t sat_factorial(std::size_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r = sat_mul(r, i, cap);
  return r;
}

std::vector<std::size_t> usage(const Assignment& a, std::size_t colors) {
  std::vector<std::size_t> used(colors, 0);
  for (auto c : a.hats) ++used[c.value];
  return used;
}

bool fits_supply(const LimitedSupply& s, const Assignment& a) {
  auto used = usage(a, s.counts.size());
  for (std::size_t c = 0; c < used.size(); ++c)
    if (used[c] > s.counts[c]) return false;
  return true;
}

// Odometer increment over colors^n, position n-1 least significant.
bool odometer(Assignment& a, std::size_t colors) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.hats[i].value + 1 < colors) {
      ++a.hats[i].value;
      return true;
    }
    a.hats[i] = ColorId{0};
  }
  return false;
}

bool next_distinct(Assignment& a, std::size_t colors) {
  const std::size_t n = a.size();
  for (std::size_t i = n; i-- > 0;) {
    std::vector<bool> used(colors, false);
    for (std::size_t j = 0; j < i; ++j) used[a.hats[j].value] = true;
    for (std::uint32_t c = a.hats[i].value + 1; c < colors; ++c) {
      if (used[c]) continue;
      a.hats[i] = ColorId{c};
      used[c] = true;
      std::uint32_t fill = 0;
      for (std::size_t j = i + 1; j < n; ++j) {
        while (used[fill]) ++fill;
        a.hats[j] = ColorId{fill};
        used[fill] = true;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

// ============================================================================
// Palette
// ============================================================================

Palette::Palette(std::size_t size) : size_(size) {
  if (size == 0) throw InvalidInput("palette must have at least one color");
  if (size <= kDefaultColors.size()) {
    for (std::size_t i = 0; i < size; ++i) {
      names_.emplace_back(kDefaultColors[i].name);
      codes_.emplace_back(kDefaultColors[i].code);
    }
  }
}

Palette::Palette(std::vector<std::string> names) : size_(names.size()), names_(std::move(names)) {
  if (size_ == 0) throw InvalidInput("palette must have at least one color");
  for (std::size_t i = 0; i < size_; ++i) {
    if (names_[i].empty()) throw InvalidInput("empty color name");
    for (std::size_t j = 0; j < i; ++j)
      if (lower(names_[i]) == lower(names_[j]))
        throw InvalidInput("duplicate color name '" + names_[i] + "'");
  }
  codes_ = names_;
}

std::string Palette::name(ColorId c) const {
  if (c.value >= size_) return "#" + std::to_string(c.value);
  return has_names() ? names_[c.value] : std::to_string(c.value);
}

std::string Palette::code(ColorId c) const {
  if (c.value >= size_) return "#" + std::to_string(c.value);
  return has_names() ? codes_[c.value] : std::to_string(c.value);
}

ColorId Palette::parse(std::string_view token) const {
  token = trim(token);
  for (std::size_t i = 0; i < codes_.size(); ++i)
    if (codes_[i] == token) return ColorId{static_cast<std::uint32_t>(i)};
  const auto low = lower(token);
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (lower(names_[i]) == low) return ColorId{static_cast<std::uint32_t>(i)};
  std::uint32_t index = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
  if (ec == std::errc{} && ptr == token.data() + token.size() && !token.empty()) {
    if (index >= size_)
      throw InvalidInput("color index " + std::to_string(index) + " outside palette of " +
                         std::to_string(size_));
    return ColorId{index};
  }
  throw InvalidInput("unknown color '" + std::string(token) + "'");
}

// ============================================================================
// PuzzleSpec
// ============================================================================

PuzzleSpec PuzzleSpec::repeated(std::size_t n, std::size_t colors) {
  if (n < 1) throw InvalidInput("repeated-colors puzzle needs at least one logician");
  if (colors < 2) throw InvalidInput("repeated-colors puzzle needs at least two colors");
  return PuzzleSpec(RepeatedColors{n, colors});
}

PuzzleSpec PuzzleSpec::distinct(std::size_t n) {
  if (n < 1) throw InvalidInput("distinct-colors puzzle needs at least one logician");
  return PuzzleSpec(DistinctColors{n});
}

PuzzleSpec PuzzleSpec::limited(std::size_t n, std::vector<std::size_t> counts,
                               Visibility visibility) {
  if (n < 1) throw InvalidInput("limited-supply puzzle needs at least one logician");
  if (counts.empty()) throw InvalidInput("limited-supply puzzle needs a hat supply");
  const auto total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total < n)
    throw InvalidInput("supply of " + std::to_string(total) + " hats is insufficient for " +
                       std::to_string(n) + " logicians");
  return PuzzleSpec(LimitedSupply{n, std::move(counts), visibility});
}

std::size_t PuzzleSpec::n() const {
  return std::visit([](const auto& v) { return v.n; }, variant_);
}

std::size_t PuzzleSpec::colors() const {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RepeatedColors>) return v.colors;
        else if constexpr (std::is_same_v<T, DistinctColors>) return v.n + 1;
        else return v.counts.size();
      },
      variant_);
}

Visibility PuzzleSpec::visibility() const {
  if (auto* l = std::get_if<LimitedSupply>(&variant_)) return l->visibility;
  return Visibility::LineForward;
}

std::string PuzzleSpec::describe() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RepeatedColors>) {
          os << "repeated n=" << v.n << " colors=" << v.colors;
        } else if constexpr (std::is_same_v<T, DistinctColors>) {
          os << "distinct n=" << v.n << " colors=" << v.n + 1;
        } else {
          os << "limited n=" << v.n << " supply=";
          for (std::size_t i = 0; i < v.counts.size(); ++i) os << (i ? ":" : "") << v.counts[i];
          os << (v.visibility == Visibility::Complete ? " visibility=complete"
                                                      : " visibility=line");
        }
      },
      variant_);
  return os.str();
}

// ============================================================================
// Assignments and transcripts
// ============================================================================

void validate(const PuzzleSpec& spec, const Assignment& a) {
  if (a.size() != spec.n())
    throw InvalidInput("assignment has " + std::to_string(a.size()) + " hats, expected " +
                       std::to_string(spec.n()));
  for (auto c : a.hats)
    if (c.value >= spec.colors())
      throw InvalidInput("hat color " + std::to_string(c.value) + " outside palette");
  if (spec.is_distinct()) {
    auto used = usage(a, spec.colors());
    if (std::any_of(used.begin(), used.end(), [](std::size_t u) { return u > 1; }))
      throw InvalidInput("distinct-colors assignment repeats a hat");
  }
  if (auto* l = std::get_if<LimitedSupply>(&spec.variant()))
    if (!fits_supply(*l, a)) throw InvalidInput("assignment exceeds the hat supply");
}

Transcript::Transcript(std::vector<TranscriptEntry> entries) : entries_(std::move(entries)) {}

void Transcript::push(Position speaker, Announcement a) {
  entries_.push_back({speaker, std::move(a)});
}

std::vector<ColorId> Transcript::guesses() const {
  std::vector<ColorId> out;
  for (const auto& e : entries_)
    if (auto* g = std::get_if<ColorGuess>(&e.announcement)) out.push_back(g->color);
  return out;
}

bool Transcript::announced(ColorId c) const {
  return std::any_of(entries_.begin(), entries_.end(), [c](const TranscriptEntry& e) {
    auto* g = std::get_if<ColorGuess>(&e.announcement);
    return g && g->color == c;
  });
}

// ============================================================================
// Enumeration
// ============================================================================

std::uint64_t count_assignments(const PuzzleSpec& spec, std::uint64_t saturate_at) {
  const std::size_t n = spec.n();
  return std::visit(
      [&](const auto& v) -> std::uint64_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RepeatedColors>) {
          std::uint64_t r = 1;
          for (std::size_t i = 0; i < n; ++i) r = sat_mul(r, v.colors, saturate_at);
          return r;
        } else if constexpr (std::is_same_v<T, DistinctColors>) {
          // P(n+1, n) = (n+1)!
          return sat_factorial(n + 1, saturate_at);
        } else {
          // ways[m]: sequences of length m over the colors seen so far that
          // respect their supply. Adding color c places k of its hats among m
          // slots in C(m, k) ways.
          std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(n + 1, 0));
          for (std::size_t m = 0; m <= n; ++m) {
            binom[m][0] = 1;
            for (std::size_t k = 1; k <= m; ++k)
              binom[m][k] = sat_add(binom[m - 1][k - 1], k <= m - 1 ? binom[m - 1][k] : 0, saturate_at);
          }
          std::vector<std::uint64_t> ways(n + 1, 0);
          ways[0] = 1;
          for (auto supply : v.counts) {
            std::vector<std::uint64_t> next(n + 1, 0);
            for (std::size_t m = 0; m <= n; ++m)
              for (std::size_t k = 0; k <= std::min(m, supply); ++k)
                next[m] = sat_add(next[m], sat_mul(ways[m - k], binom[m][k], saturate_at), saturate_at);
            ways = std::move(next);
          }
          return ways[n];
        }
      },
      spec.variant());
}

Assignment first_assignment(const PuzzleSpec& spec) {
  Assignment a{std::vector<ColorId>(spec.n(), ColorId{0})};
  if (spec.is_distinct()) {
    for (std::size_t i = 0; i < spec.n(); ++i) a.hats[i] = ColorId{static_cast<std::uint32_t>(i)};
  } else if (auto* l = std::get_if<LimitedSupply>(&spec.variant())) {
    if (!fits_supply(*l, a)) next_assignment(spec, a);
  }
  return a;
}

bool next_assignment(const PuzzleSpec& spec, Assignment& a) {
  if (spec.is_repeated()) return odometer(a, spec.colors());
  if (spec.is_distinct()) return next_distinct(a, spec.colors());
  const auto& l = std::get<LimitedSupply>(spec.variant());
  while (odometer(a, spec.colors()))
    if (fits_supply(l, a)) return true;
  return false;
}

Assignment assignment_at(const PuzzleSpec& spec, std::uint64_t index) {
  const auto total = count_assignments(spec);
  if (index >= total) throw InvalidInput("assignment index out of range");
  const std::size_t n = spec.n();
  Assignment a{std::vector<ColorId>(n, ColorId{0})};
  if (spec.is_repeated()) {
    const auto colors = spec.colors();
    for (std::size_t i = n; i-- > 0;) {
      a.hats[i] = ColorId{static_cast<std::uint32_t>(index % colors)};
      index /= colors;
    }
    return a;
  }
  if (spec.is_distinct()) {
    std::vector<std::uint32_t> avail(n + 1);
    std::iota(avail.begin(), avail.end(), 0u);
    for (std::size_t i = 0; i < n; ++i) {
      // Each choice at position i heads a block of (n-i)! completions.
      const auto block = sat_factorial(n - i, UINT64_MAX);
      const auto k = static_cast<std::size_t>(index / block);
      index %= block;
      a.hats[i] = ColorId{avail[k]};
      avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return a;
  }
  a = first_assignment(spec);
  for (std::uint64_t i = 0; i < index; ++i) next_assignment(spec, a);
  return a;
}

std::uint64_t require_within_cap(const PuzzleSpec& spec, std::uint64_t cap) {
  const auto count = count_assignments(spec, cap == UINT64_MAX ? cap : cap + 1);
  if (count > cap)
    throw CapExceeded(spec.describe() + " has more than " + std::to_string(cap) +
                      " assignments; use sampled mode");
  return count;
}

void for_each_assignment(const PuzzleSpec& spec,
                         const std::function<void(const Assignment&)>& fn, std::uint64_t cap) {
  require_within_cap(spec, cap);
  if (count_assignments(spec) == 0) return;
  auto a = first_assignment(spec);
  do {
    fn(a);
  } while (next_assignment(spec, a));
}

std::vector<Assignment> enumerate_assignments(const PuzzleSpec& spec, std::uint64_t cap) {
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(require_within_cap(spec, cap)));
  for_each_assignment(spec, [&out](const Assignment& a) { out.push_back(a); }, cap);
  return out;
}

// ============================================================================
// Visibility
// ============================================================================

VisibleHats visible_hats(const PuzzleSpec& spec, const Assignment& a, Position position) {
  if (position >= spec.n() || position >= a.size())
    throw InvalidInput("position " + std::to_string(position) + " out of range");
  VisibleHats seen;
  const std::size_t end = spec.visibility() == Visibility::LineForward ? position : a.size();
  for (std::size_t i = 0; i < end; ++i)
    if (i != position) seen.emplace(i, a.hats[i]);
  return seen;
}

// ============================================================================
// Text forms
// ============================================================================

std::string to_string(const Assignment& a, const Palette& palette) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += palette.code(a.hats[i]);
  }
  return out;
}

Assignment parse_assignment(std::string_view text, const Palette& palette) {
  Assignment a;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    a.hats.push_back(palette.parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return a;
}

}  // namespace hats
