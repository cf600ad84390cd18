// core.hpp -- puzzle variants, assignments, transcripts and enumeration

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hats {

/// Index of a logician in the line. 0 is the front (sees nobody), n-1 is
/// the back (sees everyone ahead).
using Position = std::size_t;

/// A hat color, identified by its index in the puzzle's palette.
struct ColorId {
  std::uint32_t value = 0;

  constexpr ColorId() = default;
  constexpr explicit ColorId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(ColorId, ColorId) = default;
};

inline constexpr ColorId kRed{0};
inline constexpr ColorId kBlue{1};

// ============================================================================
// Errors
// ============================================================================

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed puzzle parameters, assignments, flags, or a precondition failure.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A world set or announcement history contradicts itself.
class InconsistentHistory : public Error {
 public:
  using Error::Error;
};

/// A strategy produced an illegal value (a bug in the strategy, not a
/// puzzle outcome).
class StrategyFault : public Error {
 public:
  using Error::Error;
};

/// Synthesis instance too large for exhaustive search.
class SearchLimitExceeded : public Error {
 public:
  using Error::Error;
};

// ============================================================================
// Palette
// ============================================================================

/// Display names for colors. Two-color puzzles use red=0, blue=1.
class Palette {
 public:
  /// Default palette: Red, Blue, Green, Yellow, Purple, Orange, White, Black
  /// with one-letter codes; larger palettes fall back to bare indices.
  explicit Palette(std::size_t size);

  /// Custom names; each name is also its own code.
  explicit Palette(std::vector<std::string> names);

  std::size_t size() const { return size_; }
  bool has_names() const { return !names_.empty(); }

  /// Human-readable name ("Red"), or the index when unnamed.
  std::string name(ColorId c) const;

  /// Token used in the canonical assignment form ("R"), or the index.
  std::string code(ColorId c) const;

  /// Accepts a code, a name (case-insensitive), or a decimal index.
  ColorId parse(std::string_view token) const;

 private:
  std::size_t size_;
  std::vector<std::string> names_;
  std::vector<std::string> codes_;
};

// ============================================================================
// Puzzle variants
// ============================================================================

enum class Visibility { LineForward, Complete };

/// Unlimited supply of `colors` colors; no announcement restriction.
struct RepeatedColors {
  std::size_t n = 0;
  std::size_t colors = 0;
};

/// n+1 distinct hats for n logicians; announced colors may not be repeated.
struct DistinctColors {
  std::size_t n = 0;
};

/// A finite multiset of hats; logicians answer "I know" / "I don't know".
struct LimitedSupply {
  std::size_t n = 0;
  std::vector<std::size_t> counts;
  Visibility visibility = Visibility::Complete;
};

class PuzzleSpec {
 public:
  using Variant = std::variant<RepeatedColors, DistinctColors, LimitedSupply>;

  static PuzzleSpec repeated(std::size_t n, std::size_t colors);
  static PuzzleSpec distinct(std::size_t n);
  static PuzzleSpec limited(std::size_t n, std::vector<std::size_t> counts,
                            Visibility visibility = Visibility::Complete);

  const Variant& variant() const { return variant_; }

  bool is_repeated() const { return std::holds_alternative<RepeatedColors>(variant_); }
  bool is_distinct() const { return std::holds_alternative<DistinctColors>(variant_); }
  bool is_limited() const { return std::holds_alternative<LimitedSupply>(variant_); }

  std::size_t n() const;
  /// Palette size N.
  std::size_t colors() const;
  Visibility visibility() const;
  /// True when a color, once announced, may not be announced again.
  bool no_repeat() const { return is_distinct(); }

  /// Short text such as "repeated n=5 colors=2".
  std::string describe() const;

 private:
  explicit PuzzleSpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

// ============================================================================
// Assignments and transcripts
// ============================================================================

/// Hats front-to-back: hats[0] is the front of the line.
struct Assignment {
  std::vector<ColorId> hats;

  std::size_t size() const { return hats.size(); }
  ColorId operator[](Position p) const { return hats[p]; }

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// Throws InvalidInput if `a` is not a legal placement for `spec`.
void validate(const PuzzleSpec& spec, const Assignment& a);

struct ColorGuess {
  ColorId color;
  friend bool operator==(const ColorGuess&, const ColorGuess&) = default;
};
struct Know {
  ColorId color;
  friend bool operator==(const Know&, const Know&) = default;
};
struct DontKnow {
  friend bool operator==(const DontKnow&, const DontKnow&) = default;
};

using Announcement = std::variant<ColorGuess, Know, DontKnow>;

struct TranscriptEntry {
  Position speaker = 0;
  Announcement announcement;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

/// Ordered public record of announcements, in speaking order.
class Transcript {
 public:
  Transcript() = default;
  explicit Transcript(std::vector<TranscriptEntry> entries);

  void push(Position speaker, Announcement a);

  const std::vector<TranscriptEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const TranscriptEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// Colors spoken as ColorGuess, in order.
  std::vector<ColorId> guesses() const;
  bool announced(ColorId c) const;

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<TranscriptEntry> entries_;
};

// ============================================================================
// Enumeration
// ============================================================================

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Number of legal assignments, saturated at `saturate_at`.
std::uint64_t count_assignments(const PuzzleSpec& spec,
                                std::uint64_t saturate_at = UINT64_MAX);

/// Lexicographically smallest legal assignment (position 0 most significant).
Assignment first_assignment(const PuzzleSpec& spec);

/// Advances `a` to its lexicographic successor; false when `a` was the last.
bool next_assignment(const PuzzleSpec& spec, Assignment& a);

/// The assignment at `index` in lexicographic order.
Assignment assignment_at(const PuzzleSpec& spec, std::uint64_t index);

/// Every legal assignment exactly once, in lexicographic order. Throws
/// CapExceeded when there are more than `cap`.
std::vector<Assignment> enumerate_assignments(
    const PuzzleSpec& spec, std::uint64_t cap = kDefaultEnumerationCap);

void for_each_assignment(const PuzzleSpec& spec,
                         const std::function<void(const Assignment&)>& fn,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// Throws CapExceeded if the spec's assignment count is above `cap`.
std::uint64_t require_within_cap(const PuzzleSpec& spec, std::uint64_t cap);

// ============================================================================
// Visibility
// ============================================================================

using VisibleHats = std::map<Position, ColorId>;

VisibleHats visible_hats(const PuzzleSpec& spec, const Assignment& a,
                         Position position);

// ============================================================================
// Text forms
// ============================================================================

/// Canonical form: comma-separated codes, front-to-back ("R,R,B,B,R").
std::string to_string(const Assignment& a, const Palette& palette);

Assignment parse_assignment(std::string_view text, const Palette& palette);

}  // namespace hats
