#include "hats/cli.hpp"

#include <array>
#include <sstream>

namespace hats::cli {

namespace {

std::string count_word(std::size_t n) {
  static constexpr std::array<const char*, 13> words = {
      "Zero", "One", "Two",   "Three", "Four",   "Five",  "Six",
      "Seven", "Eight", "Nine", "Ten",  "Eleven", "Twelve"};
  return n < words.size() ? words[n] : std::to_string(n);
}

std::string ordinal(std::size_t k) {
  static constexpr std::array<const char*, 13> words = {
      "zeroth", "first",   "second", "third",  "fourth",   "fifth",  "sixth",
      "seventh", "eighth", "ninth",  "tenth", "eleventh", "twelfth"};
  if (k < words.size()) return words[k];
  const char* suffix = "th";
  if (k % 100 < 11 || k % 100 > 13) {
    if (k % 10 == 1) suffix = "st";
    else if (k % 10 == 2) suffix = "nd";
    else if (k % 10 == 3) suffix = "rd";
  }
  return std::to_string(k) + suffix;
}

}  // namespace

std::string render_joke(const Transcript& transcript, const Palette& palette,
                        const std::string& question) {
  const std::size_t n = transcript.size();
  std::ostringstream os;
  os << count_word(n) << (n == 1 ? " logician walks" : " logicians walk")
     << " into a bar. The waitress asks, \"" << question << "\"\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "The " << ordinal(i + 1) << " logician answers, \"";
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, DontKnow>) os << "I do not know.";
          else if constexpr (std::is_same_v<T, Know>) os << "Yes.";
          else os << palette.name(a.color) << ".";
        },
        transcript[i].announcement);
    os << "\"\n";
  }
  return os.str();
}

}  // namespace hats::cli
