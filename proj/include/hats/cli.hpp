// cli.hpp -- command-line front end for the hat puzzle engine

#pragma once

#include "hats/core.hpp"
#include "hats/epistemic.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hats::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

inline constexpr const char* kKnowQuestion = "Do you know the color of your own hat?";
inline constexpr const char* kGuessQuestion = "What color is your hat?";

/// Renders a transcript as a bar joke: an opening line with the waitress's
/// question, then one answer per announcement in speaking order.
std::string render_joke(const Transcript& transcript, const Palette& palette,
                        const std::string& question);

/// Runs the CLI. `args` excludes the program name. Exit codes: 0 result
/// produced / guarantee holds, 1 guarantee violated / nothing found /
/// inconsistent input history, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "R:3,B:2" -> per-color counts under the default palette.
std::vector<std::size_t> parse_supply(const std::string& text);

/// "idk,idk,know"
std::vector<Status> parse_statuses(const std::string& text);

}  // namespace hats::cli
