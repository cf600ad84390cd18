// json_io.hpp -- JSON forms of reports, transcripts and decision tables
//
// Field order is fixed and no floating-point values are emitted, so a parsed
// document re-serializes byte-for-byte.

#pragma once

#include "hats/core.hpp"
#include "hats/synth.hpp"
#include "hats/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hats {

using Json = nlohmann::ordered_json;

Json puzzle_to_json(const PuzzleSpec& spec);
PuzzleSpec puzzle_from_json(const Json& j);

Json palette_to_json(const Palette& palette);
Palette palette_from_json(const Json& j);

Json report_to_json(const PuzzleSpec& spec, const std::string& strategy_id,
                    const VerificationReport& report, const Palette& palette);

/// A transcript document: puzzle, palette, question, the assignment it was
/// played on (when known) and one entry per announcement, speakers numbered
/// from 1 in speaking order.
struct TranscriptDocument {
  PuzzleSpec puzzle;
  Palette palette;
  std::string question;
  std::optional<Assignment> assignment;
  Transcript transcript;
  std::optional<std::vector<Position>> mistakes;
};

Json transcript_to_json(const TranscriptDocument& doc);
TranscriptDocument transcript_from_json(const Json& j);

/// Rows of {speaker, seen, heard, announce}; speaker is the position.
Json table_to_json(const DecisionTable& table);
DecisionTable table_from_json(const Json& rows);

/// Canonical text form used for byte-identity checks.
std::string dump(const Json& j);

}  // namespace hats
