#include "hats/json_io.hpp"

namespace hats {

namespace {

Json announcement_fields(Json entry, const Announcement& a, const Palette& palette) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ColorGuess>) {
          entry["announcement"] = "guess";
          entry["color"] = v.color.value;
          entry["colorName"] = palette.name(v.color);
        } else if constexpr (std::is_same_v<T, Know>) {
          entry["announcement"] = "know";
          entry["color"] = v.color.value;
          entry["colorName"] = palette.name(v.color);
        } else {
          entry["announcement"] = "dontknow";
        }
      },
      a);
  return entry;
}

std::vector<ColorId> colors_from(const Json& arr) {
  std::vector<ColorId> out;
  for (const auto& v : arr) out.push_back(ColorId{v.get<std::uint32_t>()});
  return out;
}

Json colors_to(const std::vector<ColorId>& colors) {
  Json arr = Json::array();
  for (auto c : colors) arr.push_back(c.value);
  return arr;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json puzzle_to_json(const PuzzleSpec& spec) {
  Json j;
  std::visit(
      [&j](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RepeatedColors>) {
          j["variant"] = "repeated";
          j["n"] = v.n;
          j["colors"] = v.colors;
        } else if constexpr (std::is_same_v<T, DistinctColors>) {
          j["variant"] = "distinct";
          j["n"] = v.n;
          j["colors"] = v.n + 1;
        } else {
          j["variant"] = "limited";
          j["n"] = v.n;
          j["supply"] = v.counts;
          j["visibility"] = v.visibility == Visibility::Complete ? "complete" : "line";
        }
      },
      spec.variant());
  return j;
}

PuzzleSpec puzzle_from_json(const Json& j) {
  try {
    const auto variant = j.at("variant").get<std::string>();
    const auto n = j.at("n").get<std::size_t>();
    if (variant == "repeated") return PuzzleSpec::repeated(n, j.at("colors").get<std::size_t>());
    if (variant == "distinct") return PuzzleSpec::distinct(n);
    if (variant == "limited") {
      const auto vis = j.value("visibility", std::string("complete"));
      if (vis != "complete" && vis != "line") throw InvalidInput("unknown visibility '" + vis + "'");
      return PuzzleSpec::limited(n, j.at("supply").get<std::vector<std::size_t>>(),
                                 vis == "complete" ? Visibility::Complete : Visibility::LineForward);
    }
    throw InvalidInput("unknown puzzle variant '" + variant + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed puzzle: ") + e.what());
  }
}

Json palette_to_json(const Palette& palette) {
  Json names = Json::array();
  for (std::uint32_t c = 0; c < palette.size(); ++c) names.push_back(palette.name(ColorId{c}));
  return names;
}

Palette palette_from_json(const Json& j) {
  auto names = j.get<std::vector<std::string>>();
  Palette standard(names.size());
  bool is_standard = true;
  for (std::uint32_t c = 0; c < names.size(); ++c)
    is_standard = is_standard && standard.name(ColorId{c}) == names[c];
  return is_standard ? standard : Palette(std::move(names));
}

Json report_to_json(const PuzzleSpec& spec, const std::string& strategy_id,
                    const VerificationReport& report, const Palette& palette) {
  Json j;
  j["puzzle"] = puzzle_to_json(spec);
  j["strategyId"] = strategy_id;
  if (report.sampled) {
    j["mode"] = "sampled";
    j["seed"] = report.sampled->seed;
    j["samples"] = report.sampled->samples;
  } else {
    j["mode"] = "exhaustive";
  }
  j["assignmentsChecked"] = report.assignments_checked;
  j["worstCaseMistakes"] = report.worst_case_mistakes;
  j["guaranteedCorrectPositions"] = report.guaranteed_correct_positions();
  j["counterexample"] =
      report.counterexample ? Json(to_string(*report.counterexample, palette)) : Json(nullptr);
  j["violationsTotal"] = report.violations_total;
  j["elapsedMs"] = report.elapsed_ms;
  return j;
}

Json transcript_to_json(const TranscriptDocument& doc) {
  Json j;
  j["kind"] = "transcript";
  j["puzzle"] = puzzle_to_json(doc.puzzle);
  j["palette"] = palette_to_json(doc.palette);
  j["question"] = doc.question;
  j["assignment"] = doc.assignment ? Json(to_string(*doc.assignment, doc.palette)) : Json(nullptr);
  Json entries = Json::array();
  for (std::size_t i = 0; i < doc.transcript.size(); ++i) {
    Json e;
    e["speaker"] = i + 1;
    e["position"] = doc.transcript[i].speaker;
    entries.push_back(announcement_fields(std::move(e), doc.transcript[i].announcement, doc.palette));
  }
  j["entries"] = std::move(entries);
  if (doc.mistakes) j["mistakes"] = *doc.mistakes;
  return j;
}

TranscriptDocument transcript_from_json(const Json& j) {
  try {
    if (j.value("kind", std::string()) != "transcript")
      throw InvalidInput("not a transcript document");
    auto puzzle = puzzle_from_json(j.at("puzzle"));
    auto palette = palette_from_json(j.at("palette"));
    TranscriptDocument doc{puzzle, palette, j.value("question", std::string()), {}, {}, {}};
    if (j.contains("assignment") && !j["assignment"].is_null())
      doc.assignment = parse_assignment(j["assignment"].get<std::string>(), palette);
    for (const auto& e : j.at("entries")) {
      const auto kind = e.at("announcement").get<std::string>();
      const auto pos = e.at("position").get<Position>();
      if (kind == "guess")
        doc.transcript.push(pos, ColorGuess{ColorId{e.at("color").get<std::uint32_t>()}});
      else if (kind == "know")
        doc.transcript.push(pos, Know{ColorId{e.at("color").get<std::uint32_t>()}});
      else if (kind == "dontknow")
        doc.transcript.push(pos, DontKnow{});
      else
        throw InvalidInput("unknown announcement '" + kind + "'");
    }
    if (j.contains("mistakes")) doc.mistakes = j["mistakes"].get<std::vector<Position>>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed transcript: ") + e.what());
  }
}

Json table_to_json(const DecisionTable& table) {
  Json rows = Json::array();
  for (const auto& [key, color] : table) {
    Json row;
    row["speaker"] = key.speaker;
    row["seen"] = colors_to(key.seen);
    row["heard"] = colors_to(key.heard);
    row["announce"] = color.value;
    rows.push_back(std::move(row));
  }
  return rows;
}

DecisionTable table_from_json(const Json& rows) {
  try {
    DecisionTable table;
    for (const auto& row : rows) {
      InformationSet key{row.at("speaker").get<Position>(), colors_from(row.at("seen")),
                         colors_from(row.at("heard"))};
      if (!table.emplace(std::move(key), ColorId{row.at("announce").get<std::uint32_t>()}).second)
        throw InvalidInput("duplicate information set in decision table");
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed decision table: ") + e.what());
  }
}

}  // namespace hats
