#include "hats/cli.hpp"

#include "hats/epistemic.hpp"
#include "hats/json_io.hpp"
#include "hats/strategies.hpp"
#include "hats/synth.hpp"
#include "hats/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace hats::cli {

namespace {

struct GlobalFlags {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 42;
  std::uint64_t samples = 0;
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct PuzzleFlags {
  std::string puzzle;
  std::size_t n = 0;
  std::size_t colors = 0;
  std::string names;
};

struct VerifyFlags {
  PuzzleFlags puzzle;
  std::string strategy;
  std::string table_path;
  std::string assignment;
};

struct SynthFlags {
  PuzzleFlags puzzle;
  std::optional<std::size_t> max_mistakes;
};

struct EpistemicFlags {
  std::string supply;
  std::size_t logicians = 0;
  std::string visibility = "complete";
  std::string order;
  std::string assignment;
  std::string transcript;
  std::size_t query = 0;
};

struct JokeFlags {
  std::string from;
  std::string transcript;
  std::string question;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

PuzzleSpec make_puzzle(const PuzzleFlags& f) {
  if (f.puzzle.empty()) throw InvalidInput("--puzzle is required (repeated or distinct)");
  if (f.n == 0) throw InvalidInput("--n must be at least 1");
  if (f.puzzle == "repeated") {
    if (f.colors == 0) throw InvalidInput("--colors is required for the repeated puzzle");
    return PuzzleSpec::repeated(f.n, f.colors);
  }
  if (f.puzzle == "distinct") {
    if (f.colors != 0 && f.colors != f.n + 1)
      throw InvalidInput("the distinct puzzle always has n+1 colors");
    return PuzzleSpec::distinct(f.n);
  }
  throw InvalidInput("unknown puzzle '" + f.puzzle + "' (expected repeated or distinct)");
}

Palette make_palette(std::size_t size, const std::string& names) {
  if (names.empty()) return Palette(size);
  auto list = split(names, ',');
  for (auto& s : list) s = trimmed(s);
  if (list.size() != size)
    throw InvalidInput("--names lists " + std::to_string(list.size()) + " colors, puzzle has " +
                       std::to_string(size));
  return Palette(std::move(list));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string positions_text(const std::vector<Position>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
  return ps.empty() ? "none" : s;
}

std::string announcement_text(const Announcement& a, const Palette& palette) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ColorGuess>) return palette.name(v.color);
        else if constexpr (std::is_same_v<T, Know>) return "know(" + palette.name(v.color) + ")";
        else return "idk";
      },
      a);
}

void print_transcript(std::ostream& os, const Transcript& t, const Palette& palette,
                      const std::optional<Assignment>& truth) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto p = t[i].speaker;
    os << "speaker " << i + 1 << " (position " << p << "): "
       << announcement_text(t[i].announcement, palette);
    if (truth) {
      if (auto* g = std::get_if<ColorGuess>(&t[i].announcement))
        os << (g->color == (*truth)[p] ? "  [correct]" : "  [wrong, wears " + palette.name((*truth)[p]) + "]");
    }
    os << "\n";
  }
}

// ============================================================================
// verify
// ============================================================================

int cmd_verify(const GlobalFlags& g, const VerifyFlags& f, std::ostream& out) {
  std::optional<PuzzleSpec> spec;
  std::optional<Strategy> strategy;
  if (!f.table_path.empty()) {
    if (!f.strategy.empty()) throw InvalidInput("give either --strategy or --table, not both");
    const auto doc = read_json_file(f.table_path);
    if (!doc.contains("witness") || doc["witness"].is_null())
      throw InvalidInput("'" + f.table_path + "' holds no witness table");
    spec = puzzle_from_json(doc.at("puzzle"));
    if (!f.puzzle.puzzle.empty() && make_puzzle(f.puzzle).describe() != spec->describe())
      throw InvalidInput("--puzzle does not match the table's puzzle");
    std::optional<std::size_t> bound;
    if (doc.contains("bound")) bound = doc["bound"].get<std::size_t>();
    strategy = table_strategy(table_from_json(doc["witness"]), spec->n(), bound);
  } else {
    if (f.strategy.empty()) throw InvalidInput("--strategy or --table is required");
    spec = make_puzzle(f.puzzle);
    strategy = strategy_by_id(f.strategy, *spec);
  }
  const auto palette = make_palette(spec->colors(), f.puzzle.names);

  auto guarantee_holds = [&](std::size_t mistakes, std::uint64_t violations) {
    return violations == 0 && (!strategy->claimed_bound || mistakes <= *strategy->claimed_bound);
  };

  if (!f.assignment.empty()) {
    const auto a = parse_assignment(f.assignment, palette);
    validate(*spec, a);
    const auto run = run_transcript(*spec, *strategy, a);
    if (g.format == "json") {
      TranscriptDocument doc{*spec, palette, kGuessQuestion, a, run.transcript, run.mistakes};
      auto j = transcript_to_json(doc);
      j["strategyId"] = strategy->id;
      j["violations"] = run.violations;
      out << dump(j);
    } else {
      out << "puzzle: " << spec->describe() << "\n"
          << "strategy: " << strategy->id << "\n"
          << "assignment: " << to_string(a, palette) << "\n";
      print_transcript(out, run.transcript, palette, a);
      out << "mistakes: " << positions_text(run.mistakes) << "\n"
          << "violations: " << run.violations << "\n";
    }
    return guarantee_holds(run.mistakes.size(), run.violations) ? kExitOk : kExitFailed;
  }

  const auto report = g.samples > 0 ? verify_sampled(*spec, *strategy, g.samples, g.seed)
                                     : verify_exhaustive(*spec, *strategy, {g.cap, 0});
  if (g.format == "json") {
    out << dump(report_to_json(*spec, strategy->id, report, palette));
  } else {
    out << "puzzle: " << spec->describe() << "\n"
        << "strategy: " << strategy->id << "\n"
        << "mode: "
        << (report.sampled ? "sampled (seed " + std::to_string(report.sampled->seed) + ", " +
                                 std::to_string(report.sampled->samples) + " samples)"
                           : std::string("exhaustive"))
        << "\n"
        << "assignments checked: " << report.assignments_checked << "\n"
        << "worst-case mistakes: " << report.worst_case_mistakes << "\n"
        << "guaranteed correct positions: "
        << positions_text(report.guaranteed_correct_positions()) << "\n"
        << "counterexample: "
        << (report.counterexample ? to_string(*report.counterexample, palette) : "none") << "\n"
        << "violations: " << report.violations_total << "\n"
        << "elapsed: " << report.elapsed_ms << " ms\n";
  }
  return guarantee_holds(report.worst_case_mistakes, report.violations_total) ? kExitOk
                                                                              : kExitFailed;
}

// ============================================================================
// synth
// ============================================================================

int cmd_synth(const GlobalFlags& g, const SynthFlags& f, std::ostream& out) {
  const auto spec = make_puzzle(f.puzzle);
  const auto palette = make_palette(spec.colors(), f.puzzle.names);

  std::optional<DecisionTable> witness;
  std::optional<std::size_t> minimum;
  std::uint64_t nodes = 0;
  if (f.max_mistakes) {
    auto outcome = exists_strategy(spec, *f.max_mistakes);
    witness = std::move(outcome.witness);
    nodes = outcome.nodes_explored;
  } else {
    auto result = min_guaranteed_mistakes(spec);
    minimum = result.min_guaranteed_mistakes;
    witness = std::move(result.witness);
    nodes = result.nodes_explored;
  }

  if (g.format == "json") {
    Json j;
    j["puzzle"] = puzzle_to_json(spec);
    j["maxMistakes"] = f.max_mistakes ? Json(*f.max_mistakes) : Json(nullptr);
    j["found"] = witness.has_value();
    j["minGuaranteedMistakes"] = minimum ? Json(*minimum) : Json(nullptr);
    j["bound"] = witness ? Json(minimum ? *minimum : *f.max_mistakes) : Json(nullptr);
    j["nodesExplored"] = nodes;
    j["witness"] = witness ? table_to_json(*witness) : Json(nullptr);
    out << dump(j);
  } else {
    out << "puzzle: " << spec.describe() << "\n";
    if (minimum) out << "min guaranteed mistakes: " << *minimum << "\n";
    else
      out << "strategy with at most " << *f.max_mistakes
          << " mistakes: " << (witness ? "found" : "none") << "\n";
    out << "nodes explored: " << nodes << "\n";
    if (witness) {
      out << "witness (" << witness->size() << " information sets):\n";
      for (const auto& [key, color] : *witness) {
        out << "  position " << key.speaker << " sees [";
        for (std::size_t i = 0; i < key.seen.size(); ++i)
          out << (i ? "," : "") << palette.code(key.seen[i]);
        out << "] heard [";
        for (std::size_t i = 0; i < key.heard.size(); ++i)
          out << (i ? "," : "") << palette.code(key.heard[i]);
        out << "] -> " << palette.code(color) << "\n";
      }
    }
  }
  return witness ? kExitOk : kExitFailed;
}

// ============================================================================
// epistemic
// ============================================================================

int cmd_epistemic(const GlobalFlags& g, const EpistemicFlags& f, std::ostream& out) {
  if (f.supply.empty()) throw InvalidInput("--supply is required");
  if (f.logicians == 0) throw InvalidInput("--logicians must be at least 1");
  if (f.visibility != "complete" && f.visibility != "line")
    throw InvalidInput("--visibility must be complete or line");
  const auto spec = PuzzleSpec::limited(
      f.logicians, parse_supply(f.supply),
      f.visibility == "complete" ? Visibility::Complete : Visibility::LineForward);
  const Palette palette(spec.colors());

  std::vector<Position> order = seating_order(spec.n());
  if (!f.order.empty()) {
    order.clear();
    for (const auto& tok : split(f.order, ',')) {
      const auto seat = std::stoul(trimmed(tok));
      if (seat < 1 || seat > spec.n()) throw InvalidInput("--order seat out of range");
      order.push_back(seat - 1);
    }
  }

  if (!f.assignment.empty() && !f.transcript.empty())
    throw InvalidInput("give either --assignment or --transcript, not both");

  if (!f.assignment.empty()) {
    const auto actual = parse_assignment(f.assignment, palette);
    const auto transcript = simulate(spec, actual, order);
    if (g.format == "json") {
      out << dump(transcript_to_json({spec, palette, kKnowQuestion, actual, transcript, {}}));
    } else {
      print_transcript(out, transcript, palette, std::nullopt);
      out << "transcript: ";
      for (std::size_t i = 0; i < transcript.size(); ++i)
        out << (i ? ", " : "") << announcement_text(transcript[i].announcement, palette);
      out << "\n";
    }
    return kExitOk;
  }

  if (f.transcript.empty() && f.query == 0)
    throw InvalidInput("give --assignment, or --transcript with --query");
  if (f.query < 1 || f.query > order.size())
    throw InvalidInput("--query must name a logician from 1 to " + std::to_string(order.size()));
  const auto statuses = f.transcript.empty() ? std::vector<Status>{} : parse_statuses(f.transcript);
  const Position query = order[f.query - 1];
  const auto colors = deduce(spec, statuses, order, query);
  if (g.format == "json") {
    Json j;
    j["puzzle"] = puzzle_to_json(spec);
    j["query"] = f.query;
    j["position"] = query;
    Json names = Json::array();
    for (auto c : colors) names.push_back(palette.name(c));
    j["colors"] = std::move(names);
    out << dump(j);
  } else {
    for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? ", " : "") << palette.name(colors[i]);
    out << "\n";
  }
  return kExitOk;
}

// ============================================================================
// joke
// ============================================================================

int cmd_joke(const GlobalFlags&, const JokeFlags& f, std::ostream& out) {
  if (f.from.empty() == f.transcript.empty())
    throw InvalidInput("give exactly one of --from or --transcript");
  if (!f.from.empty()) {
    const auto doc = transcript_from_json(read_json_file(f.from));
    if (doc.transcript.empty()) throw InvalidInput("transcript is empty");
    const auto question = !f.question.empty() ? f.question
                          : !doc.question.empty() ? doc.question
                                                  : std::string(kGuessQuestion);
    out << render_joke(doc.transcript, doc.palette, question);
    return kExitOk;
  }
  Transcript t;
  const auto statuses = parse_statuses(f.transcript);
  for (std::size_t i = 0; i < statuses.size(); ++i) {
    // The spoken joke never reveals the color behind "Yes."
    if (statuses[i] == Status::Know) t.push(i, Know{ColorId{0}});
    else t.push(i, DontKnow{});
  }
  out << render_joke(t, Palette(2), f.question.empty() ? kKnowQuestion : f.question);
  return kExitOk;
}

void add_puzzle_flags(CLI::App* cmd, PuzzleFlags& f) {
  cmd->add_option("--puzzle", f.puzzle, "Puzzle variant: repeated or distinct");
  cmd->add_option("--n", f.n, "Number of logicians");
  cmd->add_option("--colors", f.colors, "Number of colors (repeated puzzle)");
  cmd->add_option("--names", f.names, "Comma-separated color names overriding the default palette");
}

}  // namespace

std::vector<std::size_t> parse_supply(const std::string& text) {
  const Palette palette(8);
  std::vector<std::size_t> counts;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidInput("supply entry '" + item + "' needs COLOR:COUNT");
    const auto color = palette.parse(item.substr(0, colon));
    std::size_t count = 0;
    try {
      std::size_t used = 0;
      count = std::stoul(trimmed(item.substr(colon + 1)), &used);
      if (used != trimmed(item.substr(colon + 1)).size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad hat count in '" + item + "'");
    }
    if (counts.size() <= color.value) counts.resize(color.value + 1, 0);
    counts[color.value] += count;
  }
  if (counts.empty()) throw InvalidInput("empty supply");
  return counts;
}

std::vector<Status> parse_statuses(const std::string& text) {
  std::vector<Status> out;
  for (const auto& raw : split(text, ',')) {
    const auto tok = trimmed(raw);
    if (tok == "idk" || tok == "dontknow") out.push_back(Status::DontKnow);
    else if (tok == "know" || tok == "yes") out.push_back(Status::Know);
    else throw InvalidInput("unknown answer '" + tok + "' (expected idk or know)");
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hat puzzle strategy engine"};
  app.name("hats");
  app.require_subcommand(1, 1);

  GlobalFlags g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out_path, "Write output to FILE instead of standard output");
  app.add_option("--seed", g.seed, "Seed for sampled verification");
  app.add_option("--samples", g.samples, "Sample count; 0 means exhaustive");
  app.add_option("--cap", g.cap, "Largest assignment count enumerated exhaustively");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Check a strategy's worst-case guarantee");
  add_puzzle_flags(verify, vf.puzzle);
  verify->add_option("--strategy", vf.strategy,
                     "copy_front, same_different, parity, modular_sum or distinct3");
  verify->add_option("--table", vf.table_path, "Replay a witness table emitted by synth --format json");
  verify->add_option("--assignment", vf.assignment, "Play one assignment (front-to-back, e.g. R,R,B)");

  SynthFlags sf;
  auto* synth = app.add_subcommand("synth", "Search for an optimal decision table");
  add_puzzle_flags(synth, sf.puzzle);
  synth->add_option("--max-mistakes", sf.max_mistakes, "Only ask whether this many mistakes suffice");

  EpistemicFlags ef;
  auto* epistemic = app.add_subcommand("epistemic", "Simulate or decode I-know / I-don't-know answers");
  epistemic->add_option("--supply", ef.supply, "Available hats, e.g. R:3,B:2");
  epistemic->add_option("--logicians", ef.logicians, "Number of logicians");
  epistemic->add_option("--visibility", ef.visibility, "complete (default) or line");
  epistemic->add_option("--order", ef.order, "Answering order as 1-based seats, default 1,2,...");
  epistemic->add_option("--assignment", ef.assignment, "Actual hats, e.g. R,R,R");
  epistemic->add_option("--transcript", ef.transcript, "Observed answers, e.g. idk,idk,know");
  epistemic->add_option("--query", ef.query, "Which answering logician (1-based) to deduce");

  JokeFlags jf;
  auto* joke = app.add_subcommand("joke", "Render a transcript as a bar joke");
  joke->add_option("--from", jf.from, "Transcript JSON emitted by verify or epistemic");
  joke->add_option("--transcript", jf.transcript, "Answers, e.g. idk,idk,know");
  joke->add_option("--question", jf.question, "The waitress's question");

  for (auto* sub : {verify, synth, epistemic, joke}) sub->fallthrough();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("hats");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInvalid;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (verify->parsed()) code = cmd_verify(g, vf, buffer);
    else if (synth->parsed()) code = cmd_synth(g, sf, buffer);
    else if (epistemic->parsed()) code = cmd_epistemic(g, ef, buffer);
    else code = cmd_joke(g, jf, buffer);
  } catch (const InconsistentHistory& e) {
    err << "inconsistent: " << e.what() << "\n";
    return kExitFailed;
  } catch (const StrategyFault& e) {
    err << "strategy fault: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  if (g.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << g.out_path << "'\n";
      return kExitInvalid;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace hats::cli
