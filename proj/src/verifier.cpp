#include "hats/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

namespace hats {

namespace {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

std::int64_t millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

}  // namespace

RunResult run_transcript(const PuzzleSpec& spec, const Strategy& strategy,
                         const Assignment& assignment) {
  validate(spec, assignment);
  const std::size_t n = spec.n();
  {
    auto sorted = strategy.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Position> expected(n);
    std::iota(expected.begin(), expected.end(), Position{0});
    if (sorted != expected)
      throw InvalidInput("strategy order is not a permutation of the positions");
  }

  RunResult result;
  for (Position p : strategy.order) {
    const auto seen = visible_hats(spec, assignment, p);
    const ColorId said = strategy.decide(spec, p, seen, result.transcript);
    if (said.value >= spec.colors())
      throw StrategyFault(strategy.id + " announced color " + std::to_string(said.value) +
                          " outside a palette of " + std::to_string(spec.colors()));
    if (spec.no_repeat() && result.transcript.announced(said)) ++result.violations;
    if (said != assignment[p]) result.mistakes.push_back(p);
    result.transcript.push(p, ColorGuess{said});
  }
  std::sort(result.mistakes.begin(), result.mistakes.end());
  return result;
}

std::vector<Position> VerificationReport::guaranteed_correct_positions() const {
  std::vector<Position> out;
  for (std::size_t p = 0; p < always_correct.size(); ++p)
    if (always_correct[p]) out.push_back(p);
  return out;
}

void VerificationReport::add(const Assignment& a, const RunResult& run) {
  ++assignments_checked;
  violations_total += run.violations;
  for (auto p : run.mistakes) always_correct[p] = false;
  if (run.mistakes.size() > worst_case_mistakes) {
    worst_case_mistakes = run.mistakes.size();
    counterexample = a;
  }
}

bool same_outcome(const VerificationReport& a, const VerificationReport& b) {
  return a.assignments_checked == b.assignments_checked &&
         a.worst_case_mistakes == b.worst_case_mistakes && a.always_correct == b.always_correct &&
         a.counterexample == b.counterexample && a.violations_total == b.violations_total &&
         a.sampled == b.sampled;
}

VerificationReport empty_report(const PuzzleSpec& spec) {
  VerificationReport r;
  r.always_correct.assign(spec.n(), true);
  return r;
}

VerificationReport merge(const VerificationReport& earlier, const VerificationReport& later) {
  if (earlier.always_correct.size() != later.always_correct.size())
    throw InvalidInput("cannot merge reports of different puzzles");
  VerificationReport out = earlier;
  out.assignments_checked += later.assignments_checked;
  out.violations_total += later.violations_total;
  for (std::size_t p = 0; p < out.always_correct.size(); ++p)
    out.always_correct[p] = earlier.always_correct[p] && later.always_correct[p];
  if (later.worst_case_mistakes > earlier.worst_case_mistakes) {
    out.worst_case_mistakes = later.worst_case_mistakes;
    out.counterexample = later.counterexample;
  }
  out.elapsed_ms = std::max(earlier.elapsed_ms, later.elapsed_ms);
  return out;
}

VerificationReport verify_range(const PuzzleSpec& spec, const Strategy& strategy,
                                std::uint64_t first, std::uint64_t count) {
  auto report = empty_report(spec);
  if (count == 0) return report;
  auto a = assignment_at(spec, first);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i > 0 && !next_assignment(spec, a)) throw InvalidInput("assignment range out of bounds");
    report.add(a, run_transcript(spec, strategy, a));
  }
  return report;
}

VerificationReport verify_exhaustive(const PuzzleSpec& spec, const Strategy& strategy,
                                     const VerifyOptions& options) {
  if (spec.is_limited()) throw InvalidInput("guessing strategies need a repeated or distinct puzzle");
  const auto start = std::chrono::steady_clock::now();
  const auto total = require_within_cap(spec, options.cap);

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);
  if (total < 4096) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<VerificationReport> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = total / threads;
    const std::uint64_t extra = total % threads;
    std::uint64_t first = 0;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t count = chunk + (t < extra ? 1 : 0);
      workers.emplace_back([&, t, first, count] {
        try {
          parts[t] = verify_range(spec, strategy, first, count);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
      first += count;
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  auto report = empty_report(spec);
  for (const auto& part : parts) report = merge(report, part);
  report.elapsed_ms = millis_since(start);
  return report;
}

Assignment sample_assignment(const PuzzleSpec& spec, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
  const std::size_t n = spec.n();
  const std::size_t colors = spec.colors();
  Assignment a{std::vector<ColorId>(n)};
  if (spec.is_distinct()) {
    std::vector<std::uint32_t> pool(colors);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = i + rng.below(colors - i);
      std::swap(pool[i], pool[j]);
      a.hats[i] = ColorId{pool[i]};
    }
    return a;
  }
  for (;;) {
    for (auto& h : a.hats) h = ColorId{static_cast<std::uint32_t>(rng.below(colors))};
    if (spec.is_repeated()) return a;
    try {
      validate(spec, a);
      return a;
    } catch (const InvalidInput&) {
    }
  }
}

VerificationReport verify_sampled(const PuzzleSpec& spec, const Strategy& strategy,
                                  std::uint64_t samples, std::uint64_t seed) {
  if (spec.is_limited()) throw InvalidInput("guessing strategies need a repeated or distinct puzzle");
  if (samples < 1) throw InvalidInput("sampled verification needs at least one sample");
  const auto start = std::chrono::steady_clock::now();
  auto report = empty_report(spec);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = sample_assignment(spec, seed, i);
    report.add(a, run_transcript(spec, strategy, a));
  }
  report.sampled = SampledMode{seed, samples};
  report.elapsed_ms = millis_since(start);
  return report;
}

}  // namespace hats
