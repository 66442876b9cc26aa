#pragma once

// Enumeration of positive braid families and verification sweeps over them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/report.hpp"

namespace braidsig {

struct IntRange {
  int min = 0;
  int max = 0;
};

struct EnumerationSpec {
  IntRange strands{3, 3};
  IntRange syllable_count{4, 4};
  std::vector<int> exponents{3};
  bool cyclic_dedup = true;
  bool require_sufficiently_complicated = false;
  bool require_hyperbolic = false;
  std::optional<std::size_t> limit;  // stop after this many words
  std::size_t cap = 20'000'000;      // guard on the raw pattern x exponent count
  /// When set, draw this many random words instead of enumerating.
  std::optional<std::size_t> random_count;
  std::uint64_t seed = 1;
};

/// Calls `visit` for each word of the family in deterministic order.
/// Exhaustive mode yields every cyclic column pattern without equal
/// neighbours whose syllables survive far-commutation normalization,
/// times every exponent assignment, keeping only the lexicographically
/// least rotation when deduplicating.
void for_each_word(const EnumerationSpec& spec, const std::function<void(const SyllableWord&)>& visit);

std::vector<BraidWord> enumerate(const EnumerationSpec& spec);

struct SweepOptions {
  bool exhaustive_twist = false;
  unsigned threads = 0;  // 0: hardware concurrency
  Constants constants = Constants::extended();
};

struct SweepRow {
  InvariantReport report;
  std::vector<std::string> failures;     // assertion names, exit-code relevant
  std::vector<std::string> diagnostics;  // reported only
};

/// Exact ratio num/den.
struct Ratio {
  int num = 0;
  int den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::size_t qualifying = 0;
  std::optional<Ratio> min_twist_per_defect;
  std::optional<Ratio> max_twist_per_defect;
  std::map<std::string, int> failure_counts;
  std::map<std::string, int> diagnostic_counts;
  double wall_seconds = 0;

  bool ok() const { return failure_counts.empty(); }
};

/// Runs the full report for each word. Every row is checked for
/// -b1 <= sigma <= b1; rows satisfying both hypotheses are additionally
/// checked for the twist/defect inequality, the cut bound, the subword
/// certificate, the 3-braid count and the numeric volume consistency.
SweepReport verify_sweep(const EnumerationSpec& spec, const SweepOptions& options = {});

inline constexpr const char* kCsvHeader =
    "word,strands,letters,components,b1,sigma,delta_sigma,twist,dots,subword_count,thm3_ok,cut_ok,"
    "vol1_lo,vol1_hi,vol2_lo,vol2_hi";

void write_csv(const SweepReport& report, std::ostream& os);
void write_json(const SweepReport& report, std::ostream& os);
std::string sweep_summary(const SweepReport& report);

}  // namespace braidsig
