#include "braidsig/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "braidsig/error.hpp"
#include "json.hpp"

namespace braidsig {

namespace {

void validate(const EnumerationSpec& spec) {
  if (spec.strands.min > spec.strands.max || spec.syllable_count.min > spec.syllable_count.max) {
    throw Error(ErrorCode::Argument, "empty strands or syllable range");
  }
  if (spec.strands.min < 2) throw Error(ErrorCode::Argument, "strands must be at least 2");
  if (spec.syllable_count.min < 1) throw Error(ErrorCode::Argument, "syllable count must be at least 1");
  if (spec.exponents.empty()) throw Error(ErrorCode::Argument, "empty exponent set");
  for (int e : spec.exponents) {
    if (e < 1) throw Error(ErrorCode::Argument, "exponents must be >= 1");
  }
}

bool is_least_rotation(const std::vector<Syllable>& syl) {
  const std::size_t len = syl.size();
  for (std::size_t r = 1; r < len; ++r) {
    for (std::size_t k = 0; k < len; ++k) {
      const Syllable& a = syl[(r + k) % len];
      const Syllable& b = syl[k];
      if (a < b) return false;
      if (b < a) break;
    }
  }
  return true;
}

bool passes_filters(const EnumerationSpec& spec, const SyllableWord& sw) {
  if (spec.require_sufficiently_complicated && !is_sufficiently_complicated(sw)) return false;
  if (spec.require_hyperbolic && !hyperbolicity_criterion(sw)) return false;
  return true;
}

// Visits every cyclic column pattern of length t over columns 1..cols with
// no two cyclic neighbours equal.
void for_each_pattern(int cols, int t, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> pattern(t, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (stop) return;
    if (k == t) {
      if (t > 1 && pattern[t - 1] == pattern[0]) return;
      if (!visit(pattern)) stop = true;
      return;
    }
    for (int col = 1; col <= cols && !stop; ++col) {
      if (k > 0 && pattern[k - 1] == col) continue;
      pattern[k] = col;
      rec(k + 1);
    }
  };
  rec(0);
}

void enumerate_exhaustive(const EnumerationSpec& spec, const std::function<void(const SyllableWord&)>& visit) {
  std::vector<int> exps = spec.exponents;
  std::ranges::sort(exps);
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

  std::size_t emitted = 0;
  for (int n = spec.strands.min; n <= spec.strands.max; ++n) {
    for (int t = spec.syllable_count.min; t <= spec.syllable_count.max; ++t) {
      const double raw = std::pow(double(n - 1), t) * std::pow(double(exps.size()), t);
      if (raw > static_cast<double>(spec.cap)) {
        throw Error(ErrorCode::Overflow, "family n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                             " exceeds the enumeration cap");
      }
      bool stop = false;
      for_each_pattern(n - 1, t, [&](const std::vector<int>& pattern) {
        SyllableWord sw{n, {}, true};
        for (int col : pattern) sw.syllables.push_back({col, 1});
        if (normalize_far_commutation(sw).size() != sw.size()) return true;

        std::vector<std::size_t> odo(t, 0);
        while (true) {
          for (int k = 0; k < t; ++k) sw.syllables[k].exponent = exps[odo[k]];
          if ((!spec.cyclic_dedup || is_least_rotation(sw.syllables)) && passes_filters(spec, sw)) {
            visit(sw);
            if (spec.limit && ++emitted >= *spec.limit) {
              stop = true;
              return false;
            }
          }
          int k = t - 1;
          while (k >= 0 && ++odo[k] == exps.size()) odo[k--] = 0;
          if (k < 0) break;
        }
        return true;
      });
      if (stop) return;
    }
  }
}

void enumerate_random(const EnumerationSpec& spec, const std::function<void(const SyllableWord&)>& visit) {
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::set<std::vector<Syllable>> seen;
  std::size_t emitted = 0;
  for (std::size_t draw = 0; draw < *spec.random_count; ++draw) {
    const int n = uniform(spec.strands.min, spec.strands.max);
    const int t = uniform(spec.syllable_count.min, spec.syllable_count.max);
    // One column admits no cyclic pattern beyond t = 1, two columns only even t.
    if ((n == 2 && t > 1) || (n == 3 && t % 2 == 1)) continue;
    SyllableWord sw{n, {}, true};
    do {
      sw.syllables.clear();
      for (int k = 0; k < t; ++k) {
        int col;
        do {
          col = uniform(1, n - 1);
        } while (k > 0 && col == sw.syllables.back().column);
        sw.syllables.push_back({col, spec.exponents[uniform(0, int(spec.exponents.size()) - 1)]});
      }
    } while (t > 1 && sw.syllables.front().column == sw.syllables.back().column);

    if (spec.cyclic_dedup) {
      std::vector<Syllable> least = sw.syllables;
      for (std::size_t r = 1; r < sw.syllables.size(); ++r) {
        std::vector<Syllable> rot(sw.syllables.begin() + r, sw.syllables.end());
        rot.insert(rot.end(), sw.syllables.begin(), sw.syllables.begin() + r);
        least = std::min(least, rot);
      }
      if (!seen.insert(least).second) continue;
    }
    if (!passes_filters(spec, sw)) continue;
    visit(sw);
    if (spec.limit && ++emitted >= *spec.limit) return;
  }
}

Ratio reduced(int num, int den) {
  const int g = std::gcd(num, den);
  return {num / g, den / g};
}

bool less(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }

std::string ratio_text(const std::optional<Ratio>& r) {
  if (!r) return "n/a";
  return std::to_string(r->num) + "/" + std::to_string(r->den);
}

SweepRow check_word(const SyllableWord& sw, const SweepOptions& options) {
  SweepRow row;
  const BraidWord w = sw.expand();
  ReportOptions ro{options.exhaustive_twist, options.constants};
  row.report = invariant_report(w, ro);
  const InvariantReport& r = row.report;
  auto fail = [&](bool ok, const char* name) {
    if (!ok) row.failures.emplace_back(name);
  };

  fail(-r.b1 <= r.sigma && r.sigma <= r.b1, "sigma_range");
  if (options.exhaustive_twist) fail(r.twist == twist_number(w, false), "twist_not_minimal");
  if (!r.qualifies()) return row;

  fail(r.thm3_ok, "twist_defect_inequality");
  fail(r.cut_ok, "cut_bound");
  fail(r.cut_twist_ok, "cut_twist_bound");
  fail(r.cut.boundary_defect == 0, "cut_boundary_defect");
  fail(r.certificate_lower_ok, "certificate_lower");
  fail(r.certificate_defect_ok, "certificate_defect");
  if (r.strands == 3) {
    fail(r.three_braid.twist_ok, "three_braid_twist");
    fail(r.three_braid.count_ok, "three_braid_count");
    if (r.three_braid.consecutive_count != r.three_braid.restricted_count) {
      row.diagnostics.emplace_back("three_braid_count_mismatch");
    }
  }
  const Constants& k = options.constants;
  const double ds = r.delta_sigma, t = r.twist;
  fail(k.v8 * ds / 3.0 <= 2.0 * k.v8 * t / 3.0, "volume_lower_consistency");
  fail(10.0 * k.v3 * (t - 1) < 105.0 * k.v3 * ds, "volume_upper_consistency");
  if (r.dots < r.twist) row.diagnostics.emplace_back("dots_below_twist");
  if (21 * r.deletion_subword_count < r.twist || 2 * r.deletion_subword_count > r.delta_sigma) {
    row.diagnostics.emplace_back("deletion_certificate");
  }
  return row;
}

}  // namespace

void for_each_word(const EnumerationSpec& spec, const std::function<void(const SyllableWord&)>& visit) {
  validate(spec);
  if (spec.random_count) {
    enumerate_random(spec, visit);
  } else {
    enumerate_exhaustive(spec, visit);
  }
}

std::vector<BraidWord> enumerate(const EnumerationSpec& spec) {
  std::vector<BraidWord> out;
  for_each_word(spec, [&](const SyllableWord& sw) { out.push_back(sw.expand()); });
  return out;
}

SweepReport verify_sweep(const EnumerationSpec& spec, const SweepOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<SyllableWord> words;
  for_each_word(spec, [&](const SyllableWord& sw) { words.push_back(sw); });

  SweepReport report;
  report.rows.resize(words.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, words.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < words.size();) {
      try {
        report.rows[i] = check_word(words[i], options);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);

  for (const SweepRow& row : report.rows) {
    for (const auto& f : row.failures) ++report.failure_counts[f];
    for (const auto& d : row.diagnostics) ++report.diagnostic_counts[d];
    const InvariantReport& r = row.report;
    if (!r.qualifies()) continue;
    ++report.qualifying;
    if (r.delta_sigma <= 0) continue;
    const Ratio q = reduced(r.twist, r.delta_sigma);
    if (!report.min_twist_per_defect || less(q, *report.min_twist_per_defect)) report.min_twist_per_defect = q;
    if (!report.max_twist_per_defect || less(*report.max_twist_per_defect, q)) report.max_twist_per_defect = q;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

void write_csv(const SweepReport& report, std::ostream& os) {
  os << kCsvHeader << "\n";
  auto interval = [](const std::optional<VolumeInterval>& v) {
    return v ? format4(v->lo) + "," + format4(v->hi) : std::string(",");
  };
  for (const SweepRow& row : report.rows) {
    const InvariantReport& r = row.report;
    os << r.word << ',' << r.strands << ',' << r.letters << ',' << r.components << ',' << r.b1 << ',' << r.sigma
       << ',' << r.delta_sigma << ',' << r.twist << ',' << r.dots << ',' << r.subword_count << ','
       << (r.thm3_ok ? "true" : "false") << ',' << (r.cut_ok ? "true" : "false") << ',' << interval(r.thm1) << ','
       << interval(r.thm2) << "\n";
  }
}

void write_json(const SweepReport& report, std::ostream& os) {
  using nlohmann::ordered_json;
  ordered_json rows = ordered_json::array();
  auto bound = [](const std::optional<VolumeInterval>& v, bool lo) -> ordered_json {
    if (!v) return nullptr;
    return round4(lo ? v->lo : v->hi);
  };
  for (const SweepRow& row : report.rows) {
    const InvariantReport& r = row.report;
    ordered_json j;
    j["word"] = r.word;
    j["strands"] = r.strands;
    j["letters"] = r.letters;
    j["components"] = r.components;
    j["b1"] = r.b1;
    j["sigma"] = r.sigma;
    j["delta_sigma"] = r.delta_sigma;
    j["twist"] = r.twist;
    j["dots"] = r.dots;
    j["subword_count"] = r.subword_count;
    j["thm3_ok"] = r.thm3_ok;
    j["cut_ok"] = r.cut_ok;
    j["vol1_lo"] = bound(r.thm1, true);
    j["vol1_hi"] = bound(r.thm1, false);
    j["vol2_lo"] = bound(r.thm2, true);
    j["vol2_hi"] = bound(r.thm2, false);
    rows.push_back(std::move(j));
  }
  os << rows.dump(2) << "\n";
}

std::string sweep_summary(const SweepReport& report) {
  constexpr std::size_t kListedFailures = 20;
  std::ostringstream os;
  os << "rows          " << report.rows.size() << "\n"
     << "qualifying    " << report.qualifying << "\n"
     << "min t/ds      " << ratio_text(report.min_twist_per_defect) << "\n"
     << "max t/ds      " << ratio_text(report.max_twist_per_defect) << "\n";
  os << "failures      " << (report.failure_counts.empty() ? "none" : "") << "\n";
  for (const auto& [name, count] : report.failure_counts) os << "  " << name << "  " << count << "\n";
  std::size_t listed = 0, offenders = 0;
  for (const SweepRow& row : report.rows) {
    if (row.failures.empty()) continue;
    if (++offenders > kListedFailures) continue;
    ++listed;
    os << "  failed: " << row.report.word << " (n=" << row.report.strands << ")";
    for (const auto& f : row.failures) os << " " << f;
    os << "\n";
  }
  if (offenders > listed) os << "  ... " << offenders - listed << " more failing words\n";
  os << "diagnostics   " << (report.diagnostic_counts.empty() ? "none" : "") << "\n";
  for (const auto& [name, count] : report.diagnostic_counts) os << "  " << name << "  " << count << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", report.wall_seconds);
  os << "wall seconds  " << buf << "\n";
  return os.str();
}

}  // namespace braidsig
