// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidsig/bounds.hpp"
#include "braidsig/inertia.hpp"
#include "braidsig/seifert.hpp"
#include "braidsig/sweep.hpp"
#include "../unit/oracles.hpp"

using namespace braidsig;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!pass) detail += "; ";
    pass = false;
    detail += why;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) o.fail("runtime " + std::to_string(secs) + "s over budget");
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

EnumerationSpec sweep_family() {
  EnumerationSpec spec;
  spec.strands = {3, 5};
  spec.syllable_count = {4, 6};
  spec.exponents = {3, 4};
  spec.require_sufficiently_complicated = true;
  spec.require_hyperbolic = true;
  return spec;
}

const SweepReport& main_sweep() {
  static const SweepReport report = verify_sweep(sweep_family());
  return report;
}

std::string csv(const SweepReport& r) {
  std::ostringstream os;
  write_csv(r, os);
  return os.str();
}

IntMatrix random_symmetric(std::mt19937& rng, std::size_t d) {
  std::uniform_int_distribution<int> entry(-5, 5);
  IntMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r; c < d; ++c) m(r, c) = m(c, r) = entry(rng);
  return m;
}

std::string power_word(int k) { return "1^" + std::to_string(k); }

}  // namespace

int main() {
  criterion(1, "defect of 1^n vanishes for n in [2,16]", 1.0, [] {
    Outcome o;
    for (int n = 2; n <= 16; ++n) {
      const int ds = signature_defect(parse_braid(power_word(n)));
      if (ds != 0) o.fail(power_word(n) + " has defect " + std::to_string(ds));
    }
    return o;
  });

  criterion(2, "defect of 1^a 2^b 1^c 2^d is 2 for a..d in {2,3,4}", 10.0, [] {
    Outcome o;
    int good = 0;
    for (int a = 2; a <= 4; ++a)
      for (int b = 2; b <= 4; ++b)
        for (int c = 2; c <= 4; ++c)
          for (int d = 2; d <= 4; ++d) {
            const std::string w = "1^" + std::to_string(a) + " 2^" + std::to_string(b) + " 1^" +
                                  std::to_string(c) + " 2^" + std::to_string(d);
            const int ds = signature_defect(parse_braid(w));
            if (ds == 2) {
              ++good;
            } else {
              o.fail(w + " has defect " + std::to_string(ds));
            }
          }
    if (!o.pass) o.detail += " (" + std::to_string(good) + "/81 equal 2)";
    return o;
  });

  criterion(3, "twist/defect inequality on the n=3..5, t=4..6, {3,4} sweep", 300.0, [] {
    Outcome o;
    const SweepReport& r = main_sweep();
    for (const SweepRow& row : r.rows) {
      const auto& rep = row.report;
      if (!rep.qualifies()) o.fail(rep.word + " passed the filter without both hypotheses");
      if (!(rep.delta_sigma <= 2 * rep.twist && 2 * rep.twist <= 21 * rep.delta_sigma))
        o.fail(rep.word + " violates ds/2 <= t <= 21ds/2");
    }
    if (r.rows.empty()) o.fail("empty sweep");
    std::ostringstream s;
    s << r.rows.size() << " words";
    if (r.min_twist_per_defect)
      s << ", t/ds in [" << r.min_twist_per_defect->num << "/" << r.min_twist_per_defect->den << ", "
        << r.max_twist_per_defect->num << "/" << r.max_twist_per_defect->den << "]";
    if (o.pass) o.detail = s.str();
    return o;
  });

  criterion(4, "cut bound on the sweep", 0, [] {
    Outcome o;
    for (const SweepRow& row : main_sweep().rows) {
      const auto& rep = row.report;
      if (rep.delta_sigma > 2 * rep.cut.delta_betti) o.fail(rep.word + ": ds > 2 delta_betti");
      if (rep.delta_sigma > 2 * rep.twist) o.fail(rep.word + ": ds > 2t");
    }
    return o;
  });

  criterion(5, "subword certificate on the sweep", 0, [] {
    Outcome o;
    int three = 0;
    int deletion_ok = 0;
    int offenders = 0;
    for (const SweepRow& row : main_sweep().rows) {
      const auto& rep = row.report;
      offenders += 21 * rep.subword_count < rep.twist || 2 * rep.subword_count > rep.delta_sigma;
      if (21 * rep.subword_count < rep.twist) o.fail(rep.word + ": 21 count < t");
      if (2 * rep.subword_count > rep.delta_sigma) o.fail(rep.word + ": 2 count > ds");
      deletion_ok += 21 * rep.deletion_subword_count >= rep.twist && 2 * rep.deletion_subword_count <= rep.delta_sigma;
      if (rep.strands == 3) {
        ++three;
        if (rep.twist < 4) o.fail(rep.word + ": t < 4");
        if (7 * rep.three_braid.consecutive_count < rep.twist) o.fail(rep.word + ": 7 count < t");
      }
    }
    const std::string summary = std::to_string(offenders) + "/" + std::to_string(main_sweep().rows.size()) +
                                " words fail; " + std::to_string(three) + " three-braids; deletion rule satisfies both bounds on " +
                                std::to_string(deletion_ok) + "/" + std::to_string(main_sweep().rows.size()) +
                                " words";
    if (o.pass) {
      o.detail = summary;
    } else {
      // Keep the line readable: first offender, then the totals.
      const auto cut = o.detail.find(';');
      o.detail = o.detail.substr(0, cut) + (cut == std::string::npos ? "" : " and others") + "; " + summary;
    }
    return o;
  });

  criterion(6, "inertia matches the eigenvalue-sign oracle", 0, [] {
    Outcome o;
    std::mt19937 rng(6);
    for (int k = 0; k < 200; ++k) {
      const IntMatrix m = random_symmetric(rng, 1 + k % 12);
      if (!(inertia(m) == oracle::descartes_inertia(m))) o.fail("oracle mismatch on matrix " + std::to_string(k));
    }
    std::uniform_int_distribution<int> entry(-3, 3);
    int done = 0;
    while (done < 100) {
      const std::size_t d = 1 + done % 12;
      const IntMatrix m = random_symmetric(rng, d);
      IntMatrix b(d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) b(r, c) = entry(rng);
      if (oracle::descartes_inertia(b.transposed() * b).positive != static_cast<int>(d)) continue;
      if (!(inertia(b.transposed() * m * b) == inertia(m))) o.fail("congruence " + std::to_string(done));
      ++done;
    }
    return o;
  });

  criterion(7, "calibration anchors and -b1 <= sigma <= b1", 0, [] {
    Outcome o;
    const std::pair<const char*, int> anchors[] = {{"1^2", 1}, {"1^3", 2}, {"1^2 2^2 1^2 2^2", 4}};
    for (const auto& [w, expected] : anchors) {
      const int got = link_signature(parse_braid(w));
      if (got != expected)
        o.fail(std::string("sigma(") + w + ") = " + std::to_string(got) + ", expected " + std::to_string(expected));
    }
    EnumerationSpec all = sweep_family();
    all.require_sufficiently_complicated = false;
    all.require_hyperbolic = false;
    all.exponents = {1, 2, 3, 4};
    all.syllable_count = {1, 5};
    std::size_t count = 0;
    for_each_word(all, [&](const SyllableWord& s) {
      const BraidWord w = s.expand();
      const int b1 = surface_data(w).betti;
      const int sigma = link_signature(w);
      if (sigma < -b1 || sigma > b1) o.fail(w.to_string() + " outside [-b1, b1]");
      ++count;
    });
    for (const SweepRow& row : main_sweep().rows)
      if (std::abs(row.report.sigma) > row.report.b1) o.fail(row.report.word + " outside [-b1, b1]");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count) + " extra words checked";
    return o;
  });

  criterion(8, "volume bounds consistency with printed constants", 0, [] {
    Outcome o;
    const Constants k = Constants::printed();
    for (const SweepRow& row : main_sweep().rows) {
      const double ds = row.report.delta_sigma;
      const double t = row.report.twist;
      if (!(k.v8 * ds / 3 <= 2 * k.v8 * t / 3)) o.fail(row.report.word + ": lower bounds out of order");
      if (!(10 * k.v3 * (t - 1) < 105 * k.v3 * ds)) o.fail(row.report.word + ": upper bounds out of order");
    }
    return o;
  });

  criterion(9, "repeated sweeps give byte-identical CSV", 0, [] {
    Outcome o;
    const std::string first = csv(main_sweep());
    SweepOptions serial;
    serial.threads = 1;
    if (csv(verify_sweep(sweep_family())) != first) o.fail("second parallel run differs");
    if (csv(verify_sweep(sweep_family(), serial)) != first) o.fail("serial run differs");
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
