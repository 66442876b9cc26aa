#include "braidsig/certificate.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "braidsig/bounds.hpp"

namespace braidsig {

namespace {

SyllableWord cyclic_normal(const SyllableWord& s) {
  return normalize_far_commutation(s.cyclic ? s : syllables(s.expand(), true));
}

bool alternating_run(const SyllableWord& nf, const std::vector<std::size_t>& at) {
  for (std::size_t k = 0; k < at.size(); ++k) {
    if (nf.syllables[at[k]].exponent < 2) return false;
    if (k > 0 && nf.syllables[at[k]].column == nf.syllables[at[k - 1]].column) return false;
  }
  return true;
}

}  // namespace

DotPlacement place_dots(const SyllableWord& s) {
  const SyllableWord nf = cyclic_normal(s);
  DotPlacement out;
  const std::size_t len = nf.size();
  if (len >= 2) {
    for (std::size_t p = 0; p < len; ++p) {
      const std::size_t q = (p + 1) % len;
      const int a = nf.syllables[p].column;
      const int b = nf.syllables[q].column;
      if (std::abs(a - b) == 1) out.dots.push_back({p, q, std::max(a, b)});
    }
  }
  out.at_least_twist = out.dots.size() >= len;
  return out;
}

StringClass best_class(const std::vector<Dot>& dots, int strands) {
  std::array<int, 3> counts{};
  for (const Dot& dot : dots) ++counts[dot.string % 3];
  StringClass out;
  for (int j = 1; j < 3; ++j) {
    if (counts[j] > counts[out.residue]) out.residue = j;
  }
  out.dot_count = counts[out.residue];
  for (int m = 1; m <= strands; ++m) {
    if (m % 3 == out.residue) out.strings.push_back(m);
  }
  return out;
}

SubwordCertificate extract_subwords(const SyllableWord& s, const StringClass& cls, RunRule rule) {
  const SyllableWord nf = cyclic_normal(s);
  const std::size_t len = nf.size();
  SubwordCertificate out{cls.residue, {}};

  for (int m : cls.strings) {
    const int lo = m - 1;  // run columns are {lo, m}
    if (lo < 1 || m > nf.strands - 1) continue;

    std::vector<std::size_t> entries;
    for (std::size_t p = 0; p < len; ++p) {
      const int col = nf.syllables[p].column;
      if (col == lo || col == m) entries.push_back(p);
    }
    const std::size_t r = entries.size();
    if (r < 4) continue;

    // gap[e]: the stretch between entries[e] and its cyclic successor.
    // A breaking column makes the gap unbounded.
    std::vector<std::size_t> gap(r);
    std::vector<bool> broken(r, false);
    for (std::size_t e = 0; e < r; ++e) {
      const std::size_t from = entries[e];
      const std::size_t to = entries[(e + 1) % r];
      std::size_t steps = 0;
      for (std::size_t p = (from + 1) % len; p != to; p = (p + 1) % len) {
        ++steps;
        const int col = nf.syllables[p].column;
        if (rule == RunRule::Restricted && (col == lo - 1 || col == m + 1)) broken[e] = true;
      }
      gap[e] = broken[e] ? std::numeric_limits<std::size_t>::max() : steps;
    }

    // Start after the largest gap; among equal gaps the start with the
    // lowest syllable position wins.
    std::size_t widest = 0;
    for (std::size_t e = 1; e < r; ++e) {
      const bool wider = gap[e] > gap[widest];
      const bool tie_lower = gap[e] == gap[widest] && entries[(e + 1) % r] < entries[(widest + 1) % r];
      if (wider || tie_lower) widest = e;
    }
    const std::size_t start = (widest + 1) % r;

    std::size_t k = 0;
    while (k + 3 < r) {
      std::vector<std::size_t> run;
      bool unbroken = true;
      for (std::size_t d = 0; d < 4; ++d) {
        const std::size_t e = (start + k + d) % r;
        run.push_back(entries[e]);
        if (d < 3 && broken[e]) unbroken = false;
      }
      if (unbroken && alternating_run(nf, run)) {
        out.occurrences.push_back({m, {run[0], run[1], run[2], run[3]}});
        k += 4;
      } else {
        k += 1;
      }
    }
  }
  return out;
}

CertificateCheck certificate_check(const BraidWord& w) {
  const SyllableWord nf = normal_form(w);
  const DotPlacement dots = place_dots(nf);
  const SubwordCertificate cert = extract_subwords(nf, best_class(dots.dots, w.strands()));
  CertificateCheck out;
  out.count = static_cast<int>(cert.count());
  out.twist = twist_number(w);
  out.delta_sigma = signature_defect(w);
  out.dots = static_cast<int>(dots.dots.size());
  out.ok_lower = 21 * out.count >= out.twist;
  out.ok_defect = 2 * out.count <= out.delta_sigma;
  return out;
}

ThreeBraidBound three_braid_bound(const SyllableWord& s) {
  const SyllableWord nf = cyclic_normal(s);
  ThreeBraidBound out;
  out.twist = static_cast<int>(nf.size());
  out.applicable = nf.strands == 3 && is_sufficiently_complicated(nf) && hyperbolicity_criterion(nf);
  if (!out.applicable) return out;

  const std::size_t len = nf.size();
  for (std::size_t k = 0; k + 3 < len;) {
    if (alternating_run(nf, {k, k + 1, k + 2, k + 3})) {
      ++out.consecutive_count;
      k += 4;
    } else {
      ++k;
    }
  }
  StringClass central{2, {2}, 0};
  out.restricted_count = static_cast<int>(extract_subwords(nf, central).count());
  out.twist_ok = out.twist >= 4;
  out.count_ok = 7 * out.consecutive_count >= out.twist;
  return out;
}

}  // namespace braidsig
