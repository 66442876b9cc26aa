#pragma once

// Combinatorial certificate for the lower bound of the signature defect in
// terms of the twist number: dots between neighbouring twist regions, the
// partition of strings by index mod 3, and disjoint alternating subwords
// s_i^a s_{i+1}^b s_i^c s_{i+1}^d carried by one string class.

#include <array>
#include <cstddef>
#include <vector>

#include "braidsig/braid.hpp"

namespace braidsig {

struct Dot {
  std::size_t first = 0;   // syllable position
  std::size_t second = 0;  // its cyclic successor
  int string = 0;          // strand shared by the two columns
  friend bool operator==(const Dot&, const Dot&) = default;
};

struct DotPlacement {
  std::vector<Dot> dots;
  bool at_least_twist = false;  // dots.size() >= syllable count
};

/// One dot per cyclically adjacent syllable pair whose columns differ by 1.
/// Expects a normalized cyclic word; other words are normalized first.
DotPlacement place_dots(const SyllableWord& s);

struct StringClass {
  int residue = 0;           // j in {0, 1, 2}
  std::vector<int> strings;  // all strings in [1, n] congruent to j mod 3
  int dot_count = 0;
};

/// Residue class carrying the most dots; ties go to the smallest residue.
StringClass best_class(const std::vector<Dot>& dots, int strands);

struct Occurrence {
  int central_string = 0;                // i + 1
  std::array<std::size_t, 4> positions;  // syllable positions, in scan order
};

struct SubwordCertificate {
  int residue = 0;
  std::vector<Occurrence> occurrences;
  std::size_t count() const noexcept { return occurrences.size(); }
};

enum class RunRule {
  Restricted,  // columns m-2 and m+1 break a run, farther columns are transparent
  Deletion,    // every other column is transparent (subwords as subsequences)
};

/// Greedy extraction of disjoint alternating 4-runs on the column pairs
/// {m-1, m} for each string m of the class. Every syllable in a run has
/// exponent >= 2.
SubwordCertificate extract_subwords(const SyllableWord& s, const StringClass& cls,
                                    RunRule rule = RunRule::Restricted);

struct CertificateCheck {
  int count = 0;
  int twist = 0;
  int delta_sigma = 0;
  int dots = 0;
  bool ok_lower = false;   // 21 * count >= t
  bool ok_defect = false;  // 2 * count <= ds
};

CertificateCheck certificate_check(const BraidWord& w);

struct ThreeBraidBound {
  bool applicable = false;    // n = 3, criterion holds, sufficiently complicated
  int twist = 0;
  int consecutive_count = 0;  // literal consecutive 4-runs in the cyclic word
  int restricted_count = 0;   // extract_subwords on the same word
  bool twist_ok = false;      // t >= 4
  bool count_ok = false;      // 7 * count >= t
  bool holds() const noexcept { return applicable && twist_ok && count_ok; }
};

ThreeBraidBound three_braid_bound(const SyllableWord& s);

}  // namespace braidsig
