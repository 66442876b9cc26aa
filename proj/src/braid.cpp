#include "braidsig/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "braidsig/error.hpp"

namespace braidsig {

namespace {

constexpr std::size_t kMaxLetters = 100000;
constexpr std::size_t kMaxSearchStates = 5000000;

bool is_ws(char ch) { return ch == ' ' || ch == '\t'; }

int parse_positive(std::string_view token, std::string_view whole) {
  const bool digits = !token.empty() && std::ranges::all_of(token, [](char ch) { return ch >= '0' && ch <= '9'; });
  if (!digits) throw Error(ErrorCode::Parse, "malformed token '" + std::string(whole) + "'");
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::Parse, "malformed token '" + std::string(whole) + "'");
  }
  return value;
}

SyllableWord normalize_cyclic(const SyllableWord& s) {
  if (s.cyclic) return normalize_far_commutation(s);
  return normalize_far_commutation(syllables(s.expand(), true));
}

std::string min_rotation(const std::string& s) {
  std::string best = s;
  std::string doubled = s + s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::string_view cand(doubled.data() + r, s.size());
    if (cand < best) best.assign(cand);
  }
  return best;
}

int cyclic_run_count(const std::string& s) {
  if (s.empty()) return 0;
  int boundaries = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p] != s[(p + s.size() - 1) % s.size()]) ++boundaries;
  }
  return boundaries == 0 ? 1 : boundaries;
}

int exhaustive_twist(const BraidWord& w) {
  if (w.length() > kExhaustiveTwistMaxLetters) {
    throw Error(ErrorCode::Precondition,
                "exhaustive twist search is limited to " + std::to_string(kExhaustiveTwistMaxLetters) +
                    " letters, word has " + std::to_string(w.length()));
  }
  std::string start;
  for (int letter : w.letters()) start.push_back(static_cast<char>(letter));
  if (start.size() < 2) return cyclic_run_count(start);

  start = min_rotation(start);
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  int best = cyclic_run_count(start);
  const std::size_t c = start.size();
  while (!queue.empty()) {
    std::string cur = std::move(queue.front());
    queue.pop_front();
    best = std::min(best, cyclic_run_count(cur));
    for (std::size_t p = 0; p < c; ++p) {
      const std::size_t q = (p + 1) % c;
      if (std::abs(cur[p] - cur[q]) < 2) continue;
      std::string next = cur;
      std::swap(next[p], next[q]);
      next = min_rotation(next);
      if (seen.insert(next).second) {
        if (seen.size() > kMaxSearchStates) {
          throw Error(ErrorCode::Overflow, "exhaustive twist search exceeded state cap");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return best;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw Error(ErrorCode::Argument, "braid index must be at least 2");
  for (int letter : letters_) {
    if (letter < 1 || letter > strands_ - 1) {
      throw Error(ErrorCode::IndexRange, "generator index " + std::to_string(letter) + " outside [1, " +
                                             std::to_string(strands_ - 1) + "]");
    }
  }
}

std::vector<int> BraidWord::unused_columns() const {
  std::vector<bool> used(strands_, false);
  for (int letter : letters_) used[letter] = true;
  std::vector<int> out;
  for (int i = 1; i < strands_; ++i) {
    if (!used[i]) out.push_back(i);
  }
  return out;
}

std::string BraidWord::to_string() const { return syllables(*this, false).to_string(); }

BraidWord SyllableWord::expand() const {
  std::vector<int> letters;
  for (const auto& syl : syllables) letters.insert(letters.end(), syl.exponent, syl.column);
  return BraidWord(strands, std::move(letters));
}

std::string SyllableWord::to_string() const {
  std::string out;
  for (const auto& syl : syllables) {
    if (!out.empty()) out += ' ';
    out += std::to_string(syl.column);
    if (syl.exponent != 1) out += '^' + std::to_string(syl.exponent);
  }
  return out;
}

Permutation::Permutation(int n) : images_(n) {
  for (int k = 0; k < n; ++k) images_[k] = k + 1;
}

void Permutation::swap_adjacent(int i) { std::swap(images_[i - 1], images_[i]); }

int Permutation::cycle_count() const {
  std::vector<bool> visited(images_.size(), false);
  int cycles = 0;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (visited[k]) continue;
    ++cycles;
    for (std::size_t j = k; !visited[j]; j = images_[j] - 1) visited[j] = true;
  }
  return cycles;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters;
  int max_index = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_ws(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_ws(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    const auto caret = token.find('^');
    const int index = parse_positive(token.substr(0, caret), token);
    int exponent = 1;
    if (caret != std::string_view::npos) {
      exponent = parse_positive(token.substr(caret + 1), token);
      if (exponent < 1) throw Error(ErrorCode::Parse, "exponent must be >= 1 in '" + std::string(token) + "'");
    }
    if (index == 0) throw Error(ErrorCode::IndexRange, "generator index 0 in '" + std::string(token) + "'");
    if (letters.size() + static_cast<std::size_t>(exponent) > kMaxLetters) {
      throw Error(ErrorCode::Overflow, "braid word longer than " + std::to_string(kMaxLetters) + " letters");
    }
    letters.insert(letters.end(), exponent, index);
    max_index = std::max(max_index, index);
  }
  if (strands && *strands < 2) throw Error(ErrorCode::Argument, "braid index must be at least 2");
  const int n = strands.value_or(std::max(2, max_index + 1));
  return BraidWord(n, std::move(letters));
}

SyllableWord syllables(const BraidWord& w, bool cyclic) {
  SyllableWord out{w.strands(), {}, cyclic};
  for (int letter : w.letters()) {
    if (!out.syllables.empty() && out.syllables.back().column == letter) {
      ++out.syllables.back().exponent;
    } else {
      out.syllables.push_back({letter, 1});
    }
  }
  if (cyclic && out.syllables.size() > 1 && out.syllables.front().column == out.syllables.back().column) {
    out.syllables.front().exponent += out.syllables.back().exponent;
    out.syllables.pop_back();
  }
  return out;
}

SyllableWord normalize_far_commutation(const SyllableWord& s) {
  SyllableWord out = s;
  auto& syl = out.syllables;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t len = syl.size();
    for (std::size_t p = 0; p < len && !changed; ++p) {
      for (std::size_t d = 1; d < len; ++d) {
        if (!s.cyclic && p + d >= len) break;
        const std::size_t q = (p + d) % len;
        if (syl[q].column == syl[p].column) {
          syl[p].exponent += syl[q].exponent;
          syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(q));
          changed = true;
          break;
        }
        if (std::abs(syl[q].column - syl[p].column) < 2) break;
      }
    }
  }
  return out;
}

SyllableWord normal_form(const BraidWord& w) { return normalize_far_commutation(syllables(w, true)); }

int twist_number(const BraidWord& w, bool exhaustive) {
  if (exhaustive) return exhaustive_twist(w);
  return static_cast<int>(normal_form(w).size());
}

Permutation permutation(const BraidWord& w) {
  Permutation perm(w.strands());
  for (int letter : w.letters()) perm.swap_adjacent(letter);
  return perm;
}

int components(const BraidWord& w) { return permutation(w).cycle_count(); }

bool is_sufficiently_complicated(const SyllableWord& s) {
  const SyllableWord nf = normalize_cyclic(s);
  if (nf.syllables.empty()) return false;
  return std::ranges::all_of(nf.syllables, [](const Syllable& syl) { return syl.exponent >= 3; });
}

bool hyperbolicity_criterion(const SyllableWord& s) {
  const SyllableWord nf = normalize_cyclic(s);
  const std::size_t len = nf.size();
  if (len < 4) return false;
  for (int col = 1; col < nf.strands; ++col) {
    std::vector<std::size_t> at;
    for (std::size_t p = 0; p < len; ++p) {
      if (nf.syllables[p].column == col) at.push_back(p);
    }
    bool separated = false;
    for (std::size_t a = 0; a < at.size() && !separated; ++a) {
      for (std::size_t b = a + 1; b < at.size(); ++b) {
        const std::size_t gap = at[b] - at[a];
        if (gap != 1 && gap != len - 1) {
          separated = true;
          break;
        }
      }
    }
    if (!separated) return false;
  }
  return true;
}

}  // namespace braidsig
