#pragma once

// Positive braid words, their syllable (twist region) form, and the
// structural predicates used throughout the library.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidsig {

/// Positive word in the standard generators sigma_1 .. sigma_{n-1} of B_n.
/// Letters hold generator indices in reading order.
class BraidWord {
 public:
  BraidWord() : strands_(2) {}
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Columns in [1, n-1] that never occur. Non-empty means the closure is split.
  std::vector<int> unused_columns() const;
  bool uses_all_columns() const { return unused_columns().empty(); }

  /// Run-length text in the input grammar, e.g. "1^3 2 1^3".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

struct Syllable {
  int column = 1;
  int exponent = 1;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Run-length form. With `cyclic` set the sequence is read around the
/// closure, so the last and first syllables are neighbours.
struct SyllableWord {
  int strands = 2;
  std::vector<Syllable> syllables;
  bool cyclic = false;

  std::size_t size() const noexcept { return syllables.size(); }
  BraidWord expand() const;
  std::string to_string() const;

  friend bool operator==(const SyllableWord&, const SyllableWord&) = default;
};

class Permutation {
 public:
  explicit Permutation(int n);

  /// images()[k] is the image of strand k+1 (1-based values).
  std::span<const int> images() const noexcept { return images_; }
  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// Right-multiplies by the transposition (i, i+1).
  void swap_adjacent(int i);
  int cycle_count() const;

 private:
  std::vector<int> images_;
};

/// Parses `word := WS* syllable (WS+ syllable)* WS*` with
/// `syllable := INDEX ("^" EXP)?`. Blank text is the empty word.
/// Without `strands` the braid index is max(INDEX) + 1 (at least 2).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

SyllableWord syllables(const BraidWord& w, bool cyclic);

/// Merges same-column syllables that can be brought together by commuting
/// past syllables at column distance >= 2, repeating until no merge applies.
SyllableWord normalize_far_commutation(const SyllableWord& s);

/// normalize_far_commutation(syllables(w, true)).
SyllableWord normal_form(const BraidWord& w);

/// Largest word accepted by the exhaustive search.
inline constexpr std::size_t kExhaustiveTwistMaxLetters = 24;

/// Syllable count of the cyclic normal form, or with `exhaustive` the
/// minimum cyclic syllable count over every word reachable by rotation and
/// far commutation (breadth-first over letter sequences).
int twist_number(const BraidWord& w, bool exhaustive = false);

Permutation permutation(const BraidWord& w);
int components(const BraidWord& w);

/// Every syllable of the cyclic normal form has exponent >= 3. False for
/// the empty word.
bool is_sufficiently_complicated(const SyllableWord& s);

/// Every column 1..n-1 occurs in at least two syllables of the cyclic
/// normal form, two of which are not cyclic neighbours.
bool hyperbolicity_criterion(const SyllableWord& s);

}  // namespace braidsig
