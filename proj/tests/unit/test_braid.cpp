#include <random>

#include "braidsig/braid.hpp"
#include "braidsig/error.hpp"
#include "doctest.h"

using namespace braidsig;

namespace {

std::vector<int> letters_of(const BraidWord& w) { return {w.letters().begin(), w.letters().end()}; }

ErrorCode parse_error(std::string_view text, std::optional<int> strands = std::nullopt) {
  try {
    parse_braid(text, strands);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for '" << text << "'");
  return ErrorCode::Argument;
}

BraidWord random_word(std::mt19937& rng, int n, int length) {
  std::uniform_int_distribution<int> col(1, n - 1);
  std::vector<int> letters(length);
  for (int& l : letters) l = col(rng);
  return BraidWord(n, letters);
}

BraidWord rotated(const BraidWord& w, std::size_t r) {
  std::vector<int> l = letters_of(w);
  std::rotate(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(r % std::max<std::size_t>(1, l.size())), l.end());
  return BraidWord(w.strands(), l);
}

// Swaps the first adjacent far-commuting pair, if any.
BraidWord far_commuted(const BraidWord& w, std::size_t from) {
  std::vector<int> l = letters_of(w);
  for (std::size_t k = 0; k + 1 < l.size(); ++k) {
    const std::size_t p = (from + k) % (l.size() - 1);
    if (std::abs(l[p] - l[p + 1]) >= 2) {
      std::swap(l[p], l[p + 1]);
      break;
    }
  }
  return BraidWord(w.strands(), l);
}

}  // namespace

TEST_CASE("parse_braid expands the run-length grammar") {
  const BraidWord w = parse_braid("1^3");
  CHECK(w.strands() == 2);
  CHECK(letters_of(w) == std::vector<int>{1, 1, 1});
  CHECK(parse_braid("1 1 1") == w);
  CHECK(parse_braid(" \t1^2 1\t") == w);

  const BraidWord x = parse_braid("1^3 2^3 1^3 2^3");
  CHECK(x.strands() == 3);
  CHECK(x.length() == 12);
  CHECK(parse_braid("1^3", 4).strands() == 4);
  CHECK(x.to_string() == "1^3 2^3 1^3 2^3");
  CHECK(parse_braid("2 1 1").to_string() == "2 1^2");
}

TEST_CASE("parse_braid rejects malformed input") {
  CHECK(parse_error("1^") == ErrorCode::Parse);
  CHECK(parse_error("^2") == ErrorCode::Parse);
  CHECK(parse_error("a") == ErrorCode::Parse);
  CHECK(parse_error("1^0") == ErrorCode::Parse);
  CHECK(parse_error("-1") == ErrorCode::Parse);
  CHECK(parse_error("1,2") == ErrorCode::Parse);
  CHECK(parse_error("1^2^3") == ErrorCode::Parse);
  CHECK(parse_error("1\n2") == ErrorCode::Parse);
  CHECK(parse_error("99999999999") == ErrorCode::Parse);
  CHECK(parse_error("0") == ErrorCode::IndexRange);
  CHECK(parse_error("3", 3) == ErrorCode::IndexRange);
  CHECK(parse_error("1", 1) == ErrorCode::Argument);
  CHECK(parse_error("1^200000") == ErrorCode::Overflow);
}

TEST_CASE("empty word is the unlink") {
  const BraidWord w = parse_braid("", 3);
  CHECK(w.empty());
  CHECK(components(w) == 3);
  CHECK(w.unused_columns() == std::vector<int>{1, 2});
  CHECK(parse_braid("   ").strands() == 2);
  CHECK_FALSE(is_sufficiently_complicated(normal_form(w)));
  CHECK_FALSE(hyperbolicity_criterion(normal_form(w)));
  CHECK(twist_number(w) == 0);
}

TEST_CASE("syllables, linear and cyclic") {
  auto cyc = [](std::vector<int> l) { return syllables(BraidWord(3, l), true).syllables; };
  CHECK(cyc({1, 1, 1, 2, 2}) == std::vector<Syllable>{{1, 3}, {2, 2}});
  CHECK(cyc({1, 1, 2, 2, 1}) == std::vector<Syllable>{{1, 3}, {2, 2}});
  CHECK(cyc({1, 1, 1}) == std::vector<Syllable>{{1, 3}});
  CHECK(syllables(BraidWord(3, {1, 1, 2, 2, 1}), false).size() == 3);
}

TEST_CASE("normalize_far_commutation") {
  SyllableWord s{4, {{1, 3}, {3, 3}, {1, 3}}, true};
  CHECK(normalize_far_commutation(s).syllables == std::vector<Syllable>{{1, 6}, {3, 3}});

  SyllableWord alt{3, {{1, 3}, {2, 3}, {1, 3}, {2, 3}}, true};
  CHECK(normalize_far_commutation(alt) == alt);

  SyllableWord one{2, {{1, 3}}, true};
  CHECK(normalize_far_commutation(one) == one);

  // Linear mode never merges around the end.
  SyllableWord lin{4, {{1, 1}, {2, 1}, {1, 1}}, false};
  CHECK(normalize_far_commutation(lin).size() == 3);
}

TEST_CASE("twist_number") {
  CHECK(twist_number(parse_braid("1^3 2^3 1^3 2^3")) == 4);
  CHECK(twist_number(parse_braid("1^6")) == 1);
  CHECK(twist_number(parse_braid("1^3 3^3 1^3", 4)) == 2);
  CHECK(twist_number(parse_braid("1^3 2^3 1^3 2^3"), true) == 4);
  CHECK(twist_number(parse_braid("1^3 3^3 1^3", 4), true) == 2);
  CHECK(twist_number(parse_braid("1 3 2 1 3", 4), true) == 3);

  std::string long_word;
  for (int k = 0; k < 13; ++k) long_word += "1 2 ";
  CHECK_THROWS_AS(twist_number(parse_braid(long_word), true), Error);
}

TEST_CASE("permutation and components") {
  CHECK(components(parse_braid("1^3")) == 1);
  CHECK(components(parse_braid("1^2")) == 2);
  CHECK(components(parse_braid("", 3)) == 3);
  CHECK(components(parse_braid("1 2 1 2")) == 1);  // trefoil as a 3-braid
  CHECK(components(parse_braid("1 2 1 2 1 2")) == 3);
  const Permutation p = permutation(parse_braid("1 2"));
  CHECK(p.size() == 3);
  CHECK(p.cycle_count() == 1);
}

TEST_CASE("structural predicates") {
  CHECK(is_sufficiently_complicated(normal_form(parse_braid("1^3 2^3 1^3 2^3"))));
  CHECK_FALSE(is_sufficiently_complicated(normal_form(parse_braid("1^2 2^3"))));
  CHECK(is_sufficiently_complicated(normal_form(parse_braid("1^4"))));
  // The cyclic merge makes "1^2 2^3 1" sufficiently complicated.
  CHECK(is_sufficiently_complicated(syllables(parse_braid("1^2 2^3 1"), false)));

  CHECK(hyperbolicity_criterion(normal_form(parse_braid("1^3 2^3 1^3 2^3"))));
  CHECK_FALSE(hyperbolicity_criterion(normal_form(parse_braid("1^3 2^3", 3))));
  CHECK_FALSE(hyperbolicity_criterion(normal_form(parse_braid("1^5"))));
  CHECK_FALSE(hyperbolicity_criterion(normal_form(parse_braid("1^3 2^3 1^3 2^3", 4))));  // column 3 unused
  CHECK(hyperbolicity_criterion(normal_form(parse_braid("1^3 2^3 3^3 1^3 2^3 3^3"))));
}

TEST_CASE("property: expand then syllables is the identity on normalized words") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const SyllableWord nf = normal_form(random_word(rng, n, 1 + trial % 15));
    CHECK(syllables(nf.expand(), true) == nf);
  }
}

TEST_CASE("property: components and predicates under rotation and far commutation") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 3;
    std::vector<int> exps{1, 2, 3, 4};
    std::vector<int> letters;
    for (int s = 0; s < 4 + trial % 4; ++s) {
      const int col = 1 + static_cast<int>(rng() % (n - 1));
      letters.insert(letters.end(), exps[rng() % exps.size()], col);
    }
    const BraidWord w(n, letters);
    const std::size_t r = rng() % w.length();
    const BraidWord v = rotated(w, r);
    const BraidWord u = far_commuted(w, r);
    CHECK(components(v) == components(w));
    CHECK(components(u) == components(w));
    CHECK(is_sufficiently_complicated(normal_form(v)) == is_sufficiently_complicated(normal_form(w)));
    CHECK(hyperbolicity_criterion(normal_form(v)) == hyperbolicity_criterion(normal_form(w)));
    CHECK(twist_number(v) == twist_number(w));
  }
}

TEST_CASE("property: greedy twist number never beats the exhaustive search") {
  std::mt19937 rng(13);
  int equal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 3;
    const BraidWord w = random_word(rng, n, 4 + trial % 11);
    const int greedy = twist_number(w);
    const int exhaustive = twist_number(w, true);
    CHECK(greedy >= exhaustive);
    equal += greedy == exhaustive;
  }
  MESSAGE("greedy optimal on " << equal << " of 200 random words");
}
