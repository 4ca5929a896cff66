#include <catch_amalgamated.hpp>

#include "pdw/factor_index.hpp"

using namespace pdw;

TEST_CASE("find_all reports every overlapping occurrence") {
  CHECK(find_all("abaaabab", "a") == std::vector<std::size_t>{1, 3, 4, 5, 7});
  CHECK(find_all("aaaa", "aa") == std::vector<std::size_t>{1, 2, 3});
  CHECK(find_all("abab", "abab") == std::vector<std::size_t>{1});
  CHECK(find_all("ab", "abc").empty());
  CHECK(find_all("abc", "").empty());
}

// occurrences() returns every position below its final horizon, so the
// frozen expectations compare a leading slice.
namespace {
std::vector<std::size_t> first_positions(SequenceId s, const Word& w,
                                         std::size_t count) {
  OccurrenceList occ = occurrences(s, w, count);
  REQUIRE(occ.positions.size() >= count);
  occ.positions.resize(count);
  return occ.positions;
}
}  // namespace

TEST_CASE("occurrences: frozen positions in D") {
  CHECK(first_positions(SequenceId::D, "aa", 5) ==
        std::vector<std::size_t>{3, 4, 11, 12, 15});
  CHECK(first_positions(SequenceId::D, "b", 5) ==
        std::vector<std::size_t>{2, 6, 8, 10, 14});
  CHECK(first_positions(SequenceId::D, "ab", 5) ==
        std::vector<std::size_t>{1, 5, 7, 9, 13});
  CHECK(first_positions(SequenceId::D, "abaaaba", 3) ==
        std::vector<std::size_t>{1, 9, 13});
  CHECK(first_positions(SequenceId::D, "ababa", 5) ==
        std::vector<std::size_t>{5, 7, 21, 23, 29});
}

TEST_CASE("occurrences: absence and argument errors") {
  CHECK_THROWS_AS(occurrences(SequenceId::D, "bb", 1), NotAFactor);
  try {
    occurrences(SequenceId::D, "bb", 1);
  } catch (const NotAFactor& e) {
    CHECK_FALSE(e.horizon_exhausted());
  }
  CHECK_THROWS_AS(occurrences(SequenceId::Theta2, "aa", 1), NotAFactor);
  CHECK_THROWS_AS(occurrences(SequenceId::D, "abc", 1), MalformedWord);
  CHECK_THROWS_AS(occurrences(SequenceId::D, "", 1), MalformedWord);
  CHECK_THROWS_AS(occurrences(SequenceId::D, "a", 0), InvalidIndex);
}

TEST_CASE("occurrences: horizon grows to satisfy the count") {
  OccurrenceList occ = occurrences(SequenceId::D, "abaaaba", 100);
  CHECK(occ.positions.size() >= 100);
  CHECK(occ.horizon > starting_horizon(7));
  // Positions are strictly increasing.
  for (std::size_t p = 1; p < occ.positions.size(); ++p) {
    CHECK(occ.positions[p - 1] < occ.positions[p]);
  }
}

TEST_CASE("return_words: frozen rows") {
  ReturnWords rw = return_words(SequenceId::D, "aa", 4);
  CHECK(rw.r0 == "ab");
  CHECK(rw.returns == std::vector<Word>{"a", "aababab", "a", "aab"});

  rw = return_words(SequenceId::D, "b", 4);
  CHECK(rw.r0 == "a");
  CHECK(rw.returns == std::vector<Word>{"baaa", "ba", "ba", "baaa"});

  rw = return_words(SequenceId::Theta1, "b", 4);
  CHECK(rw.r0 == "a");
  CHECK(rw.returns == std::vector<Word>{"b", "baaa", "b", "ba"});

  rw = return_words(SequenceId::Theta2, "aca", 4);
  CHECK(rw.r0 == "ab");
  CHECK(rw.returns == std::vector<Word>{"ac", "acababab", "ac", "acab"});

  rw = return_words(SequenceId::Theta2, "c", 4);
  CHECK(rw.r0 == "aba");
  CHECK(rw.returns == std::vector<Word>{"ca", "cabababa", "ca", "caba"});
}

TEST_CASE("return words concatenate back to a prefix") {
  for (SequenceId s : {SequenceId::D, SequenceId::Theta1, SequenceId::Theta2}) {
    ReturnWords rw = return_words(s, "a", 32);
    Word rebuilt = rw.r0;
    for (const Word& r : rw.returns) rebuilt += r;
    CHECK(rebuilt == prefix(s, rebuilt.size()));
  }
}

TEST_CASE("distinct_factors: order and content") {
  Word text = prefix(SequenceId::D, 16);  // abaaabababaaabaa
  CHECK(distinct_factors(text, 1, 2) ==
        std::vector<Word>{"a", "b", "aa", "ab", "ba"});
  CHECK(distinct_factors(text, 3, 3) ==
        std::vector<Word>{"aaa", "aab", "aba", "baa", "bab"});
  CHECK(distinct_factors("ab", 3, 5).empty());
  CHECK_THROWS_AS(distinct_factors(text, 0, 2), InvalidIndex);

  // No factor of D ever contains bb.
  for (const Word& w : distinct_factors(prefix(SequenceId::D, 1024), 1, 12)) {
    CHECK(w.find("bb") == Word::npos);
  }
}
