#include <catch_amalgamated.hpp>

#include "pdw/envelope.hpp"

using namespace pdw;

TEST_CASE("envelope words: frozen tables") {
  // D, both types, m <= 4.
  CHECK(envelope_word({SequenceId::D, 1, 1}) == "a");
  CHECK(envelope_word({SequenceId::D, 1, 2}) == "aba");
  CHECK(envelope_word({SequenceId::D, 1, 3}) == "abaaaba");
  CHECK(envelope_word({SequenceId::D, 1, 4}) == "abaaabababaaaba");
  CHECK(envelope_word({SequenceId::D, 2, 1}) == "aa");
  CHECK(envelope_word({SequenceId::D, 2, 2}) == "ababa");
  CHECK(envelope_word({SequenceId::D, 2, 3}) == "abaaabaaaba");
  CHECK(envelope_word({SequenceId::D, 2, 4}) == "abaaabababaaabababaaaba");

  // Theta1.
  CHECK(envelope_word({SequenceId::Theta1, 1, 1}) == "a");
  CHECK(envelope_word({SequenceId::Theta1, 1, 2}) == "abba");
  CHECK(envelope_word({SequenceId::Theta1, 1, 3}) == "abbaaabba");
  CHECK(envelope_word({SequenceId::Theta1, 1, 4}) == "abbaaabbabbabbaaabba");
  CHECK(envelope_word({SequenceId::Theta1, 2, 1}) == "b");
  CHECK(envelope_word({SequenceId::Theta1, 2, 2}) == "aa");
  CHECK(envelope_word({SequenceId::Theta1, 2, 3}) == "abbabba");
  CHECK(envelope_word({SequenceId::Theta1, 2, 4}) == "abbaaabbaaabba");

  // Theta2.
  CHECK(envelope_word({SequenceId::Theta2, 1, 1}) == "a");
  CHECK(envelope_word({SequenceId::Theta2, 1, 2}) == "aba");
  CHECK(envelope_word({SequenceId::Theta2, 1, 3}) == "abacacaba");
  CHECK(envelope_word({SequenceId::Theta2, 1, 4}) == "abacacabababacacaba");
  CHECK(envelope_word({SequenceId::Theta2, 2, 1}) == "aca");
  CHECK(envelope_word({SequenceId::Theta2, 2, 2}) == "ababa");
  CHECK(envelope_word({SequenceId::Theta2, 2, 3}) == "abacacabacacaba");
  CHECK(envelope_word({SequenceId::Theta2, 2, 4}) ==
        "abacacabababacacabababacacaba");

  CHECK_THROWS_AS(envelope_word({SequenceId::D, 3, 1}), InvalidIndex);
  CHECK_THROWS_AS(envelope_word({SequenceId::D, 1, 0}), InvalidIndex);
}

TEST_CASE("envelope order walks (1,m), (2,m), (1,m+1), ...") {
  EnvelopeId id{SequenceId::D, 1, 1};
  std::size_t last_len = 0;
  for (int step = 0; step < 12; ++step) {
    std::size_t len = envelope_word(id).size();
    CHECK(len > last_len);  // the order is strictly by length
    last_len = len;
    id = next_envelope(id);
  }
  CHECK(next_envelope({SequenceId::D, 1, 3}) == EnvelopeId{SequenceId::D, 2, 3});
  CHECK(next_envelope({SequenceId::D, 2, 3}) == EnvelopeId{SequenceId::D, 1, 4});
  CHECK(to_string(EnvelopeId{SequenceId::D, 1, 2}) == "D:E(1,2)");
}

TEST_CASE("envelope_of: frozen fits") {
  EnvelopeFit fit = envelope_of(SequenceId::D, "b");
  CHECK(fit.env == EnvelopeId{SequenceId::D, 1, 2});
  CHECK(fit.offset == 1);

  fit = envelope_of(SequenceId::D, "abaaab");
  CHECK(fit.env == EnvelopeId{SequenceId::D, 1, 3});
  CHECK(fit.offset == 0);

  fit = envelope_of(SequenceId::D, "aa");
  CHECK(fit.env == EnvelopeId{SequenceId::D, 2, 1});
  CHECK(fit.offset == 0);

  fit = envelope_of(SequenceId::Theta1, "aa");
  CHECK(fit.env == EnvelopeId{SequenceId::Theta1, 2, 2});
  CHECK(fit.offset == 0);

  fit = envelope_of(SequenceId::Theta1, "bb");
  CHECK(fit.env == EnvelopeId{SequenceId::Theta1, 1, 2});
  CHECK(fit.offset == 1);

  fit = envelope_of(SequenceId::Theta2, "ababa");
  CHECK(fit.env == EnvelopeId{SequenceId::Theta2, 2, 2});
  CHECK(fit.offset == 0);

  fit = envelope_of(SequenceId::Theta2, "c");
  CHECK(fit.env == EnvelopeId{SequenceId::Theta2, 2, 1});
  CHECK(fit.offset == 1);

  // An envelope word is its own envelope at offset 0.
  fit = envelope_of(SequenceId::D, "abaaaba");
  CHECK(fit.env == EnvelopeId{SequenceId::D, 1, 3});
  CHECK(fit.offset == 0);

  CHECK_THROWS_AS(envelope_of(SequenceId::D, "bb"), NotAFactor);
  CHECK_THROWS_AS(envelope_of(SequenceId::D, "abc"), MalformedWord);
}

TEST_CASE("weak and strong extension on samples") {
  for (const Word& w : {Word("b"), Word("aa"), Word("abaa"), Word("ababa"),
                        Word("abaaabab")}) {
    CHECK(verify_unique_occurrence(SequenceId::D, w));
    CHECK(verify_strong_extension(SequenceId::D, w, 20));
  }
  CHECK(verify_unique_occurrence(SequenceId::Theta2, "cac"));
  CHECK(verify_strong_extension(SequenceId::Theta2, "cac", 10));
  CHECK_THROWS_AS(verify_strong_extension(SequenceId::D, "a", 0), InvalidIndex);
}

TEST_CASE("decompose: frozen rows and the parity rule") {
  Decomposition dec = decompose(1, 3, 1);
  CHECK(dec.copies == 4);
  CHECK(dec.separators == "bab");

  dec = decompose(1, 3, 2);
  CHECK(dec.copies == 2);
  CHECK(dec.separators == "a");

  dec = decompose(2, 3, 1);
  CHECK(dec.copies == 6);
  CHECK(dec.separators == "babab");

  dec = decompose(2, 3, 2);
  CHECK(dec.copies == 3);
  CHECK(dec.separators == "aa");

  CHECK_THROWS_AS(decompose(1, 3, 3), InvalidIndex);
  CHECK_THROWS_AS(decompose(1, 2, 0), InvalidIndex);
}

TEST_CASE("palindromic prefixes are the lower type-1 envelopes") {
  CHECK(palindromic_prefixes({SequenceId::D, 1, 3}) ==
        std::vector<Word>{"a", "aba"});
  CHECK(palindromic_prefixes({SequenceId::D, 2, 2}) ==
        std::vector<Word>{"a", "aba"});
  CHECK(palindromic_prefixes({SequenceId::D, 1, 1}).empty());
  CHECK(palindromic_prefixes({SequenceId::D, 2, 1}) == std::vector<Word>{"a"});
  CHECK_THROWS_AS(palindromic_prefixes({SequenceId::Theta1, 1, 2}),
                  InvalidIndex);
}
