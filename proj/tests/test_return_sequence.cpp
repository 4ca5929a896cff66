#include <catch_amalgamated.hpp>

#include "pdw/return_sequence.hpp"

using namespace pdw;

TEST_CASE("envelope first positions: closed forms") {
  CHECK(envelope_first_positions({SequenceId::D, 1, 1}) ==
        std::vector<std::size_t>{1, 3, 4});
  CHECK(envelope_first_positions({SequenceId::D, 1, 3}) ==
        std::vector<std::size_t>{1, 9, 13});
  CHECK(envelope_first_positions({SequenceId::D, 2, 1}) ==
        std::vector<std::size_t>{3, 4, 11, 12, 15});
  CHECK(envelope_first_positions({SequenceId::D, 2, 2}) ==
        std::vector<std::size_t>{5, 7, 21, 23, 29});
  CHECK_THROWS_AS(envelope_first_positions({SequenceId::Theta1, 1, 1}),
                  InvalidIndex);

  // The closed forms agree with the matcher for m <= 4.
  for (int m = 1; m <= 4; ++m) {
    for (int type : {1, 2}) {
      EnvelopeId id{SequenceId::D, type, m};
      std::vector<std::size_t> expected = envelope_first_positions(id);
      OccurrenceList occ =
          occurrences(SequenceId::D, envelope_word(id), expected.size());
      occ.positions.resize(expected.size());
      CHECK(occ.positions == expected);
    }
  }
}

TEST_CASE("envelope return words: block closed forms for D") {
  EnvelopeReturnWords r = envelope_return_words({SequenceId::D, 1, 2});
  CHECK(r.r0 == "");
  CHECK(r.r1 == "abaa");
  CHECK(r.r2 == "ab");
  CHECK_FALSE(r.r4.has_value());

  r = envelope_return_words({SequenceId::D, 2, 1});
  CHECK(r.r0 == "ab");
  CHECK(r.r1 == "a");
  CHECK(r.r2 == "aababab");
  REQUIRE(r.r4.has_value());
  CHECK(*r.r4 == "aab");

  r = envelope_return_words({SequenceId::D, 2, 2});
  CHECK(r.r0 == "abaa");
  CHECK(r.r1 == "ab");
  CHECK(r.r2 == "ababaaabaaabaa");
  REQUIRE(r.r4.has_value());
  CHECK(*r.r4 == "ababaa");
}

TEST_CASE("envelope return words: Theta base cases and tau images") {
  EnvelopeReturnWords r = envelope_return_words({SequenceId::Theta1, 2, 1});
  CHECK(r.r0 == "a");
  CHECK(r.r1 == "b");
  CHECK(r.r2 == "baaa");
  REQUIRE(r.r4.has_value());
  CHECK(*r.r4 == "ba");

  r = envelope_return_words({SequenceId::Theta2, 1, 1});
  CHECK(r.r0 == "");
  CHECK(r.r1 == "ab");
  CHECK(r.r2 == "ac");
  CHECK_FALSE(r.r4.has_value());

  r = envelope_return_words({SequenceId::Theta2, 2, 1});
  CHECK(r.r0 == "ab");
  CHECK(r.r1 == "ac");
  CHECK(r.r2 == "acababab");
  REQUIRE(r.r4.has_value());
  CHECK(*r.r4 == "acab");

  // Non-base rows are tau images of the D rows one index down.
  r = envelope_return_words({SequenceId::Theta1, 1, 2});
  CHECK(r.r1 == tau1()(block(BlockKind::A, 2)));
  r = envelope_return_words({SequenceId::Theta2, 1, 2});
  CHECK(r.r1 == tau2()(block(BlockKind::A, 1)));
  CHECK(r.r0 == "");
}

TEST_CASE("envelope return words match brute-force extraction") {
  for (SequenceId s : {SequenceId::D, SequenceId::Theta1, SequenceId::Theta2}) {
    for (int type : {1, 2}) {
      for (int m = 1; m <= 3; ++m) {
        EnvelopeId id{s, type, m};
        EnvelopeReturnWords closed = envelope_return_words(id);
        ReturnWords brute = return_words(s, envelope_word(id), 4);
        CHECK(closed.r0 == brute.r0);
        CHECK(closed.r1 == brute.returns[0]);
        CHECK(closed.r2 == brute.returns[1]);
        if (type == 2) {
          REQUIRE(closed.r4.has_value());
          CHECK(*closed.r4 == brute.returns[3]);
          CHECK(brute.returns[2] == brute.returns[0]);  // Theta2 starts abac
        } else {
          CHECK(brute.returns[2] == brute.returns[1]);  // Theta1 starts abba
          CHECK(brute.returns[3] == brute.returns[0]);
        }
      }
    }
  }
}

TEST_CASE("transported return words: frozen rows") {
  // D, w = b: envelope aba at offset 1.
  EnvelopeReturnWords t = transported_return_words(SequenceId::D, "b");
  CHECK(t.r0 == "a");
  CHECK(t.r1 == "baaa");
  CHECK(t.r2 == "ba");
  CHECK_FALSE(t.r4.has_value());

  // D, w = aa: envelope aa at offset 0 (transport is the identity).
  t = transported_return_words(SequenceId::D, "aa");
  CHECK(t.r0 == "ab");
  CHECK(t.r1 == "a");
  CHECK(t.r2 == "aababab");
  REQUIRE(t.r4.has_value());
  CHECK(*t.r4 == "aab");

  // Theta2, w = ababa: envelope ababa at offset 0.
  t = transported_return_words(SequenceId::Theta2, "ababa");
  CHECK(t.r0 == "abacac");
  CHECK(t.r1 == "ab");
  CHECK(t.r2 == "ababacacabacacabacac");
  REQUIRE(t.r4.has_value());
  CHECK(*t.r4 == "ababacac");
}

TEST_CASE("classify: frozen rows") {
  ReturnClassification c = classify(SequenceId::D, "aa", 16);
  CHECK(c.kind == ThetaKind::Theta2);
  CHECK(c.r0 == "ab");
  CHECK(c.alphabet.at('a') == "a");
  CHECK(c.alphabet.at('b') == "aababab");
  CHECK(c.alphabet.at('c') == "aab");
  CHECK(c.verified_tokens == 16);

  c = classify(SequenceId::D, "aba", 16);
  CHECK(c.kind == ThetaKind::Theta1);
  CHECK(c.alphabet.at('a') == "abaa");
  CHECK(c.alphabet.at('b') == "ab");
  CHECK(c.alphabet.count('c') == 0);

  c = classify(SequenceId::Theta2, "aba", 16);
  CHECK(c.kind == ThetaKind::Theta1);
  CHECK(c.alphabet.at('a') == "abacac");
  CHECK(c.alphabet.at('b') == "ab");

  c = classify(SequenceId::Theta1, "a", 16);
  CHECK(c.kind == ThetaKind::Theta1);
  CHECK(c.r0 == "");
  CHECK(c.alphabet.at('a') == "abb");
  CHECK(c.alphabet.at('b') == "a");

  CHECK_THROWS_AS(classify(SequenceId::D, "a", 0), InvalidIndex);
  CHECK_THROWS_AS(classify(SequenceId::D, "bb", 16), NotAFactor);
}

TEST_CASE("block alphabet identities") {
  for (int m = 1; m <= 4; ++m) {
    CHECK(verify_block_alphabets(m, 4));
  }
  CHECK_THROWS_AS(verify_block_alphabets(0, 3), InvalidIndex);
}
