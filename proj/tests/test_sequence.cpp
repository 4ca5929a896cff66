#include <catch_amalgamated.hpp>

#include "pdw/morphism.hpp"
#include "pdw/sequence.hpp"
#include "pdw/word.hpp"

using namespace pdw;

TEST_CASE("morphism images and application") {
  CHECK(sigma().image('a') == "ab");
  CHECK(sigma().image('b') == "aa");
  CHECK(tau1().image('b') == "bb");
  CHECK(tau2().image('b') == "acac");
  CHECK(apply_morphism(sigma(), "ab") == "abaa");
  CHECK(apply_morphism(sigma(), "") == "");
  CHECK(sigma()("aba") == "abaaab");
  CHECK_THROWS_AS(sigma().image('c'), UnknownLetter);
  CHECK_THROWS_AS(apply_morphism(tau1(), "abc"), UnknownLetter);
  CHECK(sigma().prolongable_on('a'));
  CHECK_FALSE(sigma().prolongable_on('b'));
}

TEST_CASE("blocks match the doubling recursion") {
  CHECK(block(BlockKind::A, 0) == "a");
  CHECK(block(BlockKind::B, 0) == "b");
  CHECK(block(BlockKind::A, 1) == "ab");
  CHECK(block(BlockKind::B, 1) == "aa");
  CHECK(block(BlockKind::A, 2) == "abaa");
  CHECK(block(BlockKind::B, 2) == "abab");
  CHECK(block(BlockKind::A, 3) == "abaaabab");
  CHECK(block(BlockKind::B, 3) == "abaaabaa");
  CHECK(block(BlockKind::A, 4) == "abaaabababaaabaa");
  CHECK(block(BlockKind::B, 4) == "abaaabababaaabab");
  for (int m = 0; m <= 10; ++m) {
    Word a = block(BlockKind::A, m);
    Word b = block(BlockKind::B, m);
    CHECK(block(BlockKind::A, m + 1) == a + b);
    CHECK(block(BlockKind::B, m + 1) == a + a);
    CHECK(block(BlockKind::A, m + 1) == apply_morphism(sigma(), a));
    CHECK(block(BlockKind::B, m + 1) == apply_morphism(sigma(), b));
  }
  CHECK_THROWS_AS(block(BlockKind::A, -1), InvalidIndex);
}

TEST_CASE("delta alternates") {
  CHECK(delta(0) == 'a');
  CHECK(delta(1) == 'b');
  CHECK(delta(2) == 'a');
  CHECK(delta(7) == 'b');
  CHECK_THROWS_AS(delta(-1), InvalidIndex);
}

TEST_CASE("prefix generation") {
  CHECK(prefix(SequenceId::D, 0) == "");
  CHECK(prefix(SequenceId::D, 1) == "a");
  CHECK(prefix(SequenceId::D, 8) == "abaaabab");
  CHECK(prefix(SequenceId::D, 16) == "abaaabababaaabaa");
  CHECK(prefix(SequenceId::Theta1, 8) == "abbaaabb");
  CHECK(prefix(SequenceId::Theta2, 12) == "abacacababab");
  // Prefixes are consistent under extension.
  Word long_d = prefix(SequenceId::D, 4096);
  CHECK(prefix(SequenceId::D, 1000) == long_d.substr(0, 1000));
  Word long_t2 = prefix(SequenceId::Theta2, 4096);
  CHECK(prefix(SequenceId::Theta2, 333) == long_t2.substr(0, 333));
}

TEST_CASE("sequence tags and alphabets") {
  CHECK(parse_sequence("D") == SequenceId::D);
  CHECK(parse_sequence("d") == SequenceId::D);
  CHECK(parse_sequence("T1") == SequenceId::Theta1);
  CHECK(parse_sequence("Theta1") == SequenceId::Theta1);
  CHECK(parse_sequence("theta2") == SequenceId::Theta2);
  CHECK_THROWS_AS(parse_sequence("X"), InvalidIndex);
  CHECK(alphabet(SequenceId::D) == "ab");
  CHECK(alphabet(SequenceId::Theta2) == "abc");
  CHECK(to_string(SequenceId::Theta1) == "Theta1");
}

TEST_CASE("word utilities") {
  CHECK(slice("abcde", 2, 4) == "bcd");
  CHECK(slice("abcde", 3, 2) == "");
  CHECK(slice("abcde", 1, 5) == "abcde");
  CHECK_THROWS_AS(slice("abc", 0, 2), InvalidIndex);
  CHECK_THROWS_AS(slice("abc", 1, 4), InvalidIndex);
  CHECK(mirror("abaa") == "aaba");
  CHECK(bar("aba") == "bab");
  CHECK_THROWS_AS(bar("abc"), MalformedWord);
  CHECK(is_palindrome(""));
  CHECK(is_palindrome("aba"));
  CHECK_FALSE(is_palindrome("ab"));
  CHECK_THROWS_AS(require_factor_shape(SequenceId::D, "abc"), MalformedWord);
  CHECK_THROWS_AS(require_factor_shape(SequenceId::D, ""), MalformedWord);
  CHECK_NOTHROW(require_factor_shape(SequenceId::Theta2, "abc"));
}
