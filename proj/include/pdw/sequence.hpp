#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pdw/error.hpp"
#include "pdw/morphism.hpp"
#include "pdw/word.hpp"

namespace pdw {

/** The three sequences the library reasons about:
 *  D      is the period-doubling sequence, fixed point of sigma from 'a';
 *  Theta1 is tau1(D), over {a, b};
 *  Theta2 is tau2(D), over {a, b, c}. */
enum class SequenceId { D, Theta1, Theta2 };

enum class BlockKind { A, B };

inline std::string to_string(SequenceId s) {
  switch (s) {
    case SequenceId::D: return "D";
    case SequenceId::Theta1: return "Theta1";
    case SequenceId::Theta2: return "Theta2";
  }
  throw InvalidIndex("to_string: bad SequenceId");
}

/** Accepts the short tags D, T1, T2 and the long names Theta1, Theta2. */
inline SequenceId parse_sequence(std::string_view tag) {
  if (tag == "D" || tag == "d") return SequenceId::D;
  if (tag == "T1" || tag == "Theta1" || tag == "theta1") return SequenceId::Theta1;
  if (tag == "T2" || tag == "Theta2" || tag == "theta2") return SequenceId::Theta2;
  throw InvalidIndex("parse_sequence: unknown tag '" + std::string(tag) +
                     "' (expected D, T1 or T2)");
}

inline std::string_view alphabet(SequenceId s) {
  return s == SequenceId::Theta2 ? "abc" : "ab";
}

/** Throws MalformedWord unless w is a nonempty word over s's alphabet. */
inline void require_factor_shape(SequenceId s, std::string_view w) {
  require_nonempty(w, "factor of " + to_string(s));
  require_letters(w, alphabet(s), "factor of " + to_string(s));
}

/** delta_m: 'a' when m is even, 'b' when m is odd; equals the last letter
 * of block(A, m). */
inline char delta(int m) {
  if (m < 0) throw InvalidIndex("delta: m must be >= 0");
  return m % 2 == 0 ? 'a' : 'b';
}

/** A_m = sigma^m(a), B_m = sigma^m(b); |A_m| = |B_m| = 2^m.
 * Built by the doubling recurrences A_{m+1} = A_m B_m, B_{m+1} = A_m A_m
 * rather than repeated rewriting, so the cost is linear in the output. */
inline Word block(BlockKind kind, int m) {
  if (m < 0) throw InvalidIndex("block: m must be >= 0");
  Word a = "a";
  Word b = "b";
  for (int i = 0; i < m; ++i) {
    Word next_a = a + b;
    b = a + a;
    a = std::move(next_a);
  }
  return kind == BlockKind::A ? a : b;
}

/** First n letters of the chosen sequence.
 * prefix(D, 2^m) = A_m; the Theta prefixes are the truncated tau images of a
 * D prefix of the same length (tau images never shrink a word). */
inline Word prefix(SequenceId s, std::size_t n) {
  if (n == 0) return Word();
  Word a = "a";
  Word b = "b";
  while (a.size() < n) {
    Word next_a = a + b;
    b = a + a;
    a = std::move(next_a);
  }
  a.resize(n);
  if (s == SequenceId::D) return a;
  Word image = (s == SequenceId::Theta1) ? tau1()(a) : tau2()(a);
  image.resize(n);
  return image;
}

}  // namespace pdw
