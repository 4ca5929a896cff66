#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

#include "pdw/error.hpp"

namespace pdw {

/** Words are plain ASCII strings over the letters 'a', 'b', 'c'.
 * All public indices are 1-based: slice(w, i, j) = w_i w_{i+1} ... w_j. */
using Word = std::string;

inline bool is_letter(char ch) { return ch == 'a' || ch == 'b' || ch == 'c'; }

/** Throws MalformedWord unless every letter of w belongs to `alphabet`.
 * `what` names the offending argument in the error message. */
inline void require_letters(std::string_view w, std::string_view alphabet,
                            std::string_view what) {
  for (char ch : w) {
    if (alphabet.find(ch) == std::string_view::npos) {
      throw MalformedWord(std::string(what) + ": letter '" +
                          std::string(1, ch) + "' outside alphabet {" +
                          std::string(alphabet) + "}");
    }
  }
}

/** Throws MalformedWord if w is empty; factors are nonempty by convention. */
inline void require_nonempty(std::string_view w, std::string_view what) {
  if (w.empty()) {
    throw MalformedWord(std::string(what) + ": empty word is not a factor");
  }
}

/** 1-based inclusive slice w[i..j]; returns the empty word when j < i.
 * Bounds: 1 <= i and j <= |w| whenever the slice is nonempty. */
inline Word slice(std::string_view w, std::size_t i, std::size_t j) {
  if (j < i) return Word();
  if (i < 1 || j > w.size()) {
    throw InvalidIndex("slice: range [" + std::to_string(i) + ", " +
                       std::to_string(j) + "] outside word of length " +
                       std::to_string(w.size()));
  }
  return Word(w.substr(i - 1, j - i + 1));
}

/** Letter reversal: mirror(x_1 ... x_n) = x_n ... x_1. */
inline Word mirror(std::string_view w) {
  return Word(w.rbegin(), w.rend());
}

inline bool is_palindrome(std::string_view w) {
  return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

/** Letterwise swap a <-> b. Defined only over {a, b}. */
inline Word bar(std::string_view w) {
  require_letters(w, "ab", "bar");
  Word out(w);
  for (char& ch : out) ch = (ch == 'a') ? 'b' : 'a';
  return out;
}

}  // namespace pdw
