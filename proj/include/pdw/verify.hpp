#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdw/envelope.hpp"
#include "pdw/error.hpp"
#include "pdw/factor_index.hpp"
#include "pdw/morphism.hpp"
#include "pdw/return_sequence.hpp"
#include "pdw/sequence.hpp"
#include "pdw/spectrum.hpp"
#include "pdw/word.hpp"

/** Property suites and their naive oracles.
 *
 * Everything in this header re-derives results through deliberately simple
 * scans (quadratic matching, raw position arithmetic) and compares them with
 * the closed forms the library exposes. The CLI `verify` command and the
 * acceptance runner are thin drivers over these functions. */
namespace pdw::verify {

enum class Status { Pass, Fail, Skip };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skipped";
  }
  throw InvalidIndex("to_string: bad Status");
}

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

inline CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), Status::Pass, std::move(detail)};
}

inline CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), Status::Fail, std::move(detail)};
}

// ---------------------------------------------------------------------------
// Naive oracles. Quadratic on purpose; they share no code with the matcher
// they are checking.
// ---------------------------------------------------------------------------

inline std::vector<std::size_t> naive_find_all(std::string_view text,
                                               std::string_view pattern) {
  std::vector<std::size_t> out;
  if (pattern.empty() || text.size() < pattern.size()) return out;
  for (std::size_t q = 0; q + pattern.size() <= text.size(); ++q) {
    if (text.compare(q, pattern.size(), pattern) == 0) out.push_back(q + 1);
  }
  return out;
}

/** All square occurrences (root, 1-based position) in `text`, every root
 * length, by direct comparison. Ordered by root length, then position. */
inline std::vector<std::pair<Word, std::size_t>> naive_squares(
    std::string_view text) {
  std::vector<std::pair<Word, std::size_t>> out;
  for (std::size_t len = 1; 2 * len <= text.size(); ++len) {
    for (std::size_t q = 0; q + 2 * len <= text.size(); ++q) {
      if (text.compare(q, len, text.substr(q + len, len)) == 0) {
        out.emplace_back(Word(text.substr(q, len)), q + 1);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generation and block identities.
// ---------------------------------------------------------------------------

/** sigma fixes D: the image of each power-of-two prefix is the next one. */
inline CheckResult check_fixed_point(int k_max) {
  if (!sigma().prolongable_on('a')) {
    return fail("fixed-point", "sigma is not prolongable on 'a'");
  }
  for (int k = 0; k <= k_max; ++k) {
    const std::size_t n = std::size_t{1} << k;
    Word p = prefix(SequenceId::D, n);
    Word image = sigma()(p);
    if (image.size() != 2 * n || image != prefix(SequenceId::D, 2 * n) ||
        image.compare(0, n, p) != 0) {
      return fail("fixed-point",
                  "sigma image of D[1.." + std::to_string(n) + "] diverged");
    }
  }
  return pass("fixed-point", "sigma(D[1..2^k]) = D[1..2^(k+1)] for k <= " +
                                 std::to_string(k_max));
}

/** |A_m| = 2^m, last letters, the shared-interior identity
 * A_m minus last = B_m minus last, and A_m = a B_0 B_1 ... B_{m-1}. */
inline CheckResult check_block_identities(int m_max) {
  Word product = "a";
  for (int m = 0; m <= m_max; ++m) {
    Word a = block(BlockKind::A, m);
    Word b = block(BlockKind::B, m);
    const std::size_t len = std::size_t{1} << m;
    if (a.size() != len || b.size() != len) {
      return fail("block-identities", "length != 2^m at m=" + std::to_string(m));
    }
    if (a.back() != delta(m) || b.back() != delta(m + 1)) {
      return fail("block-identities", "last letter != delta at m=" + std::to_string(m));
    }
    if (a.compare(0, len - 1, b, 0, len - 1) != 0) {
      return fail("block-identities", "A_m and B_m differ before the last letter at m=" + std::to_string(m));
    }
    if (a != product) {
      return fail("block-identities", "A_m != a B_0...B_{m-1} at m=" + std::to_string(m));
    }
    product += b;
  }
  return pass("block-identities", "lengths, last letters, shared interior and"
              " the product form agree for m <= " + std::to_string(m_max));
}

/** The Theta prefixes equal raw letterwise expansion of the D prefix. */
inline CheckResult check_theta_consistency(std::size_t n) {
  Word d = prefix(SequenceId::D, n);
  Word t1, t2;
  t1.reserve(2 * n);
  t2.reserve(4 * n);
  for (char ch : d) {
    t1 += (ch == 'a') ? "a" : "bb";
    t2 += (ch == 'a') ? "ab" : "acac";
  }
  t1.resize(n);
  t2.resize(n);
  if (t1 != prefix(SequenceId::Theta1, n)) {
    return fail("theta-prefix-consistency", "Theta1 prefix diverged");
  }
  if (t2 != prefix(SequenceId::Theta2, n)) {
    return fail("theta-prefix-consistency", "Theta2 prefix diverged");
  }
  return pass("theta-prefix-consistency",
              "letterwise expansion matches at n = " + std::to_string(n));
}

/** Local letter constraints: D never contains bb; Theta2 never contains aa,
 * and every b or c in Theta2 is followed by a. */
inline CheckResult check_letter_constraints(std::size_t n) {
  Word d = prefix(SequenceId::D, n);
  if (!find_all(d, "bb").empty()) {
    return fail("letter-constraints", "bb occurs in D");
  }
  Word t2 = prefix(SequenceId::Theta2, n);
  if (!find_all(t2, "aa").empty()) {
    return fail("letter-constraints", "aa occurs in Theta2");
  }
  for (std::size_t q = 0; q + 1 < t2.size(); ++q) {
    if ((t2[q] == 'b' || t2[q] == 'c') && t2[q + 1] != 'a') {
      return fail("letter-constraints",
                  "letter at Theta2 position " + std::to_string(q + 1) +
                      " is not followed by a");
    }
  }
  return pass("letter-constraints",
              "bb-free D, aa-free Theta2, b/c always followed by a, n = " +
                  std::to_string(n));
}

/** mirror and bar are involutions; palindromes agree with their mirror. */
inline CheckResult check_mirror_bar_involutions(std::size_t horizon,
                                                std::size_t samples) {
  if (mirror("abaa") != "aaba" || !mirror("").empty() ||
      mirror("abaaaba") != "abaaaba" || bar("aba") != "bab" ||
      bar("aa") != "bb" || !bar("").empty() || !is_palindrome("ababa") ||
      is_palindrome("ab") || !is_palindrome("aa")) {
    return fail("mirror-bar-involutions", "a frozen example failed");
  }
  Word d = prefix(SequenceId::D, horizon);
  Word t2 = prefix(SequenceId::Theta2, horizon);
  std::mt19937 rng(12345);
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t len = 1 + rng() % 64;
    std::size_t q = rng() % (horizon - len);
    Word u = d.substr(q, len);
    Word v = t2.substr(q, len);
    if (mirror(mirror(u)) != u || bar(bar(u)) != u ||
        mirror(mirror(v)) != v ||
        is_palindrome(u) != (u == mirror(u))) {
      return fail("mirror-bar-involutions", "involution failed on sample");
    }
  }
  return pass("mirror-bar-involutions",
              std::to_string(samples) + " samples plus frozen examples");
}

/** The linear-time matcher agrees with the quadratic scan. */
inline CheckResult check_matcher_vs_naive(std::size_t horizon,
                                          std::size_t samples) {
  const SequenceId seqs[] = {SequenceId::D, SequenceId::Theta1,
                             SequenceId::Theta2};
  Word texts[3];
  for (int i = 0; i < 3; ++i) texts[i] = prefix(seqs[i], horizon);

  std::mt19937 rng(54321);
  for (std::size_t i = 0; i < samples; ++i) {
    const Word& text = texts[i % 3];
    std::size_t len = 1 + rng() % 64;
    std::size_t q = rng() % (horizon - len);
    Word w = text.substr(q, len);
    if (find_all(text, w) != naive_find_all(text, w)) {
      return fail("matcher-vs-naive", "disagreement on '" + w + "'");
    }
  }
  return pass("matcher-vs-naive", std::to_string(samples) +
                                      " sampled factors over three sequences");
}

/** r_0 r_1 ... r_k rebuilds a sequence prefix and |r_p| matches the
 * occurrence gaps, for every factor up to max_len in all three sequences. */
inline CheckResult check_return_reconstruction(std::size_t max_len,
                                               std::size_t k) {
  const std::size_t enum_horizon = std::size_t{1} << 14;
  std::size_t factors = 0;
  for (SequenceId s : {SequenceId::D, SequenceId::Theta1, SequenceId::Theta2}) {
    for (const Word& w :
         distinct_factors(prefix(s, enum_horizon), 1, max_len)) {
      OccurrenceList occ = occurrences(s, w, k + 1);
      ReturnWords rw = return_words(s, w, k);
      Word rebuilt = rw.r0;
      for (std::size_t p = 0; p < k; ++p) {
        if (rw.returns[p].size() !=
            occ.positions[p + 1] - occ.positions[p]) {
          return fail("return-reconstruction",
                      to_string(s) + " '" + w + "': |r_" +
                          std::to_string(p + 1) + "| != occurrence gap");
        }
        rebuilt += rw.returns[p];
      }
      if (rebuilt != prefix(s, rebuilt.size())) {
        return fail("return-reconstruction",
                    to_string(s) + " '" + w +
                        "': r_0 r_1 ... r_k is not a sequence prefix");
      }
      ++factors;
    }
  }
  return pass("return-reconstruction",
              std::to_string(factors) + " factors, length <= " +
                  std::to_string(max_len) + ", k = " + std::to_string(k));
}

/** A_m occurs exactly twice in A_m A_m and in A_m B_m A_m. */
inline CheckResult check_block_occurrence_counts(int m_max) {
  for (int m = 0; m <= m_max; ++m) {
    Word a = block(BlockKind::A, m);
    Word b = block(BlockKind::B, m);
    if (find_all(a + a, a).size() != 2) {
      return fail("block-occurrence-counts",
                  "A_m count in A_mA_m != 2 at m=" + std::to_string(m));
    }
    if (find_all(a + b + a, a).size() != 2) {
      return fail("block-occurrence-counts",
                  "A_m count in A_mB_mA_m != 2 at m=" + std::to_string(m));
    }
  }
  return pass("block-occurrence-counts",
              "exactly two occurrences each for m <= " + std::to_string(m_max));
}

/** The block-alphabet substitution identities behind the classification. */
inline CheckResult check_block_alphabets(int m_max, int n_max) {
  for (int m = 1; m <= m_max; ++m) {
    if (!verify_block_alphabets(m, n_max)) {
      return fail("block-alphabets", "identity failed at m=" + std::to_string(m));
    }
  }
  return pass("block-alphabets", "both alphabets, m <= " +
                                     std::to_string(m_max) + ", n <= " +
                                     std::to_string(n_max));
}

// ---------------------------------------------------------------------------
// Envelope structure.
// ---------------------------------------------------------------------------

/** E_{m+1}^1 = E_m^1 d E_m^1 and E_{m+1}^2 = E_m^1 d E_m^1 d E_m^1 with
 * d = delta_m. */
inline CheckResult check_envelope_recursion(int m_max) {
  for (int m = 1; m <= m_max; ++m) {
    Word e1 = envelope_word({SequenceId::D, 1, m});
    Word d(1, delta(m));
    if (envelope_word({SequenceId::D, 1, m + 1}) != e1 + d + e1) {
      return fail("envelope-recursion", "type 1 recursion failed at m=" + std::to_string(m));
    }
    if (envelope_word({SequenceId::D, 2, m + 1}) != e1 + d + e1 + d + e1) {
      return fail("envelope-recursion", "type 2 recursion failed at m=" + std::to_string(m));
    }
  }
  return pass("envelope-recursion", "both recursions for m <= " + std::to_string(m_max));
}

/** |E_m^1| = 2^m - 1 and |E_m^2| = 3*2^(m-1) - 1; all lengths odd except
 * the type-2 m=1 envelope of length 2. */
inline CheckResult check_envelope_lengths(int m_max) {
  for (int m = 1; m <= m_max; ++m) {
    const std::size_t half = std::size_t{1} << (m - 1);
    std::size_t len1 = envelope_word({SequenceId::D, 1, m}).size();
    std::size_t len2 = envelope_word({SequenceId::D, 2, m}).size();
    if (len1 != 2 * half - 1 || len2 != 3 * half - 1) {
      return fail("envelope-lengths", "length formula failed at m=" + std::to_string(m));
    }
    if (len1 % 2 == 0 || (m > 1 && len2 % 2 == 0)) {
      return fail("envelope-lengths", "unexpected even length at m=" + std::to_string(m));
    }
  }
  return pass("envelope-lengths", "2^m-1 and 3*2^(m-1)-1 for m <= " + std::to_string(m_max));
}

/** Every D envelope word is a palindrome. */
inline CheckResult check_envelope_palindromes(int m_max) {
  for (int m = 1; m <= m_max; ++m) {
    for (int type : {1, 2}) {
      if (!is_palindrome(envelope_word({SequenceId::D, type, m}))) {
        return fail("envelope-palindromes",
                    "not a palindrome: type " + std::to_string(type) +
                        ", m=" + std::to_string(m));
      }
    }
  }
  return pass("envelope-palindromes", "both types for m <= " + std::to_string(m_max));
}

/** E_n^1 d_m E_k^1 is a palindrome exactly when n - k = 1 and m = k mod 2,
 * in which case it equals E_n^2. */
inline CheckResult check_palindrome_joins(int n_max, int m_max) {
  for (int n = 2; n <= n_max; ++n) {
    Word en = envelope_word({SequenceId::D, 1, n});
    for (int k = 1; k < n; ++k) {
      Word ek = envelope_word({SequenceId::D, 1, k});
      for (int m = 0; m <= m_max; ++m) {
        Word joined = en + delta(m) + ek;
        bool expected = (n - k == 1) && (m % 2 == k % 2);
        if (is_palindrome(joined) != expected) {
          return fail("palindrome-joins",
                      "predicate failed at n=" + std::to_string(n) +
                          " k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
        if (expected && joined != envelope_word({SequenceId::D, 2, n})) {
          return fail("palindrome-joins",
                      "palindromic join != type-2 envelope at n=" +
                          std::to_string(n));
        }
      }
    }
  }
  return pass("palindrome-joins",
              "n-k = 1 and parity match, n <= " + std::to_string(n_max) +
                  ", m <= " + std::to_string(m_max));
}

/** Separator words of the envelope decomposition follow the parity rule:
 * the lower envelope when n is even, its bar image when n is odd. */
inline CheckResult check_decompose_parity(int m_max) {
  for (int type : {1, 2}) {
    for (int m = 2; m <= m_max; ++m) {
      for (int n = 1; n < m; ++n) {
        Decomposition dec = decompose(type, m, n);
        Word base = envelope_word({SequenceId::D, type, m - n});
        Word expected = (n % 2 == 0) ? base : bar(base);
        if (dec.separators != expected || dec.copies != base.size() + 1) {
          return fail("envelope-decomposition",
                      "parity rule failed at type " + std::to_string(type) +
                          " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
      }
    }
  }
  return pass("envelope-decomposition",
              "separators follow the parity rule for m <= " + std::to_string(m_max));
}

/** The palindromic proper prefixes of an envelope word are exactly the
 * type-1 envelope words below it. */
inline CheckResult check_palindromic_prefixes(int m_max) {
  for (int type : {1, 2}) {
    for (int m = 1; m <= m_max; ++m) {
      std::vector<Word> got = palindromic_prefixes({SequenceId::D, type, m});
      std::vector<Word> expected;
      int top = (type == 1) ? m - 1 : m;
      for (int n = 1; n <= top; ++n) {
        expected.push_back(envelope_word({SequenceId::D, 1, n}));
      }
      if (got != expected) {
        return fail("palindromic-prefixes",
                    "prefix list mismatch at type " + std::to_string(type) +
                        ", m=" + std::to_string(m));
      }
    }
  }
  return pass("palindromic-prefixes",
              "exactly the lower type-1 envelopes for m <= " + std::to_string(m_max));
}

// ---------------------------------------------------------------------------
// Golden tables.
// ---------------------------------------------------------------------------

inline CheckResult check_block_table() {
  const Word a_blocks[] = {"a", "ab", "abaa", "abaaabab", "abaaabababaaabaa"};
  const Word b_blocks[] = {"b", "aa", "abab", "abaaabaa", "abaaabababaaabab"};
  for (int m = 0; m <= 4; ++m) {
    if (block(BlockKind::A, m) != a_blocks[m] ||
        block(BlockKind::B, m) != b_blocks[m]) {
      return fail("block-table", "block mismatch at m=" + std::to_string(m));
    }
  }
  return pass("block-table", "A_m and B_m match for m <= 4");
}

inline CheckResult check_envelope_table_d() {
  const Word type1[] = {"a", "aba", "abaaaba", "abaaabababaaaba"};
  const Word type2[] = {"aa", "ababa", "abaaabaaaba", "abaaabababaaabababaaaba"};
  for (int m = 1; m <= 4; ++m) {
    if (envelope_word({SequenceId::D, 1, m}) != type1[m - 1] ||
        envelope_word({SequenceId::D, 2, m}) != type2[m - 1]) {
      return fail("envelope-table-d", "envelope mismatch at m=" + std::to_string(m));
    }
  }
  return pass("envelope-table-d",
              "m <= 4; the type-2 m=4 value is pinned to the 23-letter "
              "formula value B_4 B_3 minus the last letter (a 21-letter "
              "variant seen in transcriptions violates |E| = 3*2^(m-1)-1)");
}

inline CheckResult check_envelope_table_theta() {
  const Word t1_type1[] = {"a", "abba", "abbaaabba", "abbaaabbabbabbaaabba"};
  const Word t1_type2[] = {"b", "aa", "abbabba", "abbaaabbaaabba"};
  const Word t2_type1[] = {"a", "aba", "abacacaba", "abacacabababacacaba"};
  const Word t2_type2[] = {"aca", "ababa", "abacacabacacaba",
                           "abacacabababacacabababacacaba"};
  for (int m = 1; m <= 4; ++m) {
    if (envelope_word({SequenceId::Theta1, 1, m}) != t1_type1[m - 1] ||
        envelope_word({SequenceId::Theta1, 2, m}) != t1_type2[m - 1] ||
        envelope_word({SequenceId::Theta2, 1, m}) != t2_type1[m - 1] ||
        envelope_word({SequenceId::Theta2, 2, m}) != t2_type2[m - 1]) {
      return fail("envelope-table-theta", "envelope mismatch at m=" + std::to_string(m));
    }
  }
  return pass("envelope-table-theta",
              "m <= 4; the Theta1 type-1 m=4 value is the tau1 image of the "
              "base envelope (transcriptions with an isolated b cannot be "
              "tau1 images)");
}

/** Closed-form envelope return words (the golden return-word rows) match
 * brute-force extraction in all three sequences, and the token patterns
 * hold: type 1 has r4 = r1, type 2 has r3 = r1. */
inline CheckResult check_envelope_returns_table(int m_max) {
  for (SequenceId s : {SequenceId::D, SequenceId::Theta1, SequenceId::Theta2}) {
    for (int type : {1, 2}) {
      for (int m = 1; m <= m_max; ++m) {
        EnvelopeId id{s, type, m};
        EnvelopeReturnWords closed = envelope_return_words(id);
        ReturnWords brute = return_words(s, envelope_word(id), 4);
        bool ok = closed.r0 == brute.r0 && closed.r1 == brute.returns[0] &&
                  closed.r2 == brute.returns[1];
        if (type == 1) {
          ok = ok && !closed.r4 && brute.returns[3] == brute.returns[0];
        } else {
          ok = ok && closed.r4 && *closed.r4 == brute.returns[3] &&
               brute.returns[2] == brute.returns[0];
        }
        if (!ok) {
          return fail("envelope-returns-table",
                      "closed form != extraction for " + to_string(id));
        }
      }
    }
  }
  return pass("envelope-returns-table",
              "closed forms match extraction in D, Theta1, Theta2 for m <= " +
                  std::to_string(m_max));
}

/** Six pinned classification rows covering both kinds in all three
 * sequences. */
inline CheckResult check_example_rows() {
  struct Row {
    SequenceId seq;
    Word word;
    ThetaKind kind;
    Word r0, a, b, c;  // c empty when kind is Theta1
  };
  const Row rows[] = {
      {SequenceId::D, "a", ThetaKind::Theta1, "", "ab", "a", ""},
      {SequenceId::D, "aa", ThetaKind::Theta2, "ab", "a", "aababab", "aab"},
      {SequenceId::Theta1, "a", ThetaKind::Theta1, "", "abb", "a", ""},
      {SequenceId::Theta1, "aa", ThetaKind::Theta2, "abb", "a", "aabbabbabb",
       "aabb"},
      {SequenceId::Theta2, "aba", ThetaKind::Theta1, "", "abacac", "ab", ""},
      {SequenceId::Theta2, "ababa", ThetaKind::Theta2, "abacac", "ab",
       "ababacacabacacabacac", "ababacac"},
  };
  for (const Row& row : rows) {
    ReturnClassification c = classify(row.seq, row.word, 16);
    bool ok = c.kind == row.kind && c.r0 == row.r0 &&
              c.alphabet.at('a') == row.a && c.alphabet.at('b') == row.b;
    if (row.kind == ThetaKind::Theta2) {
      ok = ok && c.alphabet.at('c') == row.c;
    }
    if (!ok) {
      return fail("classification-examples",
                  to_string(row.seq) + " '" + row.word + "' mismatched");
    }
  }
  return pass("classification-examples", "all six pinned rows match");
}

// ---------------------------------------------------------------------------
// Envelope return word sequences (the two main classification statements).
// ---------------------------------------------------------------------------

/** Type-1 envelope words: the return word sequence spells Theta1 under
 * a -> A_m, b -> A_{m-1} with empty r0, and the first three positions obey
 * the closed form. */
inline CheckResult check_type1_envelope_returns(int m_max, std::size_t tokens) {
  for (int m = 1; m <= m_max; ++m) {
    EnvelopeId id{SequenceId::D, 1, m};
    Word env = envelope_word(id);
    ReturnClassification c = classify(SequenceId::D, env, tokens);
    if (c.kind != ThetaKind::Theta1 ||
        c.alphabet.at('a') != block(BlockKind::A, m) ||
        c.alphabet.at('b') != block(BlockKind::A, m - 1) || !c.r0.empty()) {
      return fail("type1-envelope-returns", "alphabet mismatch at m=" + std::to_string(m));
    }
    std::vector<std::size_t> expected = envelope_first_positions(id);
    OccurrenceList occ = occurrences(SequenceId::D, env, expected.size());
    occ.positions.resize(expected.size());
    if (occ.positions != expected) {
      return fail("type1-envelope-returns", "first positions mismatch at m=" + std::to_string(m));
    }
  }
  return pass("type1-envelope-returns",
              std::to_string(tokens) + " tokens verified for m <= " +
                  std::to_string(m_max));
}

/** Type-2 envelope words: Theta2 under a -> A_{m-1}, b -> A_{m-1} A_m
 * B_{m+1}, c -> B_m B_{m-1}, with r0 = A_m and the five-position closed
 * form. */
inline CheckResult check_type2_envelope_returns(int m_max, std::size_t tokens) {
  for (int m = 1; m <= m_max; ++m) {
    EnvelopeId id{SequenceId::D, 2, m};
    Word env = envelope_word(id);
    ReturnClassification c = classify(SequenceId::D, env, tokens);
    Word a = block(BlockKind::A, m);
    Word am1 = block(BlockKind::A, m - 1);
    if (c.kind != ThetaKind::Theta2 || c.alphabet.at('a') != am1 ||
        c.alphabet.at('b') != am1 + a + block(BlockKind::B, m + 1) ||
        c.alphabet.at('c') !=
            block(BlockKind::B, m) + block(BlockKind::B, m - 1) ||
        c.r0 != a) {
      return fail("type2-envelope-returns", "alphabet mismatch at m=" + std::to_string(m));
    }
    std::vector<std::size_t> expected = envelope_first_positions(id);
    OccurrenceList occ = occurrences(SequenceId::D, env, expected.size());
    occ.positions.resize(expected.size());
    if (occ.positions != expected) {
      return fail("type2-envelope-returns", "first positions mismatch at m=" + std::to_string(m));
    }
  }
  return pass("type2-envelope-returns",
              std::to_string(tokens) + " tokens verified for m <= " +
                  std::to_string(m_max));
}

// ---------------------------------------------------------------------------
// Envelope extension over whole factor sets.
// ---------------------------------------------------------------------------

/** Every factor occurs exactly once inside its envelope. */
inline CheckResult check_unique_occurrence_all(SequenceId s,
                                               std::size_t max_len,
                                               std::size_t horizon) {
  const std::string name = "unique-occurrence-" + to_string(s);
  std::size_t count = 0;
  for (const Word& w : distinct_factors(prefix(s, horizon), 1, max_len)) {
    if (!verify_unique_occurrence(s, w)) {
      return fail(name, "'" + w + "' occurs more than once in its envelope");
    }
    ++count;
  }
  return pass(name, std::to_string(count) + " factors, length <= " +
                        std::to_string(max_len));
}

/** Every occurrence of every factor extends to its envelope at a constant
 * offset. */
inline CheckResult check_strong_extension_all(SequenceId s,
                                              std::size_t max_len,
                                              std::size_t horizon,
                                              std::size_t p_max) {
  const std::string name = "strong-extension-" + to_string(s);
  std::size_t count = 0;
  for (const Word& w : distinct_factors(prefix(s, horizon), 1, max_len)) {
    if (!verify_strong_extension(s, w, p_max)) {
      return fail(name, "'" + w + "' broke the constant-offset extension");
    }
    ++count;
  }
  return pass(name, std::to_string(count) + " factors, " +
                        std::to_string(p_max) + " occurrences each");
}

/** Transported return words equal brute-force extraction (tokens 1, 2 and 4)
 * and keep the envelope-level lengths. */
inline CheckResult check_transport_consistency(SequenceId s,
                                               std::size_t max_len,
                                               std::size_t horizon) {
  const std::string name = "transport-consistency-" + to_string(s);
  std::size_t count = 0;
  for (const Word& w : distinct_factors(prefix(s, horizon), 1, max_len)) {
    EnvelopeFit fit = envelope_of(s, w);
    EnvelopeReturnWords trans = transported_return_words(s, w);
    EnvelopeReturnWords env_level = envelope_return_words(fit.env);
    ReturnWords brute = return_words(s, w, 4);
    bool ok = trans.r0 == brute.r0 && trans.r1 == brute.returns[0] &&
              trans.r2 == brute.returns[1] &&
              trans.r1.size() == env_level.r1.size() &&
              trans.r2.size() == env_level.r2.size();
    if (fit.env.type == 2) {
      ok = ok && trans.r4 && *trans.r4 == brute.returns[3] &&
           trans.r4->size() == env_level.r4->size();
    } else {
      ok = ok && !trans.r4;
    }
    if (!ok) return fail(name, "transport mismatch for '" + w + "'");
    ++count;
  }
  return pass(name, std::to_string(count) + " factors, length <= " +
                        std::to_string(max_len));
}

/** classify succeeds on every factor and the kind matches the envelope
 * type; any token mismatch throws and fails the check. */
inline CheckResult check_classification_all(SequenceId s, std::size_t max_len,
                                            std::size_t horizon,
                                            std::size_t tokens) {
  const std::string name = "classification-" + to_string(s);
  std::size_t count = 0;
  std::size_t kind1 = 0;
  for (const Word& w : distinct_factors(prefix(s, horizon), 1, max_len)) {
    ReturnClassification c = classify(s, w, tokens);
    bool type1 = envelope_of(s, w).env.type == 1;
    if ((c.kind == ThetaKind::Theta1) != type1) {
      return fail(name, "kind does not match envelope type for '" + w + "'");
    }
    if (type1) ++kind1;
    ++count;
  }
  return pass(name, std::to_string(count) + " factors (" +
                        std::to_string(kind1) + " spell Theta1, " +
                        std::to_string(count - kind1) + " spell Theta2), " +
                        std::to_string(tokens) + " tokens each");
}

// ---------------------------------------------------------------------------
// Occurrence spectrum.
// ---------------------------------------------------------------------------

/** The closed-form relation matches raw positional comparison for every
 * factor and every consecutive pair up to p_max. */
inline CheckResult check_spectrum_closed_vs_brute(std::size_t max_len,
                                                  std::size_t horizon,
                                                  std::size_t p_max) {
  std::size_t count = 0;
  std::size_t deferred = 0;
  for (const Word& w : distinct_factors(prefix(SequenceId::D, horizon), 1,
                                        max_len)) {
    std::vector<SpectrumVerdict> closed = relations_closed(w, 1, p_max);
    std::vector<SpectrumVerdict> brute =
        relations_brute(SequenceId::D, w, 1, p_max);
    if (closed.front().source == VerdictSource::BruteForce) ++deferred;
    for (std::size_t i = 0; i < closed.size(); ++i) {
      if (closed[i].relation != brute[i].relation) {
        return fail("spectrum-closed-vs-brute",
                    "'" + w + "' diverges at p=" + std::to_string(brute[i].p));
      }
    }
    ++count;
  }
  return pass("spectrum-closed-vs-brute",
              std::to_string(count) + " factors, p <= " +
                  std::to_string(p_max) + "; " + std::to_string(deferred) +
                  " with envelope index m <= 2 deferred to the positional "
                  "scan (closed form proved for m >= 3)");
}

/** Occurrences two or more apart never touch. */
inline CheckResult check_far_pairs(std::size_t samples, std::size_t p_max,
                                   std::size_t horizon) {
  std::vector<Word> factors =
      distinct_factors(prefix(SequenceId::D, horizon), 1, 64);
  std::size_t stride = std::max<std::size_t>(1, factors.size() / samples);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < factors.size() && checked < samples;
       i += stride) {
    if (!far_pairs_separated(factors[i], p_max)) {
      return fail("far-pairs-separated", "'" + factors[i] + "' has touching far pair");
    }
    ++checked;
  }
  return pass("far-pairs-separated",
              std::to_string(checked) + " factors, p_max = " +
                  std::to_string(p_max));
}

/** Lengths of two consecutive return words of an envelope word:
 * type 1 in {2^(m+1), 3*2^(m-1), 2^m}, type 2 in {2^(m+2), 2^(m+1)}. */
inline CheckResult check_pair_length_sets(int m_max, std::size_t pairs) {
  for (int m = 1; m <= m_max; ++m) {
    const std::size_t half = std::size_t{1} << (m - 1);
    for (int type : {1, 2}) {
      Word env = envelope_word({SequenceId::D, type, m});
      OccurrenceList occ = occurrences(SequenceId::D, env, pairs + 2);
      std::set<std::size_t> allowed =
          (type == 1) ? std::set<std::size_t>{4 * half, 3 * half, 2 * half}
                      : std::set<std::size_t>{8 * half, 4 * half};
      for (std::size_t p = 0; p < pairs; ++p) {
        std::size_t pair_len = occ.positions[p + 2] - occ.positions[p];
        if (!allowed.count(pair_len)) {
          return fail("pair-length-sets",
                      "type " + std::to_string(type) + " m=" +
                          std::to_string(m) + ": |r_p r_{p+1}| = " +
                          std::to_string(pair_len) + " outside the set");
        }
      }
    }
  }
  return pass("pair-length-sets",
              "type 1 within {2^(m+1), 3*2^(m-1), 2^m}, type 2 within "
              "{2^(m+2), 2^(m+1)}, m <= " + std::to_string(m_max));
}

/** Envelope index pins the factor length: type 1 with index m >= 3 means
 * 2^(m-2)+1 <= |w| <= 2^m - 1 and the (m-2)-nd type-1 envelope occurs in w;
 * type 2 means 2^(m-1)+1 <= |w| <= 3*2^(m-1) - 1 and w contains the
 * delta-flanked (m-1)-st type-1 envelope. */
inline CheckResult check_length_bounds(std::size_t max_len,
                                       std::size_t horizon) {
  std::size_t verified = 0;
  std::size_t small_env = 0;
  for (const Word& w : distinct_factors(prefix(SequenceId::D, horizon), 1,
                                        max_len)) {
    EnvelopeFit fit = envelope_of(SequenceId::D, w);
    const int m = fit.env.index;
    if (m <= 2) {
      ++small_env;
      continue;
    }
    const std::size_t quarter = std::size_t{1} << (m - 2);
    if (fit.env.type == 1) {
      Word core = envelope_word({SequenceId::D, 1, m - 2});
      if (w.size() < quarter + 1 || w.size() > 4 * quarter - 1 ||
          w.find(core) == Word::npos) {
        return fail("envelope-length-bounds", "type-1 bound failed for '" + w + "'");
      }
    } else {
      Word core = delta(m - 1) + envelope_word({SequenceId::D, 1, m - 1}) +
                  Word(1, delta(m - 1));
      if (w.size() < 2 * quarter + 1 || w.size() > 6 * quarter - 1 ||
          w.find(core) == Word::npos) {
        return fail("envelope-length-bounds", "type-2 bound failed for '" + w + "'");
      }
    }
    ++verified;
  }
  return pass("envelope-length-bounds",
              std::to_string(verified) + " factors verified; " +
                  std::to_string(small_env) +
                  " with envelope index m <= 2 outside the proved range");
}

/** The closed-form square census equals the quadratic scan, pair by pair. */
inline CheckResult check_square_census(std::size_t horizon) {
  std::vector<std::pair<Word, std::size_t>> closed = squares(horizon);
  std::vector<std::pair<Word, std::size_t>> naive =
      naive_squares(prefix(SequenceId::D, horizon));
  if (closed != naive) {
    return fail("square-census",
                "closed form lists " + std::to_string(closed.size()) +
                    " occurrences, the scan " + std::to_string(naive.size()));
  }
  bool has_abab = false;
  for (const auto& [w, q] : closed) {
    if (w == "ab" && q == 5) has_abab = true;
  }
  if (horizon >= 8 && !has_abab) {
    return fail("square-census", "the square abab at position 5 is missing");
  }
  return pass("square-census",
              std::to_string(closed.size()) + " square occurrences at horizon " +
                  std::to_string(horizon) + "; every root length is a power "
                  "of two");
}

/** Spot values for the cube scan: cubes exist (aaa at 3, ababab at 5,
 * bababa at 6) and tiny horizons hold none. */
inline CheckResult check_cube_census(std::size_t horizon) {
  if (!cubes_brute(2).empty()) {
    return fail("cube-census", "nonempty cube list at horizon 2");
  }
  std::vector<std::pair<Word, std::size_t>> cubes = cubes_brute(horizon);
  std::set<std::pair<Word, std::size_t>> got(cubes.begin(), cubes.end());
  for (const auto& expected :
       std::vector<std::pair<Word, std::size_t>>{{"a", 3}, {"ab", 5}, {"ba", 6}}) {
    if (!got.count(expected)) {
      return fail("cube-census", "missing cube root '" + expected.first +
                                     "' at " + std::to_string(expected.second));
    }
  }
  return pass("cube-census", std::to_string(cubes.size()) +
                                 " cube occurrences at horizon " +
                                 std::to_string(horizon));
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

/** Optional overrides for the per-suite defaults; the defaults reproduce
 * the library's acceptance parameters. */
struct Limits {
  std::optional<int> max_m;
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> tokens;
  std::optional<std::size_t> horizon;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "core",   "tables", "thm21",       "thm22",    "thm31",
      "thm32",  "thm41",  "reflexivity", "spectrum", "all"};
  return names;
}

namespace detail {

/** Runs one check, converting stray exceptions into failures. */
template <typename F>
inline void add_check(std::vector<CheckResult>& out, std::string_view name,
                      F&& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back(fail(std::string(name), std::string("exception: ") + e.what()));
  }
}

}  // namespace detail

inline std::vector<CheckResult> run_suite(std::string_view suite,
                                          const Limits& lim) {
  std::vector<CheckResult> out;
  auto add = [&out](std::string_view name, auto&& body) {
    detail::add_check(out, name, body);
  };
  const std::size_t big = lim.horizon.value_or(std::size_t{1} << 16);
  const std::size_t mid = lim.horizon.value_or(std::size_t{1} << 14);

  if (suite == "core" || suite == "all") {
    add("fixed-point", [&] { return check_fixed_point(lim.max_m.value_or(16)); });
    add("block-identities", [&] { return check_block_identities(lim.max_m.value_or(16)); });
    add("theta-prefix-consistency", [&] { return check_theta_consistency(big); });
    add("letter-constraints", [&] { return check_letter_constraints(big); });
    add("mirror-bar-involutions", [&] { return check_mirror_bar_involutions(mid, 200); });
    add("matcher-vs-naive", [&] { return check_matcher_vs_naive(mid, 500); });
    add("return-reconstruction", [&] {
      return check_return_reconstruction(lim.max_len.value_or(64), 200);
    });
    add("block-occurrence-counts", [&] { return check_block_occurrence_counts(lim.max_m.value_or(12)); });
    add("block-alphabets", [&] { return check_block_alphabets(std::min(lim.max_m.value_or(6), 10), 6); });
    add("envelope-recursion", [&] { return check_envelope_recursion(lim.max_m.value_or(14)); });
    add("envelope-lengths", [&] { return check_envelope_lengths(lim.max_m.value_or(14)); });
    add("envelope-palindromes", [&] { return check_envelope_palindromes(lim.max_m.value_or(12)); });
    add("palindrome-joins", [&] { return check_palindrome_joins(lim.max_m.value_or(10), lim.max_m.value_or(10)); });
    add("envelope-decomposition", [&] { return check_decompose_parity(lim.max_m.value_or(10)); });
    add("palindromic-prefixes", [&] { return check_palindromic_prefixes(lim.max_m.value_or(10)); });
  }
  if (suite == "tables" || suite == "all") {
    add("block-table", [&] { return check_block_table(); });
    add("envelope-table-d", [&] { return check_envelope_table_d(); });
    add("envelope-table-theta", [&] { return check_envelope_table_theta(); });
    add("envelope-returns-table", [&] { return check_envelope_returns_table(lim.max_m.value_or(4)); });
    add("classification-examples", [&] { return check_example_rows(); });
  }
  if (suite == "thm21" || suite == "all") {
    add("type1-envelope-returns", [&] {
      return check_type1_envelope_returns(lim.max_m.value_or(10),
                                          lim.tokens.value_or(512));
    });
  }
  if (suite == "thm22" || suite == "all") {
    add("type2-envelope-returns", [&] {
      return check_type2_envelope_returns(lim.max_m.value_or(8),
                                          lim.tokens.value_or(256));
    });
  }
  if (suite == "thm31" || suite == "all") {
    add("unique-occurrence-D", [&] {
      return check_unique_occurrence_all(SequenceId::D,
                                         lim.max_len.value_or(64), big);
    });
    add("unique-occurrence-Theta1", [&] {
      return check_unique_occurrence_all(SequenceId::Theta1,
                                         lim.max_len.value_or(32), big);
    });
    add("unique-occurrence-Theta2", [&] {
      return check_unique_occurrence_all(SequenceId::Theta2,
                                         lim.max_len.value_or(32), big);
    });
  }
  if (suite == "thm32" || suite == "all") {
    add("strong-extension-D", [&] {
      return check_strong_extension_all(SequenceId::D,
                                        lim.max_len.value_or(64), big, 50);
    });
    add("strong-extension-Theta1", [&] {
      return check_strong_extension_all(SequenceId::Theta1,
                                        lim.max_len.value_or(32), big, 50);
    });
    add("strong-extension-Theta2", [&] {
      return check_strong_extension_all(SequenceId::Theta2,
                                        lim.max_len.value_or(32), big, 50);
    });
  }
  if (suite == "thm41" || suite == "all") {
    add("transport-consistency-D", [&] {
      return check_transport_consistency(SequenceId::D,
                                         lim.max_len.value_or(64), big);
    });
    add("classification-D", [&] {
      return check_classification_all(SequenceId::D, lim.max_len.value_or(32),
                                      big, lim.tokens.value_or(128));
    });
  }
  if (suite == "reflexivity" || suite == "all") {
    if (suite != "all") {  // "tables" already covers these two under "all"
      add("envelope-returns-table", [&] { return check_envelope_returns_table(lim.max_m.value_or(4)); });
      add("classification-examples", [&] { return check_example_rows(); });
    }
    add("transport-consistency-Theta1", [&] {
      return check_transport_consistency(SequenceId::Theta1,
                                         lim.max_len.value_or(32), big);
    });
    add("transport-consistency-Theta2", [&] {
      return check_transport_consistency(SequenceId::Theta2,
                                         lim.max_len.value_or(32), big);
    });
    add("classification-Theta1", [&] {
      return check_classification_all(SequenceId::Theta1,
                                      lim.max_len.value_or(32), big,
                                      lim.tokens.value_or(128));
    });
    add("classification-Theta2", [&] {
      return check_classification_all(SequenceId::Theta2,
                                      lim.max_len.value_or(32), big,
                                      lim.tokens.value_or(128));
    });
  }
  if (suite == "spectrum" || suite == "all") {
    add("spectrum-closed-vs-brute", [&] {
      return check_spectrum_closed_vs_brute(lim.max_len.value_or(64), big,
                                            500);
    });
    add("far-pairs-separated", [&] { return check_far_pairs(200, 200, mid); });
    add("pair-length-sets", [&] {
      return check_pair_length_sets(lim.max_m.value_or(8), 200);
    });
    add("envelope-length-bounds", [&] {
      return check_length_bounds(lim.max_len.value_or(64), big);
    });
    add("square-census", [&] {
      return check_square_census(lim.horizon.value_or(4096));
    });
    add("cube-census", [&] { return check_cube_census(64); });
  }

  if (out.empty()) {
    throw InvalidIndex("run_suite: unknown suite '" + std::string(suite) +
                       "'");
  }
  return out;
}

}  // namespace pdw::verify
