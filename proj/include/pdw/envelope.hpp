#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "pdw/error.hpp"
#include "pdw/factor_index.hpp"
#include "pdw/sequence.hpp"
#include "pdw/word.hpp"

namespace pdw {

/** Names one envelope word: type 1 or 2, index m >= 1, in one sequence.
 * Within a sequence the family is totally ordered:
 * (type 1, m) before (type 2, m) before (type 1, m+1). */
struct EnvelopeId {
  SequenceId seq = SequenceId::D;
  int type = 1;   // 1 or 2
  int index = 1;  // m >= 1

  friend bool operator==(const EnvelopeId&, const EnvelopeId&) = default;
};

inline void require_envelope_id(const EnvelopeId& id) {
  if (id.type != 1 && id.type != 2) {
    throw InvalidIndex("envelope type must be 1 or 2, got " +
                       std::to_string(id.type));
  }
  if (id.index < 1) {
    throw InvalidIndex("envelope index must be >= 1, got " +
                       std::to_string(id.index));
  }
}

/** Successor in the envelope order within the same sequence. */
inline EnvelopeId next_envelope(EnvelopeId id) {
  require_envelope_id(id);
  if (id.type == 1) {
    id.type = 2;
  } else {
    id.type = 1;
    ++id.index;
  }
  return id;
}

inline std::string to_string(const EnvelopeId& id) {
  return to_string(id.seq) + ":E(" + std::to_string(id.type) + "," +
         std::to_string(id.index) + ")";
}

/** The m-th envelope word of the given type.
 *
 * For D:      E_m^1 = A_m minus its last letter (length 2^m - 1),
 *             E_m^2 = B_m B_{m-1} minus its last letter (length 3*2^(m-1)-1).
 * For Theta1: tau1 images of the D envelopes, except the m=1 type-2 base
 *             case "b"; the type-2 family is shifted down one index.
 * For Theta2: tau2 images with a trailing 'a', plus the m=1 base cases.
 * Every length is odd except |E_1^2| = 2. */
inline Word envelope_word(const EnvelopeId& id) {
  require_envelope_id(id);
  const int m = id.index;
  auto d_envelope = [](int type, int mm) {
    Word w = (type == 1)
                 ? block(BlockKind::A, mm)
                 : block(BlockKind::B, mm) + block(BlockKind::B, mm - 1);
    w.pop_back();
    return w;
  };

  switch (id.seq) {
    case SequenceId::D:
      return d_envelope(id.type, m);
    case SequenceId::Theta1:
      if (id.type == 1) return tau1()(d_envelope(1, m));
      return m == 1 ? Word("b") : tau1()(d_envelope(2, m - 1));
    case SequenceId::Theta2:
      if (id.type == 1) {
        return m == 1 ? Word("a") : tau2()(d_envelope(1, m - 1)) + "a";
      }
      return m == 1 ? Word("aca") : tau2()(d_envelope(2, m - 1)) + "a";
  }
  throw InvalidIndex("envelope_word: bad SequenceId");
}

/** A factor located inside its envelope: w = E[offset+1 .. offset+|w|],
 * and that occurrence is the only one (weak uniqueness of extension). */
struct EnvelopeFit {
  Word word;
  EnvelopeId env;
  std::size_t offset = 0;
};

/** Env(w): the least envelope word containing w, with the offset of the
 * unique occurrence.
 *
 * Walks envelope ids in order and reports NotAFactor once both envelope
 * lengths at the current index exceed 8|w| without a hit; genuine factors
 * fit an envelope of length at most 4|w|, so the scan never misses one. */
inline EnvelopeFit envelope_of(SequenceId s, const Word& w) {
  require_factor_shape(s, w);
  for (int m = 1;; ++m) {
    Word e1 = envelope_word({s, 1, m});
    Word e2 = envelope_word({s, 2, m});
    for (int type : {1, 2}) {
      const Word& env = (type == 1) ? e1 : e2;
      std::vector<std::size_t> pos = find_all(env, w);
      if (!pos.empty()) {
        return EnvelopeFit{w, EnvelopeId{s, type, m}, pos.front() - 1};
      }
    }
    if (std::min(e1.size(), e2.size()) > 8 * w.size()) {
      throw NotAFactor("'" + w + "' occurs in no envelope word of " +
                       to_string(s) + " within the length bound");
    }
  }
}

/** Weak uniqueness: w occurs exactly once inside Env(w). */
inline bool verify_unique_occurrence(SequenceId s, const Word& w) {
  EnvelopeFit fit = envelope_of(s, w);
  return find_all(envelope_word(fit.env), w).size() == 1;
}

/** Strong uniqueness: every occurrence of w extends to a full occurrence of
 * Env(w) at the constant offset, equivalently [w]_p - [Env(w)]_p = offset
 * for every p. Checks both the positional identity and the literal window
 * around each of the first p_max occurrences. */
inline bool verify_strong_extension(SequenceId s, const Word& w,
                                    std::size_t p_max) {
  if (p_max < 1) throw InvalidIndex("verify_strong_extension: p_max >= 1");
  EnvelopeFit fit = envelope_of(s, w);
  Word env = envelope_word(fit.env);

  OccurrenceList occ_w = occurrences(s, w, p_max);
  OccurrenceList occ_e = occurrences(s, env, p_max);
  std::size_t needed = occ_w.positions[p_max - 1] + env.size();
  Word text = prefix(s, std::max(occ_w.horizon, needed));

  for (std::size_t p = 0; p < p_max; ++p) {
    if (occ_w.positions[p] - occ_e.positions[p] != fit.offset) return false;
    std::size_t start = occ_w.positions[p];
    if (start <= fit.offset) return false;
    if (slice(text, start - fit.offset,
              start - fit.offset + env.size() - 1) != env) {
      return false;
    }
  }
  return true;
}

/** E_m^i cut along its copies of E_n^1: the envelope word is an alternation
 * E_n^1 x_1 E_n^1 x_2 ... x_h E_n^1 with single-letter separators x_k sitting
 * at positions k*2^n. `separators` is the word x_1 x_2 ... x_h; it equals
 * E_{m-n}^i when n is even and bar(E_{m-n}^i) when n is odd. */
struct Decomposition {
  std::size_t copies = 0;  // h + 1
  Word separators;         // x_1 ... x_h
};

/** Cuts the D envelope word E_m^i along E_n^1 copies, m > n >= 1. */
inline Decomposition decompose(int type, int m, int n) {
  if (n < 1 || m <= n) {
    throw InvalidIndex("decompose: need m > n >= 1, got m=" +
                       std::to_string(m) + " n=" + std::to_string(n));
  }
  Word whole = envelope_word({SequenceId::D, type, m});
  Word unit = envelope_word({SequenceId::D, 1, n});

  Decomposition out;
  std::size_t pos = 0;
  while (true) {
    if (whole.compare(pos, unit.size(), unit) != 0) {
      // Unreachable for valid inputs: the alternation is an identity.
      throw Error("decompose: alternation broke at position " +
                  std::to_string(pos + 1) + " of " + to_string(EnvelopeId{
                      SequenceId::D, type, m}));
    }
    pos += unit.size();
    ++out.copies;
    if (pos == whole.size()) break;
    out.separators += whole[pos];
    ++pos;
  }
  return out;
}

/** All palindromic proper prefixes of a D envelope word, shortest first.
 * Each one is itself a type-1 envelope word. */
inline std::vector<Word> palindromic_prefixes(const EnvelopeId& id) {
  if (id.seq != SequenceId::D) {
    throw InvalidIndex("palindromic_prefixes: defined for D envelopes only");
  }
  Word env = envelope_word(id);
  std::vector<Word> out;
  for (std::size_t len = 1; len < env.size(); ++len) {
    std::string_view head = std::string_view(env).substr(0, len);
    if (is_palindrome(head)) out.emplace_back(head);
  }
  return out;
}

}  // namespace pdw
