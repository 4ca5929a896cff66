#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdw/envelope.hpp"
#include "pdw/error.hpp"
#include "pdw/factor_index.hpp"
#include "pdw/sequence.hpp"
#include "pdw/word.hpp"

namespace pdw {

/** Closed-form return words of an envelope word in its own sequence.
 * Type-1 envelopes have two distinct return words (r4 is absent); type-2
 * envelopes have three (r3 repeats r1, so the distinct ones are r1, r2, r4,
 * indexed by their first appearance in the return word sequence). */
struct EnvelopeReturnWords {
  Word r0;
  Word r1;
  Word r2;
  std::optional<Word> r4;
};

/** First occurrence positions of a D envelope word, in closed form:
 * type 1 -> [1, 2^m + 1, 3*2^(m-1) + 1];
 * type 2 -> [2^m + 1, 3*2^(m-1) + 1, 5*2^m + 1, 11*2^(m-1) + 1, 7*2^m + 1].
 */
inline std::vector<std::size_t> envelope_first_positions(const EnvelopeId& id) {
  if (id.seq != SequenceId::D) {
    throw InvalidIndex(
        "envelope_first_positions: closed form is for D envelopes only");
  }
  require_envelope_id(id);
  const std::size_t half = std::size_t{1} << (id.index - 1);  // 2^(m-1)
  if (id.type == 1) {
    return {1, 2 * half + 1, 3 * half + 1};
  }
  return {2 * half + 1, 3 * half + 1, 10 * half + 1, 11 * half + 1,
          14 * half + 1};
}

namespace detail {

/** D-level closed forms:
 * type 1: r0 = empty, r1 = A_m, r2 = A_{m-1};
 * type 2: r0 = A_m, r1 = A_{m-1}, r2 = A_{m-1} A_m B_{m+1}, r4 = B_m B_{m-1}.
 */
inline EnvelopeReturnWords d_envelope_returns(int type, int m) {
  auto A = [](int k) { return block(BlockKind::A, k); };
  auto B = [](int k) { return block(BlockKind::B, k); };
  if (type == 1) {
    return {Word(), A(m), A(m - 1), std::nullopt};
  }
  return {A(m), A(m - 1), A(m - 1) + A(m) + B(m + 1), B(m) + B(m - 1)};
}

inline EnvelopeReturnWords map_returns(const Morphism& tau,
                                       const EnvelopeReturnWords& base) {
  EnvelopeReturnWords out{tau(base.r0), tau(base.r1), tau(base.r2),
                          std::nullopt};
  if (base.r4) out.r4 = tau(*base.r4);
  return out;
}

}  // namespace detail

/** Closed-form return words of the envelope word named by `id`, taken inside
 * its own sequence.
 *
 * For D these are the block formulas above. For the Theta sequences the
 * non-base rows are tau images of the D-level words one index down (matching
 * the envelope families themselves); the m = 1 rows are explicit base cases.
 * The same shapes are produced by brute-force extraction, which the test
 * surface cross-checks. */
inline EnvelopeReturnWords envelope_return_words(const EnvelopeId& id) {
  require_envelope_id(id);
  const int m = id.index;
  switch (id.seq) {
    case SequenceId::D:
      return detail::d_envelope_returns(id.type, m);
    case SequenceId::Theta1:
      if (id.type == 1) {
        return detail::map_returns(tau1(), detail::d_envelope_returns(1, m));
      }
      if (m == 1) return {"a", "b", "baaa", "ba"};
      return detail::map_returns(tau1(), detail::d_envelope_returns(2, m - 1));
    case SequenceId::Theta2:
      if (id.type == 1) {
        if (m == 1) return {"", "ab", "ac", std::nullopt};
        return detail::map_returns(tau2(), detail::d_envelope_returns(1, m - 1));
      }
      if (m == 1) return {"ab", "ac", "acababab", "acab"};
      return detail::map_returns(tau2(), detail::d_envelope_returns(2, m - 1));
  }
  throw InvalidIndex("envelope_return_words: bad SequenceId");
}

/** Return words of an arbitrary factor, transported from its envelope.
 *
 * With E = Env(w) and i the unique offset of w inside E:
 *   r_0(w) = r_0(E) . E[1..i]
 *   r_p(w) = r_p(E)[i+1 ..] . E[1..i]        for p in {1, 2, 4},
 * so every |r_p(w)| equals |r_p(E)|. The offset i is always smaller than the
 * shortest envelope return word (w contains the envelope's middle letter),
 * so the rotation below never truncates; the clamp only guards malformed
 * state. */
inline EnvelopeReturnWords transported_return_words(SequenceId s,
                                                    const Word& w) {
  EnvelopeFit fit = envelope_of(s, w);
  Word env = envelope_word(fit.env);
  EnvelopeReturnWords base = envelope_return_words(fit.env);
  const std::size_t i = fit.offset;
  Word head = slice(env, 1, i);

  auto rotate = [&](const Word& r) {
    return (i < r.size() ? r.substr(i) : Word()) + head;
  };
  EnvelopeReturnWords out{base.r0 + head, rotate(base.r1), rotate(base.r2),
                          std::nullopt};
  if (base.r4) out.r4 = rotate(*base.r4);
  return out;
}

/** Which of the two derived sequences a return word sequence spells. */
enum class ThetaKind { Theta1, Theta2 };

inline std::string to_string(ThetaKind k) {
  return k == ThetaKind::Theta1 ? "Theta1" : "Theta2";
}

inline SequenceId sequence_of(ThetaKind k) {
  return k == ThetaKind::Theta1 ? SequenceId::Theta1 : SequenceId::Theta2;
}

/** The return word sequence of `word` in `seq`, classified.
 *
 * kind is Theta1 exactly when the envelope has type 1. The alphabet maps
 * each Theta letter to the return word it stands for: a -> r1, b -> r2,
 * and for Theta2 also c -> r4 (letters in order of first appearance, which
 * is tokens 1, 2 and 4). verified_tokens return words were extracted by
 * brute force and matched against the Theta prefix letter by letter. */
struct ReturnClassification {
  Word word;
  SequenceId seq = SequenceId::D;
  ThetaKind kind = ThetaKind::Theta1;
  std::map<char, Word> alphabet;
  Word r0;
  std::size_t verified_tokens = 0;
};

/** Classifies the return word sequence of w in s and verifies `tokens`
 * tokens of it against the predicted Theta prefix. Throws
 * ClassificationMismatch if any token (or r0, or alphabet distinctness)
 * disagrees; that would falsify the classification this library encodes. */
inline ReturnClassification classify(SequenceId s, const Word& w,
                                     std::size_t tokens = 256) {
  if (tokens < 1) throw InvalidIndex("classify: tokens must be >= 1");
  EnvelopeFit fit = envelope_of(s, w);
  EnvelopeReturnWords trans = transported_return_words(s, w);

  ReturnClassification out;
  out.word = w;
  out.seq = s;
  out.kind = (fit.env.type == 1) ? ThetaKind::Theta1 : ThetaKind::Theta2;
  out.r0 = trans.r0;
  out.verified_tokens = tokens;
  out.alphabet['a'] = trans.r1;
  out.alphabet['b'] = trans.r2;
  if (out.kind == ThetaKind::Theta2) {
    if (!trans.r4) {
      throw ClassificationMismatch("'" + w + "': type-2 envelope without r4");
    }
    out.alphabet['c'] = *trans.r4;
  }

  // Distinct letters must stand for distinct words.
  if (out.alphabet['a'] == out.alphabet['b'] ||
      (out.kind == ThetaKind::Theta2 &&
       (out.alphabet['c'] == out.alphabet['a'] ||
        out.alphabet['c'] == out.alphabet['b']))) {
    throw ClassificationMismatch("'" + w + "': alphabet entries collide");
  }

  ReturnWords brute = return_words(s, w, tokens);
  if (brute.r0 != out.r0) {
    throw ClassificationMismatch("'" + w + "': transported r0 '" + out.r0 +
                                 "' != extracted '" + brute.r0 + "'");
  }
  Word theta = prefix(sequence_of(out.kind), tokens);
  for (std::size_t p = 0; p < tokens; ++p) {
    const Word& expected = out.alphabet.at(theta[p]);
    if (brute.returns[p] != expected) {
      throw ClassificationMismatch(
          "'" + w + "': token " + std::to_string(p + 1) + " is '" +
          brute.returns[p] + "', classification predicts '" + expected + "'");
    }
  }
  return out;
}

/** Checks the block-alphabet identities behind the envelope return word
 * sequences, for all n <= n_max:
 *
 * over {bold a, bold b} = {A_m, B_m}:
 *     expand(sigma^n(a)) = A_{m+n} and expand(sigma^n(b)) = B_{m+n};
 * over {bold a, bold b} = {r1 r2, r1 r4 r1 r4} of the type-2 envelope:
 *     A_m . expand(sigma^n(a)) = A_{m+n+2} . A_m   (and B for b),
 *
 * where expand substitutes the bold letters into the template word
 * sigma^n(a) = A_n (resp. B_n) read over {a, b}. */
inline bool verify_block_alphabets(int m, int n_max) {
  if (m < 1) throw InvalidIndex("verify_block_alphabets: m must be >= 1");
  if (n_max < 0) throw InvalidIndex("verify_block_alphabets: n_max >= 0");
  auto A = [](int k) { return block(BlockKind::A, k); };
  auto B = [](int k) { return block(BlockKind::B, k); };

  Morphism type1("blocks1", {{'a', A(m)}, {'b', B(m)}});
  EnvelopeReturnWords rw = envelope_return_words({SequenceId::D, 2, m});
  Morphism type2("blocks2", {{'a', rw.r1 + rw.r2},
                             {'b', rw.r1 + *rw.r4 + rw.r1 + *rw.r4}});

  for (int n = 0; n <= n_max; ++n) {
    Word template_a = A(n);
    Word template_b = B(n);
    if (type1(template_a) != A(m + n)) return false;
    if (type1(template_b) != B(m + n)) return false;
    if (A(m) + type2(template_a) != A(m + n + 2) + A(m)) return false;
    if (A(m) + type2(template_b) != B(m + n + 2) + A(m)) return false;
  }
  return true;
}

}  // namespace pdw
