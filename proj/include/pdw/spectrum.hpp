#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pdw/envelope.hpp"
#include "pdw/error.hpp"
#include "pdw/factor_index.hpp"
#include "pdw/sequence.hpp"
#include "pdw/word.hpp"

namespace pdw {

/** How the p-th and (p+1)-th occurrences of a factor sit relative to each
 * other: gap > |w| separated, gap = |w| adjacent (the square ww occurs),
 * gap < |w| overlapped. */
enum class Relation { Separated, Adjacent, Overlapped };

enum class VerdictSource { ClosedForm, BruteForce };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::Separated: return "separated";
    case Relation::Adjacent: return "adjacent";
    case Relation::Overlapped: return "overlapped";
  }
  throw InvalidIndex("to_string: bad Relation");
}

inline std::string to_string(VerdictSource s) {
  return s == VerdictSource::ClosedForm ? "closed_form" : "brute_force";
}

/** Verdict for one consecutive pair: the p-th against the (p+1)-th
 * occurrence. theta_letter is the Theta letter governing r_p (from Theta1
 * for type-1 envelopes, Theta2 for type-2). */
struct SpectrumVerdict {
  Word word;
  std::size_t p = 1;
  Relation relation = Relation::Separated;
  char theta_letter = 'a';
  VerdictSource source = VerdictSource::BruteForce;
};

namespace detail {

inline Relation relation_from_gap(std::size_t gap, std::size_t len) {
  if (gap > len) return Relation::Separated;
  if (gap == len) return Relation::Adjacent;
  return Relation::Overlapped;
}

}  // namespace detail

/** Verdicts for p in [p_from, p_to] from raw occurrence positions. */
inline std::vector<SpectrumVerdict> relations_brute(SequenceId s,
                                                    const Word& w,
                                                    std::size_t p_from,
                                                    std::size_t p_to) {
  if (p_from < 1 || p_to < p_from) {
    throw InvalidIndex("relations_brute: need 1 <= p_from <= p_to");
  }
  EnvelopeFit fit = envelope_of(s, w);
  Word theta = prefix(
      fit.env.type == 1 ? SequenceId::Theta1 : SequenceId::Theta2, p_to);
  OccurrenceList occ = occurrences(s, w, p_to + 1);

  std::vector<SpectrumVerdict> out;
  out.reserve(p_to - p_from + 1);
  for (std::size_t p = p_from; p <= p_to; ++p) {
    std::size_t gap = occ.positions[p] - occ.positions[p - 1];
    out.push_back({w, p, detail::relation_from_gap(gap, w.size()),
                   theta[p - 1], VerdictSource::BruteForce});
  }
  return out;
}

inline SpectrumVerdict relation_brute(SequenceId s, const Word& w,
                                      std::size_t p) {
  return relations_brute(s, w, p, p).front();
}

/** Closed-form verdicts for a factor of D, for p in [p_from, p_to].
 *
 * With (type, m) = Env(w):
 *   type 1: Theta1[p] = a -> separated; Theta1[p] = b -> separated,
 *           adjacent or overlapped as |w| <, =, > 2^(m-1);
 *   type 2: Theta2[p] = a -> overlapped; b or c -> separated.
 *
 * The length bounds behind these rules are proved only for m >= 3, so for
 * m <= 2 the result falls back to the positional scan and is marked
 * BruteForce. */
inline std::vector<SpectrumVerdict> relations_closed(const Word& w,
                                                     std::size_t p_from,
                                                     std::size_t p_to) {
  if (p_from < 1 || p_to < p_from) {
    throw InvalidIndex("relations_closed: need 1 <= p_from <= p_to");
  }
  EnvelopeFit fit = envelope_of(SequenceId::D, w);
  const int m = fit.env.index;
  if (m <= 2) return relations_brute(SequenceId::D, w, p_from, p_to);

  std::vector<SpectrumVerdict> out;
  out.reserve(p_to - p_from + 1);
  if (fit.env.type == 1) {
    Word theta = prefix(SequenceId::Theta1, p_to);
    const std::size_t half = std::size_t{1} << (m - 1);
    Relation on_b = detail::relation_from_gap(half, w.size());
    for (std::size_t p = p_from; p <= p_to; ++p) {
      char letter = theta[p - 1];
      out.push_back({w, p, letter == 'a' ? Relation::Separated : on_b, letter,
                     VerdictSource::ClosedForm});
    }
  } else {
    Word theta = prefix(SequenceId::Theta2, p_to);
    for (std::size_t p = p_from; p <= p_to; ++p) {
      char letter = theta[p - 1];
      out.push_back({w, p,
                     letter == 'a' ? Relation::Overlapped
                                   : Relation::Separated,
                     letter, VerdictSource::ClosedForm});
    }
  }
  return out;
}

inline SpectrumVerdict relation_closed(const Word& w, std::size_t p) {
  return relations_closed(w, p, p).front();
}

/** Non-consecutive occurrences never touch: for all p < q <= p_max with
 * q - p >= 2, the q-th occurrence starts more than |w| letters after the
 * p-th. */
inline bool far_pairs_separated(const Word& w, std::size_t p_max) {
  if (p_max < 1) throw InvalidIndex("far_pairs_separated: p_max must be >= 1");
  OccurrenceList occ = occurrences(SequenceId::D, w, p_max);
  for (std::size_t p = 1; p + 2 <= p_max; ++p) {
    for (std::size_t q = p + 2; q <= p_max; ++q) {
      if (occ.positions[q - 1] - occ.positions[p - 1] <= w.size()) {
        return false;
      }
    }
  }
  return true;
}

/** Every square occurrence (w, q) with ww = D[q .. q + 2|w| - 1] inside the
 * horizon, in closed form. Square roots are exactly the factors w with a
 * type-1 envelope of index m and |w| = 2^(m-1); the square sits at the p-th
 * occurrence exactly when Theta1[p] = b (the adjacent pairs). Ordered by
 * root length, then position. */
inline std::vector<std::pair<Word, std::size_t>> squares(std::size_t horizon) {
  std::vector<std::pair<Word, std::size_t>> out;
  if (horizon < 2) return out;
  Word text = prefix(SequenceId::D, horizon);
  Word theta1 = prefix(SequenceId::Theta1, horizon);

  int m = 1;
  for (std::size_t len = 1; 2 * len <= horizon; len *= 2, ++m) {
    for (const Word& w : distinct_factors(text, len, len)) {
      EnvelopeFit fit = envelope_of(SequenceId::D, w);
      if (fit.env.type != 1 || fit.env.index != m) continue;
      std::vector<std::size_t> pos = find_all(text, w);
      for (std::size_t p = 0; p < pos.size(); ++p) {
        if (pos[p] + 2 * len - 1 <= horizon && theta1[p] == 'b') {
          out.emplace_back(w, pos[p]);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) {
              return x.first.size() != y.first.size()
                         ? x.first.size() < y.first.size()
                         : x.second < y.second;
            });
  return out;
}

/** Every cube occurrence (w, q) with www starting at q inside the horizon,
 * by direct scan; no closed form is exposed for cubes. Ordered by root
 * length, then position. */
inline std::vector<std::pair<Word, std::size_t>> cubes_brute(
    std::size_t horizon) {
  std::vector<std::pair<Word, std::size_t>> out;
  Word text = prefix(SequenceId::D, horizon);
  for (std::size_t len = 1; 3 * len <= text.size(); ++len) {
    for (std::size_t q = 0; q + 3 * len <= text.size(); ++q) {
      if (text.compare(q, len, text, q + len, len) == 0 &&
          text.compare(q, len, text, q + 2 * len, len) == 0) {
        out.emplace_back(text.substr(q, len), q + 1);
      }
    }
  }
  return out;
}

}  // namespace pdw
