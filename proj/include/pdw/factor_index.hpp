#pragma once

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pdw/error.hpp"
#include "pdw/sequence.hpp"
#include "pdw/word.hpp"

namespace pdw {

/** Occurrence search scans a prefix of this length before giving up on a
 * word entirely; every genuine factor w of the supported sequences occurs
 * within max(64, 16|w|) letters (its envelope is at most 4|w| long and first
 * appears within four envelope lengths). */
inline std::size_t starting_horizon(std::size_t word_len) {
  return std::max<std::size_t>(64, 16 * word_len);
}

/** Hard cap on horizon doubling; running past it reports NotAFactor with
 * horizon_exhausted() set, distinguishing resource limit from absence. */
inline constexpr std::size_t kHorizonCap = std::size_t{1} << 24;

/** All 1-based occurrence positions of `pattern` in `text`, ascending,
 * including overlapping occurrences. Failure-function (KMP) matching, linear
 * in |text| + |pattern|. Empty patterns yield no occurrences. */
inline std::vector<std::size_t> find_all(std::string_view text,
                                         std::string_view pattern) {
  std::vector<std::size_t> out;
  const std::size_t m = pattern.size();
  if (m == 0 || text.size() < m) return out;

  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }

  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = fail[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == m) {
      out.push_back(i + 2 - m);  // 1-based start
      k = fail[k - 1];
    }
  }
  return out;
}

/** The positions [w]_1 < [w]_2 < ... of a factor w, complete below the
 * scanned horizon: no occurrence starting at or before horizon - |w| + 1 is
 * missing. */
struct OccurrenceList {
  Word word;
  std::vector<std::size_t> positions;
  std::size_t horizon = 0;
};

/** At least `count` occurrence positions of w in s.
 *
 * The scan starts at max(64, 16|w|); absence there proves w is not a factor.
 * Otherwise the horizon doubles until `count` occurrences are found or the
 * hard cap is hit. */
inline OccurrenceList occurrences(SequenceId s, const Word& w,
                                  std::size_t count) {
  require_factor_shape(s, w);
  if (count < 1) throw InvalidIndex("occurrences: count must be >= 1");

  std::size_t horizon = starting_horizon(w.size());
  Word text = prefix(s, horizon);
  std::vector<std::size_t> pos = find_all(text, w);
  if (pos.empty()) {
    throw NotAFactor("'" + w + "' does not occur in " + to_string(s) +
                     "[1.." + std::to_string(horizon) + "]");
  }
  while (pos.size() < count) {
    if (horizon >= kHorizonCap) {
      throw NotAFactor("'" + w + "': only " + std::to_string(pos.size()) +
                           " of " + std::to_string(count) +
                           " occurrences below the horizon cap",
                       /*horizon_exhausted=*/true);
    }
    horizon = std::min(horizon * 2, kHorizonCap);
    text = prefix(s, horizon);
    pos = find_all(text, w);
  }
  return OccurrenceList{w, std::move(pos), horizon};
}

/** r_0 is the (possibly empty) prefix before the first occurrence; it is not
 * a return word. returns[p-1] = r_p runs from the p-th occurrence start to
 * just before the (p+1)-th, so r_0 r_1 ... r_k is always a sequence prefix. */
struct ReturnWords {
  Word word;
  Word r0;
  std::vector<Word> returns;
};

/** Every distinct factor of `text` with length in [min_len, max_len],
 * ordered by length, then lexicographically. min_len must be >= 1. */
inline std::vector<Word> distinct_factors(std::string_view text,
                                          std::size_t min_len,
                                          std::size_t max_len) {
  if (min_len < 1) throw InvalidIndex("distinct_factors: min_len must be >= 1");
  std::vector<Word> out;
  for (std::size_t len = min_len; len <= max_len && len <= text.size(); ++len) {
    std::unordered_set<std::string_view> seen;
    for (std::size_t q = 0; q + len <= text.size(); ++q) {
      seen.insert(text.substr(q, len));
    }
    std::vector<std::string_view> views(seen.begin(), seen.end());
    std::sort(views.begin(), views.end());
    for (std::string_view v : views) out.emplace_back(v);
  }
  return out;
}

/** The first k return words of w in s, extracted from raw positions. */
inline ReturnWords return_words(SequenceId s, const Word& w, std::size_t k) {
  if (k < 1) throw InvalidIndex("return_words: k must be >= 1");
  OccurrenceList occ = occurrences(s, w, k + 1);
  Word text = prefix(s, occ.horizon);

  ReturnWords out;
  out.word = w;
  out.r0 = slice(text, 1, occ.positions[0] - 1);
  out.returns.reserve(k);
  for (std::size_t p = 0; p < k; ++p) {
    out.returns.push_back(
        slice(text, occ.positions[p], occ.positions[p + 1] - 1));
  }
  return out;
}

}  // namespace pdw
