#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "pdw/error.hpp"
#include "pdw/word.hpp"

namespace pdw {

/** A morphism maps letters to words and extends to words by concatenation.
 * Instances are immutable after construction. */
class Morphism {
 public:
  Morphism(std::string name,
           std::initializer_list<std::pair<const char, Word>> images)
      : name_(std::move(name)), images_(images) {}

  const std::string& name() const noexcept { return name_; }

  const Word& image(char letter) const {
    auto it = images_.find(letter);
    if (it == images_.end()) {
      throw UnknownLetter(name_ + ": no image for letter '" +
                          std::string(1, letter) + "'");
    }
    return it->second;
  }

  /** True when image(letter) begins with letter, so iterating the morphism
   * from that letter converges to a fixed point. */
  bool prolongable_on(char letter) const {
    const Word& im = image(letter);
    return !im.empty() && im.front() == letter;
  }

  Word operator()(std::string_view w) const {
    Word out;
    for (char ch : w) out += image(ch);
    return out;
  }

 private:
  std::string name_;
  std::map<char, Word> images_;
};

/** Concatenation of images, left to right. */
inline Word apply_morphism(const Morphism& m, std::string_view w) {
  return m(w);
}

/** sigma: a -> ab, b -> aa. Its fixed point from 'a' is the period-doubling
 * sequence. */
inline const Morphism& sigma() {
  static const Morphism m("sigma", {{'a', "ab"}, {'b', "aa"}});
  return m;
}

/** tau1: a -> a, b -> bb. */
inline const Morphism& tau1() {
  static const Morphism m("tau1", {{'a', "a"}, {'b', "bb"}});
  return m;
}

/** tau2: a -> ab, b -> acac. */
inline const Morphism& tau2() {
  static const Morphism m("tau2", {{'a', "ab"}, {'b', "acac"}});
  return m;
}

}  // namespace pdw
