#pragma once

#include <stdexcept>
#include <string>

namespace pdw {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A letter has no image under the requested morphism. */
class UnknownLetter : public Error {
 public:
  using Error::Error;
};

/** A word contains letters outside the expected alphabet, or is empty where
 * a nonempty factor is required. */
class MalformedWord : public Error {
 public:
  using Error::Error;
};

/** An index argument is outside its documented range. */
class InvalidIndex : public Error {
 public:
  using Error::Error;
};

/** The queried word does not occur within the search horizon.
 *
 * horizon_exhausted() distinguishes a proof of absence (the word was missing
 * from the starting horizon, which is large enough to contain every genuine
 * factor of the supported sequences) from a resource limit (the word kept
 * occurring but the requested occurrence count was not reached below the
 * hard horizon cap). */
class NotAFactor : public Error {
 public:
  NotAFactor(const std::string& what, bool horizon_exhausted = false)
      : Error(what), horizon_exhausted_(horizon_exhausted) {}

  bool horizon_exhausted() const noexcept { return horizon_exhausted_; }

 private:
  bool horizon_exhausted_;
};

/** A verified return-word token disagreed with the predicted classification.
 * This firing on a valid factor would falsify the closed forms the library
 * encodes; it is a tripwire, never an expected outcome. */
class ClassificationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace pdw
