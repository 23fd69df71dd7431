#pragma once

#include <stdexcept>
#include <string>

namespace scd {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or truncated input file. Messages name the file and the
// offending line, record or byte offset.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Inputs that parse but violate a contract (dimension mismatch, duplicate
// ids, single-class validation set, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Lemma has no occurrences in a corpus.
class NoOccurrencesError : public Error {
 public:
  using Error::Error;
};

}  // namespace scd
