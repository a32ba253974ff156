#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace advmark {

// Base class for all toolkit errors. Fatal configuration/IO problems map to
// exit code 2 at the CLI; per-record errors are reported in-band.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text is empty or contains no word tokens.
class EmptyTextError : public Error {
 public:
  using Error::Error;
};

// TokenizedText structural invariant broken (separator/token count mismatch).
class MalformedTextError : public Error {
 public:
  using Error::Error;
};

// Synonym lexicon violates disjointness or POS homogeneity.
class LexiconConflictError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Text cannot carry the requested watermark: fewer codable positions than
// L/l carriers needed.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t available, std::size_t required)
      : Error("capacity error: " + std::to_string(available) +
              " codable positions available, " + std::to_string(required) +
              " required"),
        available_(available),
        required_(required) {}

  std::size_t available() const { return available_; }
  std::size_t required() const { return required_; }

 private:
  std::size_t available_;
  std::size_t required_;
};

// Training corpus has fewer than two classes.
class DegenerateCorpusError : public Error {
 public:
  using Error::Error;
};

// Model file is truncated, has a bad magic header or unsupported version.
class ModelFormatError : public Error {
 public:
  using Error::Error;
};

// Two sequences that must be compared have different lengths.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptyReportError : public Error {
 public:
  using Error::Error;
};

// A JSONL input line does not match the expected record schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace advmark
