#pragma once

#include <stdexcept>
#include <string>

namespace rans {

// Base class for every recoverable error the library can raise. Callers that
// only want "did it work" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated (caller bug, not data corruption),
// e.g. popping from a head below the working range.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Renormalization needed a tail word but the stack was empty: the stream was
// decoded past its end (truncated or corrupt input).
class TailUnderflowError : public Error {
 public:
  using Error::Error;
};

// Malformed container bytes: bad magic, unsupported version, inconsistent
// lengths, out-of-range header fields.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Invalid model input: unknown symbol, empty or oversized alphabet.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Could not read or write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rans
