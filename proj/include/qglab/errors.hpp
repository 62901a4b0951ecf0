#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgl {

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLetter : public Error {
 public:
  explicit UnknownLetter(const std::string& token)
      : Error("unknown letter: '" + token + "'") {}
};

class MalformedExponent : public Error {
 public:
  explicit MalformedExponent(const std::string& token)
      : Error("malformed exponent in token: '" + token + "'") {}
};

class UnmappedLetter : public Error {
 public:
  using Error::Error;
};

class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t frontier)
      : Error(what + " (frontier size " + std::to_string(frontier) + ")"),
        frontier_size(frontier) {}
  std::size_t frontier_size;
};

class GrammarError : public Error {
 public:
  using Error::Error;
};

class NotInLanguage : public Error {
 public:
  using Error::Error;
};

class InsufficientMarks : public Error {
 public:
  using Error::Error;
};

/// The pumping theorem guarantees a decomposition; reaching this is a bug.
class ExtractionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace qgl
