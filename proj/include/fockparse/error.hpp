#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fockparse {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: grammar files, term text, vector files.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A partial function (cat, ex, cons) applied outside its domain.
class PartialFunctionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ArityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

// Two rules share a left corner, so projection is not deterministic.
class NondeterminismError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fockparse
