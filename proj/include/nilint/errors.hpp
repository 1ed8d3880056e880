#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilint {

// A mathematically ill-posed request: division by zero, a central element
// where a non-central one is required, an element outside a predicate's
// domain. The CLI maps these to exit status 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bad invocation: unknown catalog entry, wrong arity, ill-typed word.
// The CLI maps these (and ParseError) to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TypeError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Lexical, syntactic or literal-level semantic error, positioned at a byte
// offset of the input.
class ParseError : public UsageError {
 public:
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> expected = {});

  const std::string& message() const { return message_; }
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string message_;
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace nilint
