#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcdc {

/// Malformed expression text. Carries the byte offset of the offending token.
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(std::size_t position, const std::string& message)
      : std::runtime_error("syntax error at offset " + std::to_string(position)
                           + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class EmptyInput : public std::runtime_error {
public:
  EmptyInput() : std::runtime_error("empty expression") {}
};

/// More conditions than fit in the fixed-width bitmask.
class TooManyConditions : public std::runtime_error {
public:
  explicit TooManyConditions(int count)
      : std::runtime_error("expression has " + std::to_string(count)
                           + " conditions, limit is 64"),
        count_(count) {}

  int count() const { return count_; }

private:
  int count_;
};

class LengthMismatch : public std::runtime_error {
public:
  LengthMismatch(int expected, int got)
      : std::runtime_error("input vector has " + std::to_string(got)
                           + " values, expected " + std::to_string(expected)) {}
};

class NotAPseudoTerminal : public std::runtime_error {
public:
  explicit NotAPseudoTerminal(const std::string& name)
      : std::runtime_error(name + " has in-degree < 2") {}
};

class IncompatibleAccumulators : public std::runtime_error {
public:
  IncompatibleAccumulators()
      : std::runtime_error("accumulators were built from different decisions") {}
};

class InvariantViolation : public std::runtime_error {
public:
  explicit InvariantViolation(const std::string& message)
      : std::runtime_error(message) {}
};

/// Bad line in a vector file.
class VectorFileError : public std::runtime_error {
public:
  VectorFileError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

class BadToken : public VectorFileError {
public:
  BadToken(int line, const std::string& token)
      : VectorFileError(line, "bad token '" + token + "', expected 0 or 1") {}
};

class WrongArity : public VectorFileError {
public:
  WrongArity(int line, int expected, int got)
      : VectorFileError(line, "expected " + std::to_string(expected)
                        + " values, got " + std::to_string(got)),
        expected_(expected), got_(got) {}

  int expected() const { return expected_; }
  int got() const { return got_; }

private:
  int expected_;
  int got_;
};

} // namespace mcdc
