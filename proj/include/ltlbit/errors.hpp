#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltlbit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary bitmap operation applied to operands of different lengths.
class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("bitmap length mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

/// Formula refers to a variable the environment does not bind.
class UnboundAtom : public Error {
 public:
  explicit UnboundAtom(const std::string& name)
      : Error("unbound atom '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Syntax error in formula text. `position` is a 0-based character offset.
class FormulaSyntaxError : public Error {
 public:
  FormulaSyntaxError(const std::string& message, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed trace file. `line` is 1-based.
class TraceParseError : public Error {
 public:
  TraceParseError(const std::string& message, std::size_t line)
      : Error("trace parse error at line " + std::to_string(line) + ": " +
              message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ltlbit
