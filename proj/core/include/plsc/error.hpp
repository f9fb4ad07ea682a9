#pragma once

#include <stdexcept>
#include <string>

namespace plsc {

// Malformed or precondition-violating input to a library operation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A board mutation that is not allowed in the current state (e.g. placing a
// rook on a cell that does not hold a dot).
class InvalidMove : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Text parse failure; `line()` is 1-based, 0 when not attributable to a line.
class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace plsc
