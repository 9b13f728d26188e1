#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wri {

// Malformed WGF input. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &what)
          : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
            line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

class NotWheelerError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// phi() was asked for the predecessor of the first vertex in the order.
class FirstInOrderError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A structural property guaranteed by construction did not hold. Indicates a
// build bug or a corrupted index, never bad user input.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace wri
