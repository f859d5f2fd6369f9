#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqknot {

/// Malformed textual input. Line and column are 1-based; line is 0 when the
/// input was a single expression rather than a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out = what + " at ";
    if (line > 0) out += "line " + std::to_string(line) + ", ";
    return out + "column " + std::to_string(column);
  }

  std::size_t line_;
  std::size_t column_;
};

/// Input that parses but violates a mathematical precondition
/// (non-Seifert matrix, non-coprime factor list, singular matrix, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An intermediate polynomial exceeded the configured degree cap.
class DegreeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural axiom failed while assembling a triple.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& axiom, const std::string& detail)
      : std::runtime_error(axiom + ": " + detail), axiom_(axiom) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

}  // namespace eqknot
