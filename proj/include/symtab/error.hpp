#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symtab {

enum class ErrorKind {
  NotAddable,
  NotRemovable,
  HasSlidableHole,
  HasReverselySlidableHole,
  NotSemistandard,
  NotSymplectic,
  NotAHole,
  LetterOutOfRange,
  NotStrictlyIncreasing,
  NotWeaklyIncreasing,
  NotStrictlyDecreasing,
  NoPreimage,
  InvalidShape,
  ParseError,
};

const char* to_string(ErrorKind kind);

// Precondition violations of the tableau calculus. Internal invariant
// breaks (which would mean a bug) are reported as std::logic_error instead.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace symtab
