#pragma once

#include <stdexcept>
#include <string>

namespace proxigraph {

/// Base for every error raised by the library. Carries a stable category so
/// the CLI can map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegeneratePairError : public Error {
 public:
  DegeneratePairError() : Error("degenerate pair: the two endpoints coincide") {}
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class TooFewPointsError : public Error {
 public:
  using Error::Error;
};

class SizeCapError : public Error {
 public:
  using Error::Error;
};

class EdgeNotInCycleError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. Line and column are 1-based; zero means
/// "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace proxigraph
