#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfactor {

/// Base type for every error thrown by the gfactor library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: parameter files, composition formulas, CSV tables.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what, int line = 0) : Error(what), line_(line) {}

  /// 1-based line number when the source is line-oriented, 0 otherwise.
  int line() const noexcept { return line_; }

private:
  int line_;
};

/// One database invariant violation. Violations are collected as data so a
/// caller can report all of them at once.
struct Violation {
  std::string subject;  // compound name or ternary edge id
  std::string field;
  std::string rule;

  std::string to_string() const { return subject + "." + field + ": " + rule; }
};

/// Thrown when a database fails validation on load.
class ValidationError : public Error {
public:
  ValidationError(const std::string& what, std::vector<Violation> violations)
      : Error(what), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
  std::vector<Violation> violations_;
};

/// Lookup of a compound or implied binary the database does not contain.
class LookupError : public Error {
public:
  using Error::Error;
};

/// Argument outside an operation's domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Root finding or path construction failure.
class SolverError : public Error {
public:
  using Error::Error;
};

}  // namespace gfactor
