#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dagscope {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Shapes of the operands do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (singular matrix, constant column, ...).
/// `index` names the offending column when there is one.
class DomainError : public Error {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  explicit DomainError(const std::string& what, std::size_t index = kNoIndex)
      : Error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Invalid configuration or specification values.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A graph that must be acyclic contains a cycle. The cycle is reported as a
/// node sequence v0 -> v1 -> ... -> v0 (the first node is not repeated).
class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<std::size_t> cycle)
      : Error(what), cycle_(std::move(cycle)) {}

  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

/// Unrecoverable optimizer failure. `diagnostic` holds a JSON dump of the
/// solver state at the point of failure.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::string diagnostic)
      : Error(what), diagnostic_(std::move(diagnostic)) {}

  const std::string& diagnostic() const noexcept { return diagnostic_; }

 private:
  std::string diagnostic_;
};

}  // namespace dagscope
