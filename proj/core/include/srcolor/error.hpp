#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srcolor {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kMalformedInput,
  kUnknownVertex,
  kInvalidArgument,
  kContextMismatch,
  kOverflow,
  kResourceLimit,
  kBudgetExhausted,
  kInvalidWitness,
  kInvariantViolation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class MalformedInputError : public Error {
 public:
  explicit MalformedInputError(const std::string& what, int line = 0)
      : Error(ErrorKind::kMalformedInput,
              line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  /// 1-based source line, 0 when not tied to a text input.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(const std::string& label)
      : Error(ErrorKind::kUnknownVertex, "unknown vertex '" + label + "'"),
        label_(label) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorKind::kInvalidArgument, what) {}
};

class ContextMismatchError : public Error {
 public:
  explicit ContextMismatchError(const std::string& what)
      : Error(ErrorKind::kContextMismatch, what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorKind::kOverflow, what) {}
};

class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : Error(ErrorKind::kResourceLimit, what) {}
};

/// Thrown when a search exhausts its node budget. Carries the best bounds
/// proven so far: every palette smaller than lower_bound was refuted, and a
/// coloring with upper_bound colors is known.
class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(const std::string& what, std::int64_t lower_bound,
                       std::int64_t upper_bound)
      : Error(ErrorKind::kBudgetExhausted, what),
        lower_bound_(lower_bound),
        upper_bound_(upper_bound) {}

  std::int64_t lower_bound() const noexcept { return lower_bound_; }
  std::int64_t upper_bound() const noexcept { return upper_bound_; }

 private:
  std::int64_t lower_bound_;
  std::int64_t upper_bound_;
};

class InvalidWitnessError : public Error {
 public:
  explicit InvalidWitnessError(const std::string& what)
      : Error(ErrorKind::kInvalidWitness, what) {}
};

class InvariantViolationError : public Error {
 public:
  explicit InvariantViolationError(const std::string& what)
      : Error(ErrorKind::kInvariantViolation, what) {}
};

}  // namespace srcolor
