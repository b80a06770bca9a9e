#pragma once

#include <stdexcept>
#include <string>

namespace tds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid constructor or builder parameters (bad family parameters,
/// out-of-range vertex ids, too many vertices for the bitset width).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 / edge-list / hypergraph text.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A vertex sequence that is not a sequence of distinct in-range vertices.
class SequenceError : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the domain of an invariant (isolated vertices,
/// hypotheses of a theorem not satisfied).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of a constructive routine does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds the configured solver cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A proven identity failed on a concrete instance. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tds
