#ifndef NDCOLOR_ERRORS_H_
#define NDCOLOR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ndcolor {

// Root of every error thrown by the library. The CLI maps subclasses to exit
// codes: ResourceError derivatives exit with 2, everything else with 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line()` is 1-based; 0 when no single line is at fault.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally invalid value (bad decomposition, zero weight, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

// Input exceeds the hard size cap of a brute-force routine.
class RangeError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

// The ILP search hit its node budget before proving optimality.
class BudgetExceeded : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace ndcolor

#endif  // NDCOLOR_ERRORS_H_
