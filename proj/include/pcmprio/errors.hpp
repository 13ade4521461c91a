#pragma once

#include <stdexcept>
#include <string>

namespace pcmprio {

// Everything the library can reject, from malformed input matrices to
// internal consistency failures. Indices in messages are 1-based to match
// the usual decision-analysis convention; the i()/j() accessors are 0-based.
enum class ErrorKind {
  kNonSquare,
  kNonPositiveEntry,
  kReciprocityViolation,
  kBadDiagonal,
  kMissingEntry,
  kBadArgument,
  kNoConvergence,
  kBadBracket,
  kNotFeasible,
  kNoCycleCore,
  kAlreadyConnected,
  kParse,
  kIo,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int i = -1, int j = -1,
        double value = 0.0)
      : std::runtime_error(message), kind_(kind), i_(i), j_(j), value_(value) {}

  ErrorKind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  double value() const { return value_; }

 private:
  ErrorKind kind_;
  int i_;
  int j_;
  double value_;
};

}  // namespace pcmprio
