#pragma once

#include <stdexcept>
#include <string>

namespace liftlab {

// Exit-code relevant classification of failures.
enum class ErrorKind {
  InvalidInput,        // bad user input, rejected before computation
  VerificationFailure, // a certified property did not hold
  Internal,            // an invariant that cannot fail for valid input failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_input(const std::string& what) {
  return Error(ErrorKind::InvalidInput, what);
}
inline Error internal_error(const std::string& what) {
  return Error(ErrorKind::Internal, what);
}

}  // namespace liftlab
