#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ptrop {

// Domain errors carry a stable machine-readable code alongside the human
// message.  The CLI maps any Error to exit status 1 and prints the code;
// library users can switch on code() without parsing message text.
//
// Codes in use:
//   NonPrime, DivisionByZero, ZeroToNegativePower, ZeroPolynomial,
//   PrimeMismatch, DegenerateFactor, NullityNotOne, MonomialInput,
//   RegimeMismatch, GeneralPositionFailure, UnsupportedSupportSize,
//   TooLarge, BadInput
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ptrop
