#pragma once

#include <stdexcept>
#include <string>

namespace fermatrank {

// Every failure the library can signal.  The C API maps these onto its
// status codes; the CLI maps them onto exit codes (budget_exceeded -> 3,
// everything else -> 2).
enum class ErrorCode {
  invalid_argument,       // malformed value, bad prime, mismatched levels
  level_zero,             // operation needs n >= 1
  budget_exceeded,        // enumeration cap hit; use closed forms instead
  non_abelian,            // irrep construction requires abelian H
  hypothesis_missing,     // H^1-triviality hypothesis not asserted
  mu_hypothesis_missing,  // mu = 0 hypothesis not asserted
  inconsistent_override   // field-degree overrides violate divisibility
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fermatrank
