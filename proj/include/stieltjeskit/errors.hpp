#pragma once

#include <stdexcept>
#include <string>

namespace sk {

// Failure categories shared by every module.  The CLI maps BoundViolated and
// RegressionDetected to exit code 3 (a verification failed), everything else
// to exit code 2 (bad input or unmet hypothesis).
enum class ErrorCode {
    NonConvergence,
    PrecisionTooLow,
    ResourceLimit,
    UnsupportedCharacter,
    PoleAtOne,
    OutsideDisk,
    QTooSmall,
    BoundViolated,
    DomainError,
    PreconditionViolated,
    NoCrossover,
    TailDivergence,
    MissingGamma,
    RegressionDetected,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace sk
