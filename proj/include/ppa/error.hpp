#pragma once

#include <stdexcept>
#include <string>

namespace ppa {

enum class Err {
    // input-shaped problems (CLI exit code 2)
    BadInput,
    NonPositiveWeight,
    DivisibilityViolation,
    DisconnectedQuiver,
    DuplicateLabel,
    NotSymmetrizable,
    NonCartanEntries,
    NotAcyclic,
    NotSimplyLaced,
    NonDynkinNeedsMaxDegree,
    InfiniteRootSystem,
    DegreeCapExceeded,
    PathCountCapExceeded,
    PrimeModeRefused,
    DynkinNotSupported,
    OrderNotFoundWithinCap,
    // verification-shaped problems (CLI exit code 1)
    SocleMismatch,
    IdentityViolation,
    KernelFound,
};

const char* err_name(Err e);

// true when the error describes bad or unsupported input rather than a failed
// mathematical cross-check
bool is_input_error(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ppa
