#pragma once

#include <stdexcept>
#include <string>

namespace sumcard {

// Failure taxonomy shared by the whole library.  The CLI maps kinds to
// process exit codes; library callers can switch on the kind instead of
// parsing messages.
enum class ErrorKind {
    Argument,       // malformed call (empty set, size mismatch)
    Dimension,      // dimensions out of range or inconsistent
    Singular,       // matrix/simplex unexpectedly singular
    Degenerate,     // point set does not affinely span its space
    Hypothesis,     // instance fails a validity predicate
    Budget,         // enumeration would exceed a resource budget
    Contract,       // operation called outside its stated regime
    NotStabilized,  // sequence window too short to fit a polynomial
    Parse,          // instance file cannot be parsed/validated
    Internal,       // invariant that must never fail did fail
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Argument: return "argument";
        case ErrorKind::Dimension: return "dimension";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::Hypothesis: return "hypothesis";
        case ErrorKind::Budget: return "budget";
        case ErrorKind::Contract: return "contract";
        case ErrorKind::NotStabilized: return "not-stabilized";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace sumcard
