#pragma once

#include <stdexcept>
#include <string>

namespace qdl {

// Error taxonomy mirrored by the CLI exit codes:
//   Domain/Unsupported/Limit -> 1, Usage -> 2, Accuracy/Internal -> 3.
enum class ErrorKind {
    Domain,       // bad input value (zero polynomial, constant term present, ...)
    Usage,        // malformed invocation or file
    Unsupported,  // input outside the implemented scope (degenerate germ, ...)
    Accuracy,     // quadrature / conditioning / fit failure
    Limit,        // resource cap hit (degree cap, iteration cap)
    Internal      // consistency check failed; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    const char* kind_name() const noexcept {
        switch (kind_) {
            case ErrorKind::Domain: return "domain";
            case ErrorKind::Usage: return "usage";
            case ErrorKind::Unsupported: return "unsupported";
            case ErrorKind::Accuracy: return "accuracy";
            case ErrorKind::Limit: return "limit";
            case ErrorKind::Internal: return "internal";
        }
        return "unknown";
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace qdl
