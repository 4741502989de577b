#pragma once

#include <stdexcept>
#include <string>

namespace srcg {

enum class ErrorCode {
    NotPrime,
    UnsupportedSize,
    QuotientUndefined,
    WrongContext,
    EvenPrime,
    NotSrcgInput,
    InconsistentEigenvalues,
    VectorOutOfRange,
    BadDescriptor,
    TooLarge,          // search-space / adjacency guard exceeded
    ContextTooLarge,   // catalog realization count exceeds cap and no limit given
    InternalInvariant, // a proven identity failed at runtime
};

class SrcgError : public std::runtime_error {
public:
    SrcgError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

    /// true for guard-limit errors (CLI exit code 2)
    bool is_guard() const noexcept {
        return code_ == ErrorCode::TooLarge || code_ == ErrorCode::ContextTooLarge;
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw SrcgError(code, what);
}

} // namespace srcg
