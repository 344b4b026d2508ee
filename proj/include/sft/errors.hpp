#pragma once

#include <stdexcept>
#include <string>

namespace sft {

struct SftError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed a configured budget; callers treat this as
// "out of budget", not as a verdict about the subshift.
struct CapExceeded : SftError {
    using SftError::SftError;
};

struct DimensionMismatch : SftError {
    using SftError::SftError;
};

// An internally constructed certificate failed its independent recheck.
// This always indicates a bug, never a property of the input.
struct VerificationFailed : SftError {
    using SftError::SftError;
};

struct UnknownFormat : SftError {
    using SftError::SftError;
};

struct ParseError : SftError {
    ParseError(const std::string& msg, int line_, int col_, int length_)
        : SftError("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), col(col_), length(length_) {}

    int line;   // 1-based
    int col;    // 1-based
    int length; // span length in characters
};

} // namespace sft
