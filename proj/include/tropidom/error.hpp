#pragma once

#include <stdexcept>
#include <string>

namespace tropidom {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    SelfLoop,
    DuplicateEdge,
    ColourGap,
    OutOfRange,
    BudgetExceeded,
    NotDominating,
    NotAPath,
    RepresentationMismatch,
    TooManyColours,
    NoRepresentation,
    MalformedFormula,
    NotSubcubic,
    HasIsolatedVertex,
    EmptyGraph,
    NotTropicalDominating,
    WrongArtifact,
    BadParameters,
    BadEpsilon,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C API can map it onto a status value without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace tropidom
