#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcx {

// Domain error codes. Every throwing operation documents which of these it
// can raise; the CLI maps them onto structured output and exit code 1.
enum class ErrorCode {
    NegativeCount,        // arc-count formula is negative (degenerate polygon)
    NonIntegral,          // triangle-count identity fails on a malformed descriptor
    InfiniteType,         // enumeration requested on a surface with infinitely many arcs
    MixedSurface,         // arcs passed to an operation do not live on the given surface
    InvalidArc,           // arc violates its own construction invariants
    ArcNotInTriangulation,
    NotFlippable,
    NotATriangulation,    // arc set fails pairwise-disjointness or maximality
    SelfFolded,           // glued flip requested on the interior edge of a self-folded triangle
    UnknownSide,          // glued flip / b-matrix on a side label that does not exist
    BoundarySide,         // glued flip on an unglued (boundary) side
    EmptyComplex,
    OracleMismatch,       // the two independent complex constructions disagree (hard failure)
    TooLarge,             // instance exceeds the configured search bound
    Inconclusive,         // isomorphism search aborted by the size bound
    Punctured,            // b-matrix requested on a surface with punctures
    UnlabeledSide,        // malformed glued input for the b-matrix
    IndexOutOfRange,
    ParseError,           // malformed descriptor / file
    Unsupported,
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativeCount: return "NegativeCount";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::InfiniteType: return "InfiniteType";
        case ErrorCode::MixedSurface: return "MixedSurface";
        case ErrorCode::InvalidArc: return "InvalidArc";
        case ErrorCode::ArcNotInTriangulation: return "ArcNotInTriangulation";
        case ErrorCode::NotFlippable: return "NotFlippable";
        case ErrorCode::NotATriangulation: return "NotATriangulation";
        case ErrorCode::SelfFolded: return "SelfFolded";
        case ErrorCode::UnknownSide: return "UnknownSide";
        case ErrorCode::BoundarySide: return "BoundarySide";
        case ErrorCode::EmptyComplex: return "EmptyComplex";
        case ErrorCode::OracleMismatch: return "OracleMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::Inconclusive: return "Inconclusive";
        case ErrorCode::Punctured: return "Punctured";
        case ErrorCode::UnlabeledSide: return "UnlabeledSide";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace arcx
