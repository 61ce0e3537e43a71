#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace z2cob {

enum class ErrorCode {
    Singular,
    DimensionTooLarge,
    DimensionMismatch,
    NotABasis,
    ZeroCharacter,
    SyntaxError,
    InvalidIncidence,
    InvalidColoring,
    InvalidGraph,
    NoMatchingMonomial,
    NoFacetPairing,
    NotInSpan,
    ZeroClass,
    CatalogInconsistent,
    ConstructionFailed,
    Unsupported,
};

std::string_view error_code_name(ErrorCode code);

// Library failures; message is "<Code>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::ZeroCharacter: return "ZeroCharacter";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidIncidence: return "InvalidIncidence";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NoMatchingMonomial: return "NoMatchingMonomial";
    case ErrorCode::NoFacetPairing: return "NoFacetPairing";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::CatalogInconsistent: return "CatalogInconsistent";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

}  // namespace z2cob
