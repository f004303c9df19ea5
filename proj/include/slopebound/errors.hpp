#pragma once

#include <stdexcept>
#include <string>

namespace slopebound {

enum class ErrorCode {
    degenerate_basis,
    precision_exhausted,
    zero_vector,
    invalid_topology,
    nonpositive_area,
    zero_u,
    inconsistent,
    invalid_argument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::degenerate_basis: return "DEGENERATE_BASIS";
        case ErrorCode::precision_exhausted: return "PRECISION_EXHAUSTED";
        case ErrorCode::zero_vector: return "ZERO_VECTOR";
        case ErrorCode::invalid_topology: return "INVALID_TOPOLOGY";
        case ErrorCode::nonpositive_area: return "NONPOSITIVE_AREA";
        case ErrorCode::zero_u: return "ZERO_U";
        case ErrorCode::inconsistent: return "INCONSISTENT";
        case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace slopebound
