#include "okishio/error.hpp"

namespace okishio {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotProductive: return "NotProductive";
        case ErrorKind::Decomposable: return "Decomposable";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::NonPositiveValue: return "NonPositiveValue";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::DegenerateNormalization: return "DegenerateNormalization";
        case ErrorKind::InvalidSector: return "InvalidSector";
        case ErrorKind::InvalidFraction: return "InvalidFraction";
        case ErrorKind::NotInB: return "NotInB";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::SamplingExhausted: return "SamplingExhausted";
        case ErrorKind::OracleLimit: return "OracleLimit";
    }
    return "Unknown";
}

bool EconomyError::is_input_error() const noexcept {
    switch (kind_) {
        case ErrorKind::NoConvergence:
        case ErrorKind::DegenerateNormalization:
        case ErrorKind::SamplingExhausted:
            return false;
        default:
            return true;
    }
}

}  // namespace okishio
