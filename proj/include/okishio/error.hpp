#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace okishio {

enum class ErrorKind {
    InvalidInput,
    DimensionMismatch,
    NotProductive,
    Decomposable,
    SingularSystem,
    NonPositiveValue,
    NoConvergence,
    DegenerateNormalization,
    InvalidSector,
    InvalidFraction,
    NotInB,
    Infeasible,
    SamplingExhausted,
    OracleLimit,
};

std::string_view to_string(ErrorKind kind);

class EconomyError : public std::runtime_error {
public:
    EconomyError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for errors caused by the caller's data rather than a numerical failure.
    bool is_input_error() const noexcept;

private:
    ErrorKind kind_;
};

}  // namespace okishio
