#pragma once

#include <cstddef>
#include <string>

#include "okishio/dense.hpp"

namespace okishio {

/// Absolute tolerance for equality comparisons unless an operation states otherwise.
inline constexpr double kEqualityTolerance = 1e-9;
/// Required margin below one for the spectral radius of A.
inline constexpr double kProductivityMargin = 1e-12;

/// Outcome of the productivity and indecomposability checks on an input matrix.
struct ProductivityDiagnosis {
    double spectral_radius = 0.0;
    bool productive = false;
    bool strongly_connected = false;
    bool pass = false;
};

/// Spectral radius plus strong connectivity of the nonzero pattern. Always
/// returns a diagnosis; never throws for square nonnegative input.
ProductivityDiagnosis check_productive_indecomposable(const Matrix& a);

/// Circulating-capital technology (A, L).
///
/// Column i of A is the input recipe of sector i, L_i its direct labor per
/// unit of output. Construction validates A >= 0, L >> 0, productivity
/// (rho(A) < 1 - 1e-12) and indecomposability, throwing EconomyError.
class Technology {
public:
    Technology(Matrix inputs, Vector labor);

    std::size_t sectors() const { return labor_.size(); }
    const Matrix& inputs() const { return inputs_; }
    const Vector& labor() const { return labor_; }

    /// Spectral radius of A, computed once on construction.
    double input_spectral_radius() const { return rho_; }

    friend bool operator==(const Technology& a, const Technology& b) {
        return a.inputs_ == b.inputs_ && a.labor_ == b.labor_;
    }

private:
    Matrix inputs_;
    Vector labor_;
    double rho_ = 0.0;
};

ProductivityDiagnosis check_productive_indecomposable(const Technology& tech);

/// Real wage bundle: commodities per unit of labor hired. Nonnegative, not zero.
class WageBundle {
public:
    explicit WageBundle(Vector quantities);

    std::size_t size() const { return quantities_.size(); }
    const Vector& quantities() const { return quantities_; }
    double operator[](std::size_t i) const { return quantities_[i]; }

    friend bool operator==(const WageBundle&, const WageBundle&) = default;

private:
    Vector quantities_;
};

struct ValueSystem {
    Vector values;              ///< labor values, one per commodity
    double bundle_value = 0.0;  ///< value of the wage bundle
    double exploitation = 0.0;
    /// The bundle is worth more than a working day (value > 1).
    bool negative_exploitation = false;
};

/// Labor values solving values (I - A) = L by LU with partial pivoting.
/// Throws SingularSystem (with rho(A) in the message) if I - A is singular.
Vector labor_values(const Technology& tech);

/// Residual || values (I - A) - L ||_inf.
double value_accounting_residual(const Technology& tech, const Vector& values);

double value_of_bundle(const Vector& values, const WageBundle& bundle);

/// (1 - vb) / vb. Throws NonPositiveValue for vb <= 0; returns a negative
/// rate for vb > 1 (callers flag that case, it is not an error here).
double exploitation_rate(double bundle_value);

ValueSystem value_system(const Technology& tech, const WageBundle& bundle);

}  // namespace okishio
