#include "okishio/linear_economy.hpp"

#include <cmath>
#include <sstream>

#include "okishio/error.hpp"
#include "okishio/perron.hpp"

namespace okishio {

namespace {

std::string describe(double value) {
    std::ostringstream os;
    os.precision(10);
    os << value;
    return os.str();
}

void require_finite_nonnegative(const Matrix& a) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const double v = a(r, c);
            if (!std::isfinite(v) || v < 0.0) {
                throw EconomyError(ErrorKind::InvalidInput, "input matrix A must be nonnegative and finite; A[" +
                                                                std::to_string(r) + "][" + std::to_string(c) +
                                                                "] = " + describe(v));
            }
        }
}

}  // namespace

ProductivityDiagnosis check_productive_indecomposable(const Matrix& a) {
    if (!a.square() || a.rows() == 0)
        throw EconomyError(ErrorKind::DimensionMismatch, "input matrix must be square and non-empty");
    require_finite_nonnegative(a);

    ProductivityDiagnosis d;
    d.spectral_radius = spectral_radius(a);
    d.productive = d.spectral_radius < 1.0 - kProductivityMargin;
    d.strongly_connected = is_strongly_connected(a);
    d.pass = d.productive && d.strongly_connected;
    return d;
}

ProductivityDiagnosis check_productive_indecomposable(const Technology& tech) {
    return check_productive_indecomposable(tech.inputs());
}

Technology::Technology(Matrix inputs, Vector labor) : inputs_(std::move(inputs)), labor_(std::move(labor)) {
    if (!inputs_.square() || inputs_.rows() != labor_.size() || labor_.empty()) {
        throw EconomyError(ErrorKind::DimensionMismatch,
                           "A must be n x n and L of length n (A is " + std::to_string(inputs_.rows()) + " x " +
                               std::to_string(inputs_.cols()) + ", L has " + std::to_string(labor_.size()) + ")");
    }
    for (std::size_t i = 0; i < labor_.size(); ++i) {
        if (!std::isfinite(labor_[i]) || labor_[i] <= 0.0) {
            throw EconomyError(ErrorKind::InvalidInput, "labor vector L must be strictly positive; L[" +
                                                            std::to_string(i) + "] = " + describe(labor_[i]));
        }
    }
    const ProductivityDiagnosis d = check_productive_indecomposable(inputs_);
    if (!d.productive) {
        throw EconomyError(ErrorKind::NotProductive,
                           "input matrix is not productive (spectral radius " + describe(d.spectral_radius) + ")");
    }
    if (!d.strongly_connected) {
        throw EconomyError(ErrorKind::Decomposable, "input matrix is decomposable (sector graph not strongly connected)");
    }
    rho_ = d.spectral_radius;
}

WageBundle::WageBundle(Vector quantities) : quantities_(std::move(quantities)) {
    if (quantities_.empty()) throw EconomyError(ErrorKind::DimensionMismatch, "wage bundle is empty");
    bool any_positive = false;
    for (std::size_t i = 0; i < quantities_.size(); ++i) {
        const double v = quantities_[i];
        if (!std::isfinite(v) || v < 0.0) {
            throw EconomyError(ErrorKind::InvalidInput, "wage bundle b must be nonnegative; b[" + std::to_string(i) +
                                                            "] = " + describe(v));
        }
        any_positive = any_positive || v > 0.0;
    }
    if (!any_positive) throw EconomyError(ErrorKind::InvalidInput, "wage bundle b must have a positive element");
}

Vector labor_values(const Technology& tech) {
    const std::size_t n = tech.sectors();
    Vector values = solve_left(Matrix::identity(n) - tech.inputs(), tech.labor());
    if (values.empty()) {
        throw EconomyError(ErrorKind::SingularSystem,
                           "I - A is numerically singular (spectral radius " +
                               describe(tech.input_spectral_radius()) + ")");
    }
    return values;
}

double value_accounting_residual(const Technology& tech, const Vector& values) {
    const Vector lhs = left_multiply(values, Matrix::identity(tech.sectors()) - tech.inputs());
    return norm_inf(subtract(lhs, tech.labor()));
}

double value_of_bundle(const Vector& values, const WageBundle& bundle) {
    return dot(values, bundle.quantities());
}

double exploitation_rate(double bundle_value) {
    if (!(bundle_value > 0.0)) {
        throw EconomyError(ErrorKind::NonPositiveValue,
                           "value of the wage bundle must be positive, got " + describe(bundle_value));
    }
    return (1.0 - bundle_value) / bundle_value;
}

ValueSystem value_system(const Technology& tech, const WageBundle& bundle) {
    ValueSystem vs;
    vs.values = labor_values(tech);
    vs.bundle_value = value_of_bundle(vs.values, bundle);
    vs.exploitation = exploitation_rate(vs.bundle_value);
    vs.negative_exploitation = vs.bundle_value > 1.0;
    return vs;
}

}  // namespace okishio
