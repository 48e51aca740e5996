#include "okishio/dense.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "okishio/error.hpp"

namespace okishio {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw EconomyError(ErrorKind::DimensionMismatch,
                           std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require_same_size(r.size(), cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_size(rows[r].size(), cols, "ragged matrix rows");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void Matrix::set_column(std::size_t c, std::span<const double> values) {
    require_same_size(values.size(), rows_, "column length");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_size(a.rows(), b.rows(), "matrix rows");
    require_same_size(a.cols(), b.cols(), "matrix cols");
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    return a + (-1.0) * b;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_size(a.cols(), b.rows(), "matrix product");
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double ark = a(r, k);
            if (ark == 0.0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

Vector left_multiply(std::span<const double> x, const Matrix& m) {
    require_same_size(x.size(), m.rows(), "row vector times matrix");
    Vector out(m.cols(), 0.0);
    for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[k] * m(k, j);
    return out;
}

Vector right_multiply(const Matrix& m, std::span<const double> x) {
    require_same_size(x.size(), m.cols(), "matrix times column vector");
    Vector out(m.rows(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
    return out;
}

Matrix outer(std::span<const double> col, std::span<const double> row) {
    Matrix out(col.size(), row.size());
    for (std::size_t r = 0; r < col.size(); ++r)
        for (std::size_t c = 0; c < row.size(); ++c) out(r, c) = col[r] * row[c];
    return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size(), "inner product");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double sum(std::span<const double> a) {
    return std::accumulate(a.begin(), a.end(), 0.0);
}

double norm_inf(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

double norm_inf(const Matrix& m) {
    double best = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double row_sum = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) row_sum += std::abs(m(r, c));
        best = std::max(best, row_sum);
    }
    return best;
}

Vector scaled(std::span<const double> a, double s) {
    Vector out(a.begin(), a.end());
    for (double& v : out) v *= s;
    return out;
}

Vector subtract(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size(), "vector difference");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

LuDecomposition::LuDecomposition(const Matrix& a) : lu_(a), perm_(a.rows()) {
    if (!a.square()) throw EconomyError(ErrorKind::DimensionMismatch, "LU of a non-square matrix");
    const std::size_t n = a.rows();
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    const double floor = 1e-14 * std::max(1.0, norm_inf(a));
    min_pivot_ = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(lu_(r, k)) > std::abs(lu_(best, k))) best = r;
        if (best != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(best, c));
            std::swap(perm_[k], perm_[best]);
        }
        const double pivot = lu_(k, k);
        min_pivot_ = std::min(min_pivot_, std::abs(pivot));
        if (std::abs(pivot) <= floor) {
            singular_ = true;
            return;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = lu_(r, k) / pivot;
            lu_(r, k) = f;
            for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= f * lu_(k, c);
        }
    }
}

Vector LuDecomposition::solve(std::span<const double> rhs) const {
    assert(!singular_);
    const std::size_t n = lu_.rows();
    require_same_size(rhs.size(), n, "LU right-hand side");
    Vector x(n);
    for (std::size_t r = 0; r < n; ++r) {
        double s = rhs[perm_[r]];
        for (std::size_t c = 0; c < r; ++c) s -= lu_(r, c) * x[c];
        x[r] = s;
    }
    for (std::size_t r = n; r-- > 0;) {
        double s = x[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= lu_(r, c) * x[c];
        x[r] = s / lu_(r, r);
    }
    return x;
}

Vector solve_left(const Matrix& a, std::span<const double> rhs) {
    const LuDecomposition lu(a.transposed());
    if (lu.singular()) return {};
    return lu.solve(rhs);
}

}  // namespace okishio
