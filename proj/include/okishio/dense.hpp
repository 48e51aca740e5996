#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace okishio {

using Vector = std::vector<double>;

/// Small dense square-or-rectangular matrix, row-major.
///
/// Economies in this library are column-oriented (column i of A is the
/// input recipe of sector i), so `(row, col)` = `(commodity, sector)`.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const double> values);
    Vector row(std::size_t r) const;

    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Row vector times matrix: (x M)_j = sum_k x_k M_kj.
Vector left_multiply(std::span<const double> x, const Matrix& m);
/// Matrix times column vector.
Vector right_multiply(const Matrix& m, std::span<const double> x);
/// Column vector times row vector.
Matrix outer(std::span<const double> col, std::span<const double> row);

double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double norm_inf(std::span<const double> a);
double norm_inf(const Matrix& m);
Vector scaled(std::span<const double> a, double s);
Vector subtract(std::span<const double> a, std::span<const double> b);

/// LU factorization with partial pivoting of a square matrix.
class LuDecomposition {
public:
    explicit LuDecomposition(const Matrix& a);

    /// False when some pivot fell below `pivot_floor * ||A||_inf`.
    bool singular() const { return singular_; }
    double min_abs_pivot() const { return min_pivot_; }

    /// Solves A x = rhs.
    Vector solve(std::span<const double> rhs) const;

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    bool singular_ = false;
    double min_pivot_ = 0.0;
};

/// Solves the row-vector system x A = rhs, i.e. A^T x^T = rhs^T.
/// Returns an empty vector when A is numerically singular.
Vector solve_left(const Matrix& a, std::span<const double> rhs);

}  // namespace okishio
