#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cidr {

/// Dense row-major real matrix. Entries are checked to be finite whenever a
/// matrix is built from caller-supplied values.
class Matrix {
public:
    Matrix() = default;
    /// Zero-filled rows x cols matrix.
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return entries_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    double operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const noexcept {
        return {entries_.data() + r * cols_, cols_};
    }
    std::span<double> row(std::size_t r) noexcept { return {entries_.data() + r * cols_, cols_}; }
    std::vector<double> column(std::size_t c) const;

    std::span<const double> data() const noexcept { return entries_; }

    /// First `count` columns as a rows x count matrix.
    Matrix leading_columns(std::size_t count) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double scale) noexcept;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(Matrix lhs, double scale);
Matrix operator*(double scale, Matrix rhs);

/// Adds `scale * u * v^T` into `target`.
void add_outer(Matrix& target, std::span<const double> u, std::span<const double> v, double scale = 1.0);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

}  // namespace cidr
