#include "cidr/matrix.hpp"

#include <cmath>
#include <string>

#include "cidr/error.hpp"

namespace cidr {

namespace {

void require_finite(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error(ErrorKind::NonFinite, "matrix entry " + std::to_string(i) + " is not finite");
        }
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix expects " + std::to_string(rows_ * cols_) +
                                                      " entries, got " + std::to_string(entries_.size()));
    }
    require_finite(entries_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    require_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    require_finite(values);
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

std::vector<double> Matrix::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::leading_columns(std::size_t count) const {
    if (count > cols_) {
        throw Error(ErrorKind::DimensionMismatch, "requested " + std::to_string(count) + " of " +
                                                      std::to_string(cols_) + " columns");
    }
    Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, c);
    }
    return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(double scale) noexcept {
    for (double& e : entries_) e *= scale;
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Matrix lhs, double scale) { return lhs *= scale; }
Matrix operator*(double scale, Matrix rhs) { return rhs *= scale; }

void add_outer(Matrix& target, std::span<const double> u, std::span<const double> v, double scale) {
    if (target.rows() != u.size() || target.cols() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "outer product does not match target shape");
    }
    for (std::size_t r = 0; r < u.size(); ++r) {
        const double ur = scale * u[r];
        for (std::size_t c = 0; c < v.size(); ++c) target(r, c) += ur * v[c];
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "dot of lengths " + std::to_string(a.size()) + " and " +
                                                      std::to_string(b.size()));
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace cidr
