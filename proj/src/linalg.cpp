#include "cidr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cidr/error.hpp"

namespace cidr {

namespace {

std::string shape(const Matrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square()) throw Error(ErrorKind::NotSquare, std::string(op) + " needs a square matrix, got " + shape(a));
}

void require_symmetric(const Matrix& a, const char* op) {
    require_square(a, op);
    if (!is_symmetric(a)) throw Error(ErrorKind::NotSymmetric, std::string(op) + " needs a symmetric matrix");
}

Matrix symmetrized(const Matrix& a) {
    Matrix s = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const double mean = 0.5 * (a(i, j) + a(j, i));
            s(i, j) = mean;
            s(j, i) = mean;
        }
    }
    return s;
}

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) s += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p, q); a <- J^T a J, v <- v J.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

EigenResult sorted_eigenpairs(const Matrix& diagonalised, const Matrix& vectors) {
    const std::size_t n = diagonalised.rows();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return diagonalised(i, i) > diagonalised(j, j);
    });
    EigenResult out{std::vector<double>(n), Matrix(n, n)};
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = diagonalised(order[k], order[k]);
        for (std::size_t r = 0; r < n; ++r) col[r] = vectors(r, order[k]);
        apply_sign_convention(col);
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = col[r];
    }
    return out;
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "matmul " + shape(a) + " by " + shape(b));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

std::vector<double> mat_vec(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) {
        throw Error(ErrorKind::DimensionMismatch, "mat_vec " + shape(a) + " by vector of " + std::to_string(x.size()));
    }
    std::vector<double> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), x);
    return out;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double e : a.data()) s += e * e;
    return std::sqrt(s);
}

Matrix gram(const Matrix& a) {
    const std::size_t d = a.cols();
    Matrix out(d, d);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto row = a.row(r);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i; j < d; ++j) out(i, j) += row[i] * row[j];
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < i; ++j) out(i, j) = out(j, i);
    }
    return out;
}

bool is_symmetric(const Matrix& a, double relative_tolerance) {
    if (!a.is_square()) return false;
    const double scale = frobenius_norm(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - a(j, i)) > relative_tolerance * scale) return false;
        }
    }
    return true;
}

Matrix cholesky(const Matrix& a) {
    require_symmetric(a, "cholesky");
    const std::size_t n = a.rows();
    Matrix lower(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = a(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= lower(j, k) * lower(j, k);
        if (!(pivot > 0.0)) {
            throw Error(ErrorKind::NotPositiveDefinite,
                        "pivot " + std::to_string(j) + " is " + std::to_string(pivot));
        }
        const double ljj = std::sqrt(pivot);
        lower(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
            lower(i, j) = s / ljj;
        }
    }
    return lower;
}

std::vector<double> solve_lower(const Matrix& lower, std::span<const double> b) {
    const std::size_t n = lower.rows();
    if (!lower.is_square() || b.size() != n) throw Error(ErrorKind::DimensionMismatch, "solve_lower shape");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= lower(i, k) * x[k];
        x[i] = s / lower(i, i);
    }
    return x;
}

std::vector<double> solve_lower_transpose(const Matrix& lower, std::span<const double> b) {
    const std::size_t n = lower.rows();
    if (!lower.is_square() || b.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "solve_lower_transpose shape");
    }
    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= lower(k, ii) * x[k];
        x[ii] = s / lower(ii, ii);
    }
    return x;
}

Matrix inverse_spd(const Matrix& a) {
    const Matrix lower = cholesky(a);
    const std::size_t n = a.rows();
    Matrix inv(n, n);
    std::vector<double> e(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(e.begin(), e.end(), 0.0);
        e[c] = 1.0;
        const auto x = solve_lower_transpose(lower, solve_lower(lower, e));
        for (std::size_t r = 0; r < n; ++r) inv(r, c) = x[r];
    }
    return symmetrized(inv);
}

EigenResult eig_symmetric(const Matrix& a, const JacobiOptions& options) {
    require_symmetric(a, "eig_symmetric");
    const std::size_t n = a.rows();
    Matrix work = symmetrized(a);
    Matrix vectors = Matrix::identity(n);
    const double threshold = options.relative_tolerance * frobenius_norm(work);

    for (int sweep = 0;; ++sweep) {
        if (off_diagonal_norm(work) <= threshold) break;
        if (sweep == options.max_sweeps) {
            throw Error(ErrorKind::NoConvergence,
                        "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) rotate(work, vectors, p, q);
        }
    }
    return sorted_eigenpairs(work, vectors);
}

EigenResult eig_generalized(const Matrix& b, const Matrix& m, const JacobiOptions& options) {
    require_symmetric(b, "eig_generalized");
    require_symmetric(m, "eig_generalized");
    if (b.rows() != m.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "pencil " + shape(b) + " vs " + shape(m));
    }
    const std::size_t n = b.rows();
    const Matrix lower = cholesky(m);

    // whitened = L^{-1} b L^{-T}
    Matrix half(n, n);  // L^{-1} b
    for (std::size_t c = 0; c < n; ++c) {
        const auto x = solve_lower(lower, b.column(c));
        for (std::size_t r = 0; r < n; ++r) half(r, c) = x[r];
    }
    Matrix whitened(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        // column c of L^{-1} (L^{-1} b)^T is L^{-1} applied to row c of half
        const auto x = solve_lower(lower, half.row(c));
        for (std::size_t r = 0; r < n; ++r) whitened(r, c) = x[r];
    }
    EigenResult white = eig_symmetric(symmetrized(whitened), options);

    double scale = 0.0;
    for (double v : white.eigenvalues) scale = std::max(scale, std::abs(v));
    EigenResult out{std::move(white.eigenvalues), Matrix(n, n)};
    for (double& v : out.eigenvalues) {
        if (v < 0.0 && v >= -1e-10 * scale) v = 0.0;
    }
    for (std::size_t k = 0; k < n; ++k) {
        auto v = solve_lower_transpose(lower, white.eigenvectors.column(k));
        const double len = norm(v);
        for (double& x : v) x /= len;
        apply_sign_convention(v);
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v[r];
    }
    return out;
}

void apply_sign_convention(std::span<double> v) {
    std::size_t lead = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
    }
    if (!v.empty() && v[lead] < 0.0) {
        for (double& x : v) x = -x;
    }
}

}  // namespace cidr
