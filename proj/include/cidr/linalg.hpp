#pragma once

#include <span>
#include <vector>

#include "cidr/matrix.hpp"

namespace cidr {

/// Eigenpairs in descending eigenvalue order. Column i of `eigenvectors`
/// belongs to `eigenvalues[i]`; every column has unit Euclidean norm and its
/// largest-magnitude component (lowest index on ties) is nonnegative.
struct EigenResult {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

struct JacobiOptions {
    int max_sweeps = 100;
    /// Converged once the off-diagonal norm falls below this fraction of the
    /// input's Frobenius norm.
    double relative_tolerance = 1e-12;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
std::vector<double> mat_vec(const Matrix& a, std::span<const double> x);
double frobenius_norm(const Matrix& a);

/// a^T a, computed directly without forming the transpose.
Matrix gram(const Matrix& a);

bool is_symmetric(const Matrix& a, double relative_tolerance = 1e-10);

/// Lower-triangular L with a = L L^T. Throws NotPositiveDefinite on the first
/// pivot that is not strictly positive.
Matrix cholesky(const Matrix& a);

/// Solves L x = b for lower-triangular L.
std::vector<double> solve_lower(const Matrix& lower, std::span<const double> b);
/// Solves L^T x = b for lower-triangular L.
std::vector<double> solve_lower_transpose(const Matrix& lower, std::span<const double> b);

/// Inverse of a symmetric positive-definite matrix through its Cholesky factor.
Matrix inverse_spd(const Matrix& a);

/// Cyclic Jacobi eigensolver for symmetric matrices.
EigenResult eig_symmetric(const Matrix& a, const JacobiOptions& options = {});

/// Symmetric-definite pencil b v = lambda m v. Solved by whitening with the
/// Cholesky factor of m, so the spectrum is real. Eigenvectors are
/// renormalised to unit Euclidean norm, not m-norm.
EigenResult eig_generalized(const Matrix& b, const Matrix& m, const JacobiOptions& options = {});

/// Flips `v` so its largest-magnitude component is nonnegative.
void apply_sign_convention(std::span<double> v);

}  // namespace cidr
