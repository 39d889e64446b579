#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cidr/costmodel.hpp"
#include "cidr/dataset.hpp"
#include "cidr/matrix.hpp"

namespace cidr {

enum class Method { Pca, Lda, CostInformed };

/// "pca", "lda", "cost-informed".
std::string_view to_string(Method method) noexcept;
Method parse_method(std::string_view text);

/// A fitted linear reduction. `basis` keeps all source_dim columns in
/// descending eigenvalue order; truncation happens in transform().
struct Projection {
    Method method = Method::Pca;
    Matrix basis;
    std::vector<double> eigenvalues;

    std::size_t source_dim() const noexcept { return basis.rows(); }
};

/// Relative ridge added to the denominator scatter before a generalized
/// eigensolve: kRidge * (trace / D) * I, or kRidge * I for a zero trace.
inline constexpr double kRidge = 1e-8;
/// Eigenvalues below this fraction of the largest are reported as zero.
inline constexpr double kEigenvalueFloor = 1e-10;

Matrix ridge_regularized(const Matrix& denominator);

Projection fit_pca(const Dataset& data);
Projection fit_lda(const Dataset& data);
Projection fit_cost_informed(const Dataset& data, const CostMatrix& costs);

/// Dispatch on method; `costs` is required for Method::CostInformed.
Projection fit(Method method, const Dataset& data, const CostMatrix* costs = nullptr);

/// X * basis[:, 0..target_dim). Labels pass through.
Dataset transform(const Projection& projection, const Dataset& data, std::size_t target_dim);
Matrix transform_features(const Projection& projection, const Matrix& features, std::size_t target_dim);

}  // namespace cidr
