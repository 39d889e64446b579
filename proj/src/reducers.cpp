#include "cidr/reducers.hpp"

#include <algorithm>
#include <string>

#include "cidr/error.hpp"
#include "cidr/linalg.hpp"
#include "cidr/scatter.hpp"

namespace cidr {

namespace {

void require_supervised(const Dataset& data) {
    if (data.class_count() < 2) throw Error(ErrorKind::InvalidArgument, "supervised fit needs at least two classes");
}

// Zero out eigenvalues that are numerically indistinguishable from the rank
// deficiency of the between-class scatter. Vectors keep their order.
void clamp_trailing(std::vector<double>& eigenvalues) {
    const double top = eigenvalues.empty() ? 0.0 : eigenvalues.front();
    for (double& v : eigenvalues) {
        if (top <= 0.0 || v < kEigenvalueFloor * top) v = 0.0;
    }
}

Projection discriminant(Method method, const Matrix& numerator, const Matrix& denominator) {
    EigenResult eig = eig_generalized(numerator, ridge_regularized(denominator));
    clamp_trailing(eig.eigenvalues);
    return {method, std::move(eig.eigenvectors), std::move(eig.eigenvalues)};
}

}  // namespace

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::Pca: return "pca";
        case Method::Lda: return "lda";
        case Method::CostInformed: return "cost-informed";
    }
    return "unknown";
}

Method parse_method(std::string_view text) {
    if (text == "pca") return Method::Pca;
    if (text == "lda") return Method::Lda;
    if (text == "cost-informed") return Method::CostInformed;
    throw Error(ErrorKind::InvalidArgument,
                "unknown method '" + std::string(text) + "' (expected pca, lda or cost-informed)");
}

Matrix ridge_regularized(const Matrix& denominator) {
    const std::size_t d = denominator.rows();
    double trace = 0.0;
    for (std::size_t i = 0; i < d; ++i) trace += denominator(i, i);
    const double ridge = trace > 0.0 ? kRidge * trace / static_cast<double>(d) : kRidge;
    Matrix out = denominator;
    for (std::size_t i = 0; i < d; ++i) out(i, i) += ridge;
    return out;
}

Projection fit_pca(const Dataset& data) {
    EigenResult eig = eig_symmetric(total_scatter(data));
    return {Method::Pca, std::move(eig.eigenvectors), std::move(eig.eigenvalues)};
}

Projection fit_lda(const Dataset& data) {
    require_supervised(data);
    return discriminant(Method::Lda, between_class_scatter(data), within_class_scatter(data));
}

Projection fit_cost_informed(const Dataset& data, const CostMatrix& costs) {
    require_supervised(data);
    return discriminant(Method::CostInformed, cost_weighted_between_scatter(data, costs), total_scatter(data));
}

Projection fit(Method method, const Dataset& data, const CostMatrix* costs) {
    switch (method) {
        case Method::Pca: return fit_pca(data);
        case Method::Lda: return fit_lda(data);
        case Method::CostInformed:
            if (costs == nullptr) throw Error(ErrorKind::MissingCostMatrix, "cost-informed fit needs a cost matrix");
            return fit_cost_informed(data, *costs);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown method");
}

Matrix transform_features(const Projection& projection, const Matrix& features, std::size_t target_dim) {
    if (features.cols() != projection.source_dim()) {
        throw Error(ErrorKind::DimensionMismatch, "data has " + std::to_string(features.cols()) +
                                                      " features, projection expects " +
                                                      std::to_string(projection.source_dim()));
    }
    if (target_dim < 1 || target_dim > projection.source_dim()) {
        throw Error(ErrorKind::BadTargetDim, "target dimension " + std::to_string(target_dim) + " not in [1, " +
                                                 std::to_string(projection.source_dim()) + "]");
    }
    return matmul(features, projection.basis.leading_columns(target_dim));
}

Dataset transform(const Projection& projection, const Dataset& data, std::size_t target_dim) {
    return Dataset(transform_features(projection, data.features(), target_dim),
                   {data.labels().begin(), data.labels().end()}, data.class_count());
}

}  // namespace cidr
