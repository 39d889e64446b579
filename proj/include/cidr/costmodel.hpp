#pragma once

#include <cstddef>

#include "cidr/classify.hpp"
#include "cidr/matrix.hpp"

namespace cidr {

/// Misclassification costs indexed [true label][predicted label]: square,
/// finite, nonnegative, zero diagonal. Only obtainable through validation.
class CostMatrix {
public:
    CostMatrix() = default;

    std::size_t class_count() const noexcept { return costs_.rows(); }
    double operator()(Label truth, Label predicted) const noexcept { return costs_(truth, predicted); }
    const Matrix& matrix() const noexcept { return costs_; }

    CostMatrix scaled(double factor) const;

    friend CostMatrix validate_cost_matrix(const Matrix& raw);
    friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

private:
    explicit CostMatrix(Matrix costs) : costs_(std::move(costs)) {}
    Matrix costs_;
};

CostMatrix validate_cost_matrix(const Matrix& raw);

/// Unit cost for every misclassification.
CostMatrix uniform_cost_matrix(std::size_t class_count, double cost = 1.0);

/// The nine-class case-study cost table: unit costs except
/// (2,0) (6,4) (7,3) (8,1) -> 50, the reverse pairs -> 10, (7,8) (8,7) -> 25.
CostMatrix case_study_cost_matrix();

/// Grand sum of counts[i][j] * costs[i][j].
double total_cost(const ConfusionMatrix& confusion, const CostMatrix& costs);

}  // namespace cidr
