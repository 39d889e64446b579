#include "cidr/costmodel.hpp"

#include <string>

#include "cidr/error.hpp"

namespace cidr {

CostMatrix validate_cost_matrix(const Matrix& raw) {
    if (!raw.is_square() || raw.rows() == 0) {
        throw Error(ErrorKind::NotSquare, "cost matrix is " + std::to_string(raw.rows()) + "x" +
                                              std::to_string(raw.cols()));
    }
    for (std::size_t i = 0; i < raw.rows(); ++i) {
        for (std::size_t j = 0; j < raw.cols(); ++j) {
            const double c = raw(i, j);
            const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (i == j && c != 0.0) throw Error(ErrorKind::NonzeroDiagonal, "cost " + at + " = " + std::to_string(c));
            if (c < 0.0) throw Error(ErrorKind::NegativeCost, "cost " + at + " = " + std::to_string(c));
        }
    }
    return CostMatrix(raw);
}

CostMatrix CostMatrix::scaled(double factor) const {
    return validate_cost_matrix(costs_ * factor);
}

CostMatrix uniform_cost_matrix(std::size_t class_count, double cost) {
    Matrix raw(class_count, class_count);
    for (std::size_t i = 0; i < class_count; ++i) {
        for (std::size_t j = 0; j < class_count; ++j) raw(i, j) = i == j ? 0.0 : cost;
    }
    return validate_cost_matrix(raw);
}

CostMatrix case_study_cost_matrix() {
    Matrix raw = uniform_cost_matrix(9).matrix();
    // missed critical states
    raw(2, 0) = 50.0;
    raw(6, 4) = 50.0;
    raw(7, 3) = 50.0;
    raw(8, 1) = 50.0;
    // unnecessary interventions
    raw(0, 2) = 10.0;
    raw(4, 6) = 10.0;
    raw(3, 7) = 10.0;
    raw(1, 8) = 10.0;
    raw(7, 8) = 25.0;
    raw(8, 7) = 25.0;
    return validate_cost_matrix(raw);
}

double total_cost(const ConfusionMatrix& confusion, const CostMatrix& costs) {
    if (confusion.class_count() != costs.class_count()) {
        throw Error(ErrorKind::ShapeMismatch, "confusion matrix has " + std::to_string(confusion.class_count()) +
                                                  " classes, cost matrix " + std::to_string(costs.class_count()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < costs.class_count(); ++i) {
        for (std::size_t j = 0; j < costs.class_count(); ++j) {
            sum += static_cast<double>(confusion(i, j)) * costs(i, j);
        }
    }
    return sum;
}

}  // namespace cidr
