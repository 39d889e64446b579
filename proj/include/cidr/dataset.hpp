#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cidr/matrix.hpp"

namespace cidr {

using Label = std::size_t;

/// Feature rows paired with class labels in [0, class_count).
class Dataset {
public:
    Dataset() = default;
    Dataset(Matrix features, std::vector<Label> labels, std::size_t class_count);

    const Matrix& features() const noexcept { return features_; }
    std::span<const Label> labels() const noexcept { return labels_; }
    std::size_t class_count() const noexcept { return class_count_; }
    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t dim() const noexcept { return features_.cols(); }

    std::vector<std::size_t> class_sizes() const;
    /// Row indices of class k in dataset order.
    std::vector<std::size_t> class_rows(Label k) const;

    /// Rows `indices` in the given order.
    Dataset subset(std::span<const std::size_t> indices) const;

private:
    Matrix features_;
    std::vector<Label> labels_;
    std::size_t class_count_ = 0;
};

}  // namespace cidr
