#include "cidr/dataset.hpp"

#include <algorithm>
#include <string>

#include "cidr/error.hpp"

namespace cidr {

Dataset::Dataset(Matrix features, std::vector<Label> labels, std::size_t class_count)
    : features_(std::move(features)), labels_(std::move(labels)), class_count_(class_count) {
    if (features_.rows() != labels_.size()) {
        throw Error(ErrorKind::DimensionMismatch, std::to_string(features_.rows()) + " feature rows but " +
                                                      std::to_string(labels_.size()) + " labels");
    }
    if (labels_.empty()) throw Error(ErrorKind::EmptyInput, "dataset has no rows");
    if (class_count_ == 0) throw Error(ErrorKind::InvalidArgument, "class_count must be positive");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] >= class_count_) {
            throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(i) + " has label " +
                                                        std::to_string(labels_[i]) + " outside [0, " +
                                                        std::to_string(class_count_) + ")");
        }
    }
}

std::vector<std::size_t> Dataset::class_sizes() const {
    std::vector<std::size_t> sizes(class_count_, 0);
    for (Label y : labels_) ++sizes[y];
    return sizes;
}

std::vector<std::size_t> Dataset::class_rows(Label k) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == k) rows.push_back(i);
    }
    return rows;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
    Matrix features(indices.size(), dim());
    std::vector<Label> labels(indices.size());
    for (std::size_t r = 0; r < indices.size(); ++r) {
        const std::size_t src = indices[r];
        if (src >= size()) throw Error(ErrorKind::InvalidArgument, "subset index out of range");
        const auto from = features_.row(src);
        auto to = features.row(r);
        std::copy(from.begin(), from.end(), to.begin());
        labels[r] = labels_[src];
    }
    return Dataset(std::move(features), std::move(labels), class_count_);
}

}  // namespace cidr
