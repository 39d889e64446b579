#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cidr/dataset.hpp"
#include "cidr/matrix.hpp"

namespace cidr {

/// Counts indexed [true label][predicted label].
class ConfusionMatrix {
public:
    ConfusionMatrix() = default;
    explicit ConfusionMatrix(std::size_t class_count);

    std::size_t class_count() const noexcept { return class_count_; }
    std::uint64_t operator()(Label truth, Label predicted) const noexcept {
        return counts_[truth * class_count_ + predicted];
    }
    void record(Label truth, Label predicted);
    std::uint64_t total() const noexcept;
    std::uint64_t row_total(Label truth) const noexcept;

    ConfusionMatrix& operator+=(const ConfusionMatrix& other);
    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

private:
    std::size_t class_count_ = 0;
    std::vector<std::uint64_t> counts_;
};

/// Brute-force Euclidean k-nearest-neighbour classifier.
///
/// Neighbour selection ties (equal distance) go to the lower training index;
/// vote ties go to the smaller label.
class KnnModel {
public:
    KnnModel(Matrix train_features, std::vector<Label> train_labels, std::size_t k, std::size_t class_count);
    KnnModel(const Dataset& train, std::size_t k);

    const Matrix& train_features() const noexcept { return train_features_; }
    std::span<const Label> train_labels() const noexcept { return train_labels_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t class_count() const noexcept { return class_count_; }
    std::size_t dim() const noexcept { return train_features_.cols(); }

private:
    Matrix train_features_;
    std::vector<Label> train_labels_;
    std::size_t k_;
    std::size_t class_count_;
};

Label knn_predict(const KnnModel& model, std::span<const double> query);

/// Serial reference: one prediction per query row.
std::vector<Label> knn_predict_all_serial(const KnnModel& model, const Matrix& queries);
/// OpenMP kernel over query rows; output identical to the serial reference.
std::vector<Label> knn_predict_all(const KnnModel& model, const Matrix& queries);

ConfusionMatrix confusion(const KnnModel& model, const Dataset& test);
ConfusionMatrix confusion_serial(const KnnModel& model, const Dataset& test);

}  // namespace cidr
