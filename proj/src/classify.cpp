#include "cidr/classify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cidr/error.hpp"

namespace cidr {

ConfusionMatrix::ConfusionMatrix(std::size_t class_count)
    : class_count_(class_count), counts_(class_count * class_count, 0) {}

void ConfusionMatrix::record(Label truth, Label predicted) {
    if (truth >= class_count_ || predicted >= class_count_) {
        throw Error(ErrorKind::InvalidArgument, "label outside confusion matrix");
    }
    ++counts_[truth * class_count_ + predicted];
}

std::uint64_t ConfusionMatrix::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t ConfusionMatrix::row_total(Label truth) const noexcept {
    const auto first = counts_.begin() + static_cast<std::ptrdiff_t>(truth * class_count_);
    return std::accumulate(first, first + static_cast<std::ptrdiff_t>(class_count_), std::uint64_t{0});
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
    if (other.class_count_ != class_count_) throw Error(ErrorKind::ShapeMismatch, "confusion class counts differ");
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    return *this;
}

KnnModel::KnnModel(Matrix train_features, std::vector<Label> train_labels, std::size_t k, std::size_t class_count)
    : train_features_(std::move(train_features)),
      train_labels_(std::move(train_labels)),
      k_(k),
      class_count_(class_count) {
    if (train_features_.rows() != train_labels_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "training features and labels differ in length");
    }
    if (k_ < 1 || k_ > train_labels_.size()) {
        throw Error(ErrorKind::InvalidArgument, "k = " + std::to_string(k_) + " with " +
                                                    std::to_string(train_labels_.size()) + " training points");
    }
    for (Label y : train_labels_) {
        if (y >= class_count_) throw Error(ErrorKind::InvalidArgument, "training label outside class range");
    }
}

KnnModel::KnnModel(const Dataset& train, std::size_t k)
    : KnnModel(train.features(), {train.labels().begin(), train.labels().end()}, k, train.class_count()) {}

namespace {

struct Neighbour {
    double distance;
    std::size_t index;
    bool operator<(const Neighbour& o) const noexcept {
        return distance < o.distance || (distance == o.distance && index < o.index);
    }
};

// Scratch buffers reused across queries by one thread.
struct Workspace {
    std::vector<Neighbour> neighbours;
    std::vector<std::size_t> votes;
};

Label predict_one(const KnnModel& model, std::span<const double> query, Workspace& ws) {
    const Matrix& train = model.train_features();
    const std::size_t n = train.rows();
    const std::size_t d = train.cols();
    ws.neighbours.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = train.row(i);
        double s = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            const double diff = row[c] - query[c];
            s += diff * diff;
        }
        ws.neighbours[i] = {s, i};
    }
    const auto kth = ws.neighbours.begin() + static_cast<std::ptrdiff_t>(model.k());
    std::partial_sort(ws.neighbours.begin(), kth, ws.neighbours.end());

    ws.votes.assign(model.class_count(), 0);
    for (auto it = ws.neighbours.begin(); it != kth; ++it) ++ws.votes[model.train_labels()[it->index]];
    // max_element returns the first maximum, i.e. the smallest label on ties
    return static_cast<Label>(std::max_element(ws.votes.begin(), ws.votes.end()) - ws.votes.begin());
}

void require_query_dim(const KnnModel& model, std::size_t dim) {
    if (dim != model.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "query has " + std::to_string(dim) + " features, model " +
                                                      std::to_string(model.dim()));
    }
}

ConfusionMatrix tally(const Dataset& test, const std::vector<Label>& predicted, std::size_t class_count) {
    if (test.class_count() > class_count) {
        throw Error(ErrorKind::ShapeMismatch, "test set has more classes than the model");
    }
    ConfusionMatrix cm(class_count);
    for (std::size_t i = 0; i < predicted.size(); ++i) cm.record(test.labels()[i], predicted[i]);
    return cm;
}

}  // namespace

Label knn_predict(const KnnModel& model, std::span<const double> query) {
    require_query_dim(model, query.size());
    Workspace ws;
    return predict_one(model, query, ws);
}

std::vector<Label> knn_predict_all_serial(const KnnModel& model, const Matrix& queries) {
    require_query_dim(model, queries.cols());
    std::vector<Label> out(queries.rows());
    Workspace ws;
    for (std::size_t q = 0; q < queries.rows(); ++q) out[q] = predict_one(model, queries.row(q), ws);
    return out;
}

std::vector<Label> knn_predict_all(const KnnModel& model, const Matrix& queries) {
    require_query_dim(model, queries.cols());
    const auto n = static_cast<std::ptrdiff_t>(queries.rows());
    std::vector<Label> out(queries.rows());
#pragma omp parallel
    {
        Workspace ws;
#pragma omp for schedule(static)
        for (std::ptrdiff_t q = 0; q < n; ++q) {
            out[static_cast<std::size_t>(q)] = predict_one(model, queries.row(static_cast<std::size_t>(q)), ws);
        }
    }
    return out;
}

ConfusionMatrix confusion(const KnnModel& model, const Dataset& test) {
    return tally(test, knn_predict_all(model, test.features()), model.class_count());
}

ConfusionMatrix confusion_serial(const KnnModel& model, const Dataset& test) {
    return tally(test, knn_predict_all_serial(model, test.features()), model.class_count());
}

}  // namespace cidr
