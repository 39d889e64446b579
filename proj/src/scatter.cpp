#include "cidr/scatter.hpp"

#include <string>

#include "cidr/error.hpp"
#include "cidr/linalg.hpp"

namespace cidr {

namespace {

struct ClassStats {
    std::vector<std::size_t> sizes;
    Matrix means;  // class_count x D
};

ClassStats class_stats(const Dataset& data) {
    ClassStats stats{data.class_sizes(), Matrix(data.class_count(), data.dim())};
    for (std::size_t r = 0; r < data.size(); ++r) {
        const auto row = data.features().row(r);
        auto mean = stats.means.row(data.labels()[r]);
        for (std::size_t c = 0; c < row.size(); ++c) mean[c] += row[c];
    }
    for (Label k = 0; k < data.class_count(); ++k) {
        if (stats.sizes[k] == 0) continue;
        for (double& v : stats.means.row(k)) v /= static_cast<double>(stats.sizes[k]);
    }
    return stats;
}

void require_nonempty(const ClassStats& stats, Label k) {
    if (stats.sizes.at(k) == 0) throw Error(ErrorKind::EmptyClass, "class " + std::to_string(k) + " has no rows");
}

void require_all_nonempty(const ClassStats& stats) {
    for (Label k = 0; k < stats.sizes.size(); ++k) require_nonempty(stats, k);
}

void require_class(const Dataset& data, Label k) {
    if (k >= data.class_count()) {
        throw Error(ErrorKind::InvalidArgument, "class " + std::to_string(k) + " outside [0, " +
                                                    std::to_string(data.class_count()) + ")");
    }
}

// sum over rows of class k of (x - centre)(x - centre)^T
Matrix scatter_about(const Dataset& data, Label k, std::span<const double> centre) {
    const std::size_t d = data.dim();
    Matrix s(d, d);
    std::vector<double> dev(d);
    for (std::size_t r = 0; r < data.size(); ++r) {
        if (data.labels()[r] != k) continue;
        const auto row = data.features().row(r);
        for (std::size_t c = 0; c < d; ++c) dev[c] = row[c] - centre[c];
        add_outer(s, dev, dev);
    }
    return s;
}

Matrix pairwise_from_stats(const Dataset& data, const ClassStats& stats, Label i, Label j) {
    const std::size_t d = data.dim();
    std::vector<double> midpoint(d);
    for (std::size_t c = 0; c < d; ++c) midpoint[c] = 0.5 * (stats.means(i, c) + stats.means(j, c));
    const auto ni = static_cast<double>(stats.sizes[i]);
    const auto nj = static_cast<double>(stats.sizes[j]);
    Matrix s = scatter_about(data, i, midpoint) * ni + scatter_about(data, j, midpoint) * nj;
    s *= 1.0 / (ni + nj);
    return s;
}

}  // namespace

Matrix total_scatter(const Dataset& data) {
    if (data.size() < 2) throw Error(ErrorKind::InvalidArgument, "total scatter needs at least two rows");
    const std::size_t d = data.dim();
    std::vector<double> mean(d, 0.0);
    for (std::size_t r = 0; r < data.size(); ++r) {
        const auto row = data.features().row(r);
        for (std::size_t c = 0; c < d; ++c) mean[c] += row[c];
    }
    for (double& m : mean) m /= static_cast<double>(data.size());

    Matrix centred = data.features();
    for (std::size_t r = 0; r < centred.rows(); ++r) {
        auto row = centred.row(r);
        for (std::size_t c = 0; c < d; ++c) row[c] -= mean[c];
    }
    return gram(centred);
}

std::vector<double> class_mean(const Dataset& data, Label k) {
    require_class(data, k);
    const ClassStats stats = class_stats(data);
    require_nonempty(stats, k);
    const auto row = stats.means.row(k);
    return {row.begin(), row.end()};
}

Matrix within_class_scatter(const Dataset& data) {
    const ClassStats stats = class_stats(data);
    require_all_nonempty(stats);
    Matrix s(data.dim(), data.dim());
    for (Label k = 0; k < data.class_count(); ++k) s += scatter_about(data, k, stats.means.row(k));
    s *= 1.0 / static_cast<double>(data.class_count());
    return s;
}

Matrix between_class_scatter(const Dataset& data) {
    const ClassStats stats = class_stats(data);
    require_all_nonempty(stats);
    const std::size_t d = data.dim();
    std::vector<double> grand(d, 0.0);
    for (std::size_t r = 0; r < data.size(); ++r) {
        const auto row = data.features().row(r);
        for (std::size_t c = 0; c < d; ++c) grand[c] += row[c];
    }
    for (double& g : grand) g /= static_cast<double>(data.size());

    Matrix s(d, d);
    std::vector<double> dev(d);
    for (Label k = 0; k < data.class_count(); ++k) {
        for (std::size_t c = 0; c < d; ++c) dev[c] = stats.means(k, c) - grand[c];
        add_outer(s, dev, dev);
    }
    return s;
}

Matrix pairwise_scatter(const Dataset& data, Label i, Label j) {
    require_class(data, i);
    require_class(data, j);
    if (i == j) throw Error(ErrorKind::SameClass, "pairwise scatter of class " + std::to_string(i) + " with itself");
    const ClassStats stats = class_stats(data);
    require_nonempty(stats, i);
    require_nonempty(stats, j);
    // evaluate with the smaller label first so (i,j) and (j,i) agree bit-for-bit
    return i < j ? pairwise_from_stats(data, stats, i, j) : pairwise_from_stats(data, stats, j, i);
}

Matrix cost_weighted_between_scatter(const Dataset& data, const CostMatrix& costs) {
    if (costs.class_count() != data.class_count()) {
        throw Error(ErrorKind::CostShapeMismatch, "cost matrix is " + std::to_string(costs.class_count()) +
                                                      "x" + std::to_string(costs.class_count()) + " for " +
                                                      std::to_string(data.class_count()) + " classes");
    }
    const ClassStats stats = class_stats(data);
    require_all_nonempty(stats);
    Matrix s(data.dim(), data.dim());
    for (Label i = 0; i < data.class_count(); ++i) {
        for (Label j = i + 1; j < data.class_count(); ++j) {
            const double weight = costs(i, j) + costs(j, i);
            if (weight == 0.0) continue;
            s += pairwise_from_stats(data, stats, i, j) * weight;
        }
    }
    return s;
}

double separability(std::span<const double> u, const Matrix& numer, const Matrix& denom) {
    if (norm(u) == 0.0) throw Error(ErrorKind::ZeroDirection, "separability along the zero vector");
    const double top = dot(u, mat_vec(numer, u));
    const double bottom = dot(u, mat_vec(denom, u));
    if (!(bottom > 0.0)) {
        throw Error(ErrorKind::NotPositiveDefinite, "denominator quadratic form is not positive");
    }
    return top / bottom;
}

ScatterSet scatter_set(const Dataset& data) {
    ScatterSet set{total_scatter(data), within_class_scatter(data), between_class_scatter(data), {}};
    const ClassStats stats = class_stats(data);
    for (Label i = 0; i < data.class_count(); ++i) {
        for (Label j = i + 1; j < data.class_count(); ++j) {
            set.pairwise.emplace(std::pair{i, j}, pairwise_from_stats(data, stats, i, j));
        }
    }
    return set;
}

}  // namespace cidr
