#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cidr/costmodel.hpp"
#include "cidr/dataset.hpp"
#include "cidr/matrix.hpp"

namespace cidr {

/// All scatter matrices for one labelled dataset. `pairwise` is keyed by
/// (i, j) with i < j.
struct ScatterSet {
    Matrix total;
    Matrix within;
    Matrix between;
    std::map<std::pair<Label, Label>, Matrix> pairwise;
};

/// Mean-centred total scatter (X - mean)^T (X - mean). Requires N >= 2.
Matrix total_scatter(const Dataset& data);

std::vector<double> class_mean(const Dataset& data, Label k);

/// Average over classes of each class's scatter about its own centroid.
Matrix within_class_scatter(const Dataset& data);

/// Sum over classes of (centroid - grand mean) outer products.
Matrix between_class_scatter(const Dataset& data);

/// n-weighted average of classes i and j scattered about the unweighted
/// midpoint of their centroids:
///   (n_i S_i + n_j S_j) / (n_i + n_j),  S_c = (X_c - m)^T (X_c - m),
///   m = (mean_i + mean_j) / 2.
Matrix pairwise_scatter(const Dataset& data, Label i, Label j);

/// sum_{i,j} c(i,j) * pairwise(i,j). The diagonal never contributes, so this
/// is evaluated as sum_{i<j} (c(i,j) + c(j,i)) * pairwise(i,j).
Matrix cost_weighted_between_scatter(const Dataset& data, const CostMatrix& costs);

/// Rayleigh quotient (u^T numer u) / (u^T denom u).
double separability(std::span<const double> u, const Matrix& numer, const Matrix& denom);

/// total, within, between (centroid form) and every pairwise matrix.
ScatterSet scatter_set(const Dataset& data);

}  // namespace cidr
