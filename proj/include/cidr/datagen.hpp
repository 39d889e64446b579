#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cidr/dataset.hpp"
#include "cidr/matrix.hpp"
#include "cidr/rng.hpp"

namespace cidr {

/// Gaussian classes with inverse-Wishart covariances, one class per mean.
struct GenerativeSpec {
    std::size_t dim = 3;
    std::vector<std::vector<double>> class_means;
    Matrix iw_scale;
    double iw_dof = 8.0;
    std::size_t points_per_class = 100;

    /// Eight classes on the vertices of an edge-1 cube centred at the origin
    /// (lexicographic vertex order, x slowest) plus a ninth at the centre;
    /// covariances ~ W^-1(0.15 I, 8).
    static GenerativeSpec case_study(std::size_t points_per_class = 100);

    /// Throws InvalidArgument / BadDof when the spec is unusable.
    void validate() const;
};

/// Draws W ~ Wishart(scale^-1, dof) by the Bartlett decomposition and
/// returns W^-1, so the result has mean scale / (dof - p - 1).
Matrix sample_inverse_wishart(const Matrix& scale, double dof, Engine& rng);

/// n rows of mean + L z, L = cholesky(cov), z standard normal.
Matrix sample_gaussian(std::span<const double> mean, const Matrix& cov, std::size_t n, Engine& rng);

struct GeneratedData {
    Dataset data;
    std::vector<Matrix> covariances;
};

/// Class-major rows, labels in class order. Class k draws its covariance and
/// then its points from substream seed.child(k).
GeneratedData generate_case_study(const GenerativeSpec& spec, const RngSeed& seed);

/// Exactly `per_class_train` rows of each class go to train, sampled without
/// replacement; the rest go to test. Both halves keep the original row order.
std::pair<Dataset, Dataset> stratified_split(const Dataset& data, std::size_t per_class_train, Engine& rng);

}  // namespace cidr
