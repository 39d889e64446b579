#include "cidr/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cidr/error.hpp"
#include "cidr/linalg.hpp"

namespace cidr {

GenerativeSpec GenerativeSpec::case_study(std::size_t points_per_class) {
    GenerativeSpec spec;
    spec.dim = 3;
    for (double x : {-0.5, 0.5}) {
        for (double y : {-0.5, 0.5}) {
            for (double z : {-0.5, 0.5}) spec.class_means.push_back({x, y, z});
        }
    }
    spec.class_means.push_back({0.0, 0.0, 0.0});
    spec.iw_scale = Matrix::identity(3) * 0.15;
    spec.iw_dof = 8.0;
    spec.points_per_class = points_per_class;
    return spec;
}

void GenerativeSpec::validate() const {
    if (dim == 0) throw Error(ErrorKind::InvalidArgument, "generative dim must be positive");
    if (class_means.empty()) throw Error(ErrorKind::InvalidArgument, "generative spec has no classes");
    for (const auto& mean : class_means) {
        if (mean.size() != dim) throw Error(ErrorKind::DimensionMismatch, "class mean length differs from dim");
    }
    if (iw_scale.rows() != dim || iw_scale.cols() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "inverse-Wishart scale must be dim x dim");
    }
    if (!(iw_dof > static_cast<double>(dim) + 1.0)) {
        throw Error(ErrorKind::BadDof, "inverse-Wishart dof " + std::to_string(iw_dof) +
                                           " must exceed dim + 1 for a finite mean");
    }
    if (points_per_class == 0) throw Error(ErrorKind::InvalidArgument, "points_per_class must be positive");
    cholesky(iw_scale);
}

Matrix sample_inverse_wishart(const Matrix& scale, double dof, Engine& rng) {
    const std::size_t p = scale.rows();
    if (!(dof > static_cast<double>(p) - 1.0)) {
        throw Error(ErrorKind::BadDof, "dof " + std::to_string(dof) + " must exceed p - 1 = " + std::to_string(p - 1));
    }
    const Matrix lower = cholesky(inverse_spd(scale));

    // Bartlett factor: chi diagonal with dof - i degrees of freedom, normal below
    Matrix bartlett(p, p);
    std::normal_distribution<double> normal;
    for (std::size_t i = 0; i < p; ++i) {
        std::chi_squared_distribution<double> chi2(dof - static_cast<double>(i));
        bartlett(i, i) = std::sqrt(chi2(rng));
        for (std::size_t j = 0; j < i; ++j) bartlett(i, j) = normal(rng);
    }
    const Matrix factor = matmul(lower, bartlett);
    return inverse_spd(matmul(factor, transpose(factor)));
}

Matrix sample_gaussian(std::span<const double> mean, const Matrix& cov, std::size_t n, Engine& rng) {
    if (cov.rows() != mean.size()) throw Error(ErrorKind::DimensionMismatch, "covariance does not match mean");
    const Matrix lower = cholesky(cov);
    const std::size_t d = mean.size();
    Matrix out(n, d);
    std::normal_distribution<double> normal;
    std::vector<double> z(d);
    for (std::size_t r = 0; r < n; ++r) {
        for (double& v : z) v = normal(rng);
        auto row = out.row(r);
        for (std::size_t i = 0; i < d; ++i) {
            double s = mean[i];
            for (std::size_t j = 0; j <= i; ++j) s += lower(i, j) * z[j];
            row[i] = s;
        }
    }
    return out;
}

GeneratedData generate_case_study(const GenerativeSpec& spec, const RngSeed& seed) {
    spec.validate();
    const std::size_t classes = spec.class_means.size();
    const std::size_t n = spec.points_per_class;
    Matrix features(classes * n, spec.dim);
    std::vector<Label> labels(classes * n);
    std::vector<Matrix> covariances;
    covariances.reserve(classes);
    for (Label k = 0; k < classes; ++k) {
        Engine rng = seed.child(k).engine();
        covariances.push_back(sample_inverse_wishart(spec.iw_scale, spec.iw_dof, rng));
        const Matrix points = sample_gaussian(spec.class_means[k], covariances.back(), n, rng);
        for (std::size_t r = 0; r < n; ++r) {
            const auto src = points.row(r);
            std::copy(src.begin(), src.end(), features.row(k * n + r).begin());
            labels[k * n + r] = k;
        }
    }
    return {Dataset(std::move(features), std::move(labels), classes), std::move(covariances)};
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& data, std::size_t per_class_train, Engine& rng) {
    std::vector<char> in_train(data.size(), 0);
    for (Label k = 0; k < data.class_count(); ++k) {
        std::vector<std::size_t> rows = data.class_rows(k);
        if (rows.size() <= per_class_train) {
            throw Error(ErrorKind::InsufficientClassData,
                        "class " + std::to_string(k) + " has " + std::to_string(rows.size()) +
                            " rows; need more than " + std::to_string(per_class_train));
        }
        // partial Fisher-Yates: the first per_class_train slots are the sample
        for (std::size_t i = 0; i < per_class_train; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, rows.size() - 1);
            std::swap(rows[i], rows[pick(rng)]);
            in_train[rows[i]] = 1;
        }
    }
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
    for (std::size_t r = 0; r < data.size(); ++r) (in_train[r] ? train : test).push_back(r);
    return {data.subset(train), data.subset(test)};
}

}  // namespace cidr
