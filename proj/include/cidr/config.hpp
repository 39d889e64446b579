#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "cidr/experiment.hpp"

namespace cidr {

/// Experiment settings as read from a JSON config file.
///
/// Schema (every key optional; defaults are the case-study values):
///
///   {
///     "replications":    500,
///     "per_class_train": 50,
///     "knn_k":           5,
///     "dims":            [1, 2, 3],
///     "methods":         ["pca", "lda", "cost-informed"],
///     "root_seed":       0,
///     "cost_matrix":     "case-study" | "<csv path, relative to the config>" | [[...], ...],
///     "generative": {
///       "points_per_class": 100,
///       "iw_scale":         0.15 | [[...], ...],   // scalar means scalar * identity
///       "iw_dof":           8,
///       "class_means":      [[x, y, z], ...]
///     },
///     "svg": true
///   }
///
/// Unknown keys and wrongly typed values are rejected with the offending
/// field name.
struct ExperimentFile {
    ExperimentConfig experiment;
    bool svg = true;
};

ExperimentFile parse_experiment_config(std::istream& in, std::string_view source,
                                       const std::filesystem::path& base_dir);
ExperimentFile load_experiment_config(const std::filesystem::path& path);

}  // namespace cidr
