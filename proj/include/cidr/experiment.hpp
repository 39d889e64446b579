#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cidr/classify.hpp"
#include "cidr/costmodel.hpp"
#include "cidr/datagen.hpp"
#include "cidr/reducers.hpp"

namespace cidr {

struct ExperimentConfig {
    std::size_t replications = 500;
    std::size_t per_class_train = 50;
    std::size_t knn_k = 5;
    std::vector<std::size_t> dims{1, 2, 3};
    std::vector<Method> methods{Method::Pca, Method::Lda, Method::CostInformed};
    CostMatrix cost_matrix = case_study_cost_matrix();
    GenerativeSpec generative = GenerativeSpec::case_study();
    std::uint64_t root_seed = 0;

    void validate() const;
};

struct CellResult {
    Method method;
    std::size_t dim;
    double total_cost;
    ConfusionMatrix confusion;
};

/// Cells are ordered method-major (config order), then by dim (config order).
struct ReplicationResult {
    std::size_t id = 0;
    std::vector<CellResult> cells;
};

/// Box-plot statistics of one cost distribution. Quartiles interpolate
/// linearly between closest ranks; whiskers reach the most extreme points
/// within 1.5 IQR of the quartiles.
struct CostSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double whisker_low = 0.0;
    double whisker_high = 0.0;
    double mean = 0.0;
    std::vector<double> outliers;
};

struct SummaryEntry {
    Method method;
    std::size_t dim;
    CostSummary stats;
};

using BoxPlotSummary = std::vector<SummaryEntry>;

struct ExperimentResult {
    std::vector<ReplicationResult> replications;
    BoxPlotSummary summary;
};

/// Substream names under a replication's seed.
inline constexpr std::uint64_t kDataStream = 1;
inline constexpr std::uint64_t kSplitStream = 2;

RngSeed replication_seed(const ExperimentConfig& cfg, std::size_t id);

ReplicationResult run_replication(const ExperimentConfig& cfg, std::size_t id);

/// Replications run on up to `threads` OpenMP threads (0 = runtime default).
/// Output never depends on the thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg, int threads = 0);

CostSummary summarize(std::span<const double> costs);

/// One entry per (method, dim) in replication cell order.
BoxPlotSummary summarize_replications(std::span<const ReplicationResult> results);

}  // namespace cidr
