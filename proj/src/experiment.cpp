#include "cidr/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>

#include "cidr/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cidr {

void ExperimentConfig::validate() const {
    if (replications < 1) throw Error(ErrorKind::Config, "replications must be at least 1");
    if (knn_k < 1) throw Error(ErrorKind::Config, "knn_k must be at least 1");
    if (methods.empty()) throw Error(ErrorKind::Config, "methods must not be empty");
    if (dims.empty()) throw Error(ErrorKind::Config, "dims must not be empty");
    generative.validate();
    for (std::size_t d : dims) {
        if (d < 1 || d > generative.dim) {
            throw Error(ErrorKind::Config, "dims entry " + std::to_string(d) + " not in [1, " +
                                               std::to_string(generative.dim) + "]");
        }
    }
    if (cost_matrix.class_count() != generative.class_means.size()) {
        throw Error(ErrorKind::CostShapeMismatch, "cost_matrix has " + std::to_string(cost_matrix.class_count()) +
                                                      " classes, generative model " +
                                                      std::to_string(generative.class_means.size()));
    }
    if (per_class_train < 1 || per_class_train >= generative.points_per_class) {
        throw Error(ErrorKind::Config, "per_class_train must be in [1, points_per_class)");
    }
    if (knn_k > per_class_train * generative.class_means.size()) {
        throw Error(ErrorKind::Config, "knn_k exceeds the training set size");
    }
}

RngSeed replication_seed(const ExperimentConfig& cfg, std::size_t id) {
    return RngSeed{cfg.root_seed, static_cast<std::uint64_t>(id)};
}

ReplicationResult run_replication(const ExperimentConfig& cfg, std::size_t id) {
    const RngSeed seed = replication_seed(cfg, id);
    const Dataset data = generate_case_study(cfg.generative, seed.child(kDataStream)).data;
    Engine split_rng = seed.child(kSplitStream).engine();
    const auto [train, test] = stratified_split(data, cfg.per_class_train, split_rng);

    ReplicationResult result{id, {}};
    result.cells.reserve(cfg.methods.size() * cfg.dims.size());
    for (Method method : cfg.methods) {
        const Projection projection = fit(method, train, &cfg.cost_matrix);
        for (std::size_t d : cfg.dims) {
            const KnnModel model(transform(projection, train, d), cfg.knn_k);
            ConfusionMatrix cm = confusion(model, transform(projection, test, d));
            const double cost = total_cost(cm, cfg.cost_matrix);
            result.cells.push_back({method, d, cost, std::move(cm)});
        }
    }
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, int threads) {
    cfg.validate();
    const auto count = static_cast<std::ptrdiff_t>(cfg.replications);
    std::vector<ReplicationResult> results(cfg.replications);
    std::vector<std::exception_ptr> failures(cfg.replications);

#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto id = static_cast<std::size_t>(i);
        try {
            results[id] = run_replication(cfg, id);
        } catch (...) {
            failures[id] = std::current_exception();
        }
    }
    (void)threads;

    for (std::size_t id = 0; id < failures.size(); ++id) {
        if (!failures[id]) continue;
        try {
            std::rethrow_exception(failures[id]);
        } catch (const Error& e) {
            throw Error(e.kind(), "replication " + std::to_string(id) + ": " + e.message());
        } catch (const std::exception& e) {
            throw Error(ErrorKind::InvalidArgument, "replication " + std::to_string(id) + ": " + e.what());
        }
    }
    BoxPlotSummary summary = summarize_replications(results);
    return {std::move(results), std::move(summary)};
}

CostSummary summarize(std::span<const double> costs) {
    if (costs.empty()) throw Error(ErrorKind::EmptyInput, "cannot summarise an empty cost list");
    std::vector<double> sorted(costs.begin(), costs.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    const auto quantile = [&](double p) {
        const double h = p * static_cast<double>(n - 1);
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, n - 1);
        return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
    };

    CostSummary s;
    s.min = sorted.front();
    s.max = sorted.back();
    s.q1 = quantile(0.25);
    s.median = quantile(0.5);
    s.q3 = quantile(0.75);
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);

    const double iqr = s.q3 - s.q1;
    const double low_fence = s.q1 - 1.5 * iqr;
    const double high_fence = s.q3 + 1.5 * iqr;
    s.whisker_low = s.q1;
    s.whisker_high = s.q3;
    for (double v : sorted) {
        if (v < low_fence || v > high_fence) {
            s.outliers.push_back(v);
        } else {
            s.whisker_low = std::min(s.whisker_low, v);
            s.whisker_high = std::max(s.whisker_high, v);
        }
    }
    return s;
}

BoxPlotSummary summarize_replications(std::span<const ReplicationResult> results) {
    BoxPlotSummary summary;
    if (results.empty()) return summary;
    const std::size_t cells = results.front().cells.size();
    std::vector<double> costs(results.size());
    for (std::size_t c = 0; c < cells; ++c) {
        for (std::size_t r = 0; r < results.size(); ++r) costs[r] = results[r].cells.at(c).total_cost;
        const CellResult& cell = results.front().cells[c];
        summary.push_back({cell.method, cell.dim, summarize(costs)});
    }
    return summary;
}

}  // namespace cidr
