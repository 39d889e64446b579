#include <benchmark/benchmark.h>

#include "cidr/classify.hpp"
#include "cidr/datagen.hpp"
#include "cidr/experiment.hpp"

namespace {

struct Fixture {
    cidr::Dataset train;
    cidr::Dataset test;

    Fixture() {
        const auto gen = cidr::generate_case_study(cidr::GenerativeSpec::case_study(), cidr::RngSeed{1, 0});
        cidr::Engine rng(2);
        auto [tr, te] = cidr::stratified_split(gen.data, 50, rng);
        train = std::move(tr);
        test = std::move(te);
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

void BM_KnnSerial(benchmark::State& state) {
    const auto& f = fixture();
    const cidr::KnnModel model(f.train, 5);
    for (auto _ : state) benchmark::DoNotOptimize(cidr::knn_predict_all_serial(model, f.test.features()));
}
BENCHMARK(BM_KnnSerial);

void BM_KnnParallel(benchmark::State& state) {
    const auto& f = fixture();
    const cidr::KnnModel model(f.train, 5);
    for (auto _ : state) benchmark::DoNotOptimize(cidr::knn_predict_all(model, f.test.features()));
}
BENCHMARK(BM_KnnParallel);

void BM_Replication(benchmark::State& state) {
    const cidr::ExperimentConfig cfg;
    std::size_t id = 0;
    for (auto _ : state) benchmark::DoNotOptimize(cidr::run_replication(cfg, id++));
}
BENCHMARK(BM_Replication);

}  // namespace

BENCHMARK_MAIN();
