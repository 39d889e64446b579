#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cidr/config.hpp"
#include "cidr/error.hpp"
#include "cidr/io.hpp"
#include "oracles.hpp"

using namespace cidr;

namespace {

std::string parse_message(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        return e.message();
    }
    FAIL("expected a parse error");
    return {};
}

ErrorKind config_error(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_experiment_config(in, "cfg.json", ".");
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("format_double round-trips") {
    std::mt19937_64 rng(81);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) * std::pow(10.0, i % 20 - 10);
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(50.0) == "50");
}

TEST_CASE("dataset CSV round-trip") {
    std::mt19937_64 rng(82);
    const Dataset d = oracle::random_dataset(3, 7, 4, rng);
    std::stringstream s;
    write_dataset_csv(s, d);
    CHECK(s.str().rfind("x1,x2,x3,x4,label\n", 0) == 0);
    const Dataset back = parse_dataset_csv(s, "mem");
    CHECK(back.features() == d.features());
    CHECK(std::equal(back.labels().begin(), back.labels().end(), d.labels().begin()));
    CHECK(back.class_count() == 3);

    std::istringstream few("x1,label\n0.5,1\n");
    CHECK(parse_dataset_csv(few, "mem", 9).class_count() == 9);
}

TEST_CASE("malformed dataset CSV names file, line and column") {
    std::istringstream bad_number("x1,x2,label\n1,2,0\n3,abc,1\n");
    CHECK(parse_message([&] { parse_dataset_csv(bad_number, "pts.csv"); }).rfind("pts.csv:3:2:", 0) == 0);

    std::istringstream short_row("x1,x2,label\n1,2,0\n3,1\n");
    CHECK(parse_message([&] { parse_dataset_csv(short_row, "pts.csv"); }).rfind("pts.csv:3:3:", 0) == 0);

    std::istringstream bad_label("x1,label\n1,-1\n");
    CHECK(parse_message([&] { parse_dataset_csv(bad_label, "pts.csv"); }).rfind("pts.csv:2:2:", 0) == 0);

    std::istringstream nan("x1,label\nnan,0\n");
    CHECK(parse_message([&] { parse_dataset_csv(nan, "pts.csv"); }).rfind("pts.csv:2:1:", 0) == 0);

    std::istringstream empty("");
    CHECK(parse_message([&] { parse_dataset_csv(empty, "pts.csv"); }).rfind("pts.csv:1", 0) == 0);
}

TEST_CASE("cost CSV") {
    std::stringstream s;
    write_cost_csv(s, case_study_cost_matrix());
    CHECK(parse_cost_csv(s, "mem") == case_study_cost_matrix());

    std::istringstream header("a,b\n0,2\n3,0\n");
    const CostMatrix c = parse_cost_csv(header, "mem");
    CHECK(c(0, 1) == 2.0);
    CHECK(c(1, 0) == 3.0);

    std::istringstream diag("1,2\n3,0\n");
    try {
        parse_cost_csv(diag, "c.csv");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonzeroDiagonal);
    }
    std::istringstream ragged("0,1,1\n1,0\n1,1,0\n");
    CHECK(parse_message([&] { parse_cost_csv(ragged, "c.csv"); }).rfind("c.csv:2:3:", 0) == 0);
}

TEST_CASE("shipped cost file matches the built-in table") {
    CHECK(read_cost_csv(std::filesystem::path(CIDR_SOURCE_DIR) / "data" / "case_study_costs.csv") ==
          case_study_cost_matrix());
}

TEST_CASE("projection round-trip is bit exact") {
    std::mt19937_64 rng(83);
    const Dataset d = oracle::random_dataset(4, 10, 3, rng);
    const Projection p = fit_cost_informed(d, uniform_cost_matrix(4, 3.0));
    std::stringstream s;
    write_projection(s, p);
    const Projection back = parse_projection(s, "mem");
    CHECK(back.method == p.method);
    CHECK(back.basis == p.basis);
    CHECK(back.eigenvalues == p.eigenvalues);

    std::istringstream wrong("cidr-projection 1\nmethod qda\n");
    CHECK(parse_message([&] { parse_projection(wrong, "p.txt"); }).rfind("p.txt:2:2:", 0) == 0);
    std::istringstream truncated("cidr-projection 1\nmethod pca\nsource_dim 2\neigenvalues 1 0\nbasis\n1 0\n");
    CHECK(parse_message([&] { parse_projection(truncated, "p.txt"); }).rfind("p.txt:7", 0) == 0);
}

TEST_CASE("confusion, results and summary CSV layouts") {
    ConfusionMatrix cm(2);
    cm.record(0, 0);
    cm.record(1, 0);
    std::ostringstream c;
    write_confusion_csv(c, cm);
    CHECK(c.str() == "true\\pred,0,1\n0,1,0\n1,1,0\n");

    ReplicationResult r{0, {{Method::Lda, 2, 12.5, cm}}};
    std::ostringstream res;
    write_results_csv(res, std::span<const ReplicationResult>(&r, 1));
    CHECK(res.str() == "replication,method,dim,total_cost\n0,lda,2,12.5\n");

    const BoxPlotSummary summary{{Method::CostInformed, 1, summarize(std::vector<double>{1.0, 2.0, 3.0})}};
    std::ostringstream sum;
    write_summary_csv(sum, summary);
    CHECK(sum.str() == "method,dim,min,q1,median,q3,max,mean,n_outliers\ncost-informed,1,1,1.5,2,2.5,3,2,0\n");

    std::ostringstream svg;
    write_boxplot_svg(svg, summary);
    CHECK(svg.str().rfind("<svg", 0) == 0);
    CHECK(svg.str().find("</svg>") != std::string::npos);
}

TEST_CASE("experiment config parsing") {
    std::istringstream in(R"({"replications": 7, "dims": [1, 3], "methods": ["pca", "cost-informed"],
                              "root_seed": 11, "cost_matrix": "case-study",
                              "generative": {"points_per_class": 60, "iw_scale": 0.2}, "svg": false})");
    const ExperimentFile f = parse_experiment_config(in, "cfg.json", ".");
    CHECK(f.experiment.replications == 7);
    CHECK(f.experiment.dims == std::vector<std::size_t>{1, 3});
    CHECK(f.experiment.methods == std::vector<Method>{Method::Pca, Method::CostInformed});
    CHECK(f.experiment.root_seed == 11);
    CHECK(f.experiment.generative.points_per_class == 60);
    CHECK(f.experiment.generative.iw_scale == Matrix::identity(3) * 0.2);
    CHECK(f.experiment.cost_matrix == case_study_cost_matrix());
    CHECK_FALSE(f.svg);

    CHECK(config_error(R"({"replicatoins": 3})") == ErrorKind::Config);
    CHECK(config_error(R"({"replications": "many"})") == ErrorKind::Config);
    CHECK(config_error(R"({"methods": ["qda"]})") == ErrorKind::Config);
    CHECK(config_error("{not json") == ErrorKind::Config);
}

TEST_CASE("shipped configs load") {
    const std::filesystem::path root(CIDR_SOURCE_DIR);
    const ExperimentFile full = load_experiment_config(root / "configs" / "case_study.json");
    CHECK(full.experiment.replications == 500);
    CHECK(full.experiment.cost_matrix == case_study_cost_matrix());
    full.experiment.validate();
    const ExperimentFile smoke = load_experiment_config(root / "configs" / "smoke.json");
    CHECK(smoke.experiment.replications == 3);
}
