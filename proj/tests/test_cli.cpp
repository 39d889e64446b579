#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cidr/io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cidr");
    std::ostringstream out, err;
    const int code = cidr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("cidr_cli_test_" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const std::string kCosts = (fs::path(CIDR_SOURCE_DIR) / "data" / "case_study_costs.csv").string();

}  // namespace

TEST_CASE("generate") {
    TempDir tmp;
    Run r = cli({"generate", "--out", tmp / "a.csv", "--quiet"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "900\n");
    const cidr::Dataset d = cidr::read_dataset_csv(tmp / "a.csv");
    CHECK(d.size() == 900);
    CHECK(d.dim() == 3);
    CHECK(d.class_count() == 9);

    REQUIRE(cli({"generate", "--out", tmp / "b.csv"}).code == 0);
    CHECK(slurp(tmp / "a.csv") == slurp(tmp / "b.csv"));

    r = cli({"generate", "--out", tmp / "c.csv", "--points-per-class", "10", "-q"});
    CHECK(r.out == "90\n");
    CHECK(cidr::read_dataset_csv(tmp / "c.csv").size() == 90);

    REQUIRE(cli({"generate", "--out", tmp / "d.csv", "--seed", "1"}).code == 0);
    CHECK(slurp(tmp / "a.csv") != slurp(tmp / "d.csv"));

    r = cli({"generate", "--out", tmp / "e.csv", "--iw-dof", "3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("BadDof") != std::string::npos);
}

TEST_CASE("fit, transform and classify") {
    TempDir tmp;
    REQUIRE(cli({"generate", "--out", tmp / "train.csv", "--points-per-class", "40"}).code == 0);
    REQUIRE(cli({"generate", "--out", tmp / "test.csv", "--points-per-class", "20", "--seed", "9"}).code == 0);

    Run r = cli({"fit", "--data", tmp / "train.csv", "--method", "pca", "--out", tmp / "pca.txt", "-q"});
    REQUIRE(r.code == 0);
    const cidr::Projection p = cidr::read_projection(tmp / "pca.txt");
    CHECK(p.eigenvalues.size() == 3);
    CHECK(std::is_sorted(p.eigenvalues.rbegin(), p.eigenvalues.rend()));
    CHECK(std::stod(r.out) == p.eigenvalues[0]);

    r = cli({"fit", "--data", tmp / "train.csv", "--method", "cost-informed", "--out", tmp / "ci.txt"});
    CHECK(r.code == 1);
    CHECK(r.err.find("MissingCostMatrix") != std::string::npos);

    r = cli({"fit", "--data", tmp / "train.csv", "--method", "cost-informed", "--costs", kCosts, "--out",
             tmp / "ci.txt"});
    REQUIRE(r.code == 0);

    r = cli({"transform", "--projection", tmp / "pca.txt", "--data", tmp / "train.csv", "--dim", "3", "--out",
             tmp / "rot.csv", "-q"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "360\n");
    const cidr::Dataset raw = cidr::read_dataset_csv(tmp / "train.csv");
    const cidr::Dataset rot = cidr::read_dataset_csv(tmp / "rot.csv");
    for (std::size_t i = 0; i < 50; ++i) {
        const std::size_t j = (i * 37 + 11) % raw.size();
        double a = 0.0, b = 0.0;
        for (std::size_t c = 0; c < 3; ++c) {
            a += std::pow(raw.features()(i, c) - raw.features()(j, c), 2);
            b += std::pow(rot.features()(i, c) - rot.features()(j, c), 2);
        }
        CHECK(std::abs(a - b) <= 1e-10);
    }

    r = cli({"classify", "--train", tmp / "train.csv", "--test", tmp / "test.csv", "--projection", tmp / "ci.txt",
             "--dim", "1", "--costs", kCosts, "--out", tmp / "cm.csv", "-q"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(r.out) >= 0.0);
    CHECK(slurp(tmp / "cm.csv").rfind("true\\pred,0,1,2,3,4,5,6,7,8\n", 0) == 0);

    r = cli({"classify", "--train", tmp / "train.csv", "--test", tmp / "test.csv", "-q"});
    REQUIRE(r.code == 0);
}

TEST_CASE("malformed input is reported, not crashed on") {
    TempDir tmp;
    {
        std::ofstream f(tmp / "bad.csv");
        f << "x1,x2,label\n0.1,0.2,0\n0.3,oops,1\n";
    }
    const Run r = cli({"fit", "--data", tmp / "bad.csv", "--method", "pca", "--out", tmp / "p.txt"});
    CHECK(r.code == 1);
    CHECK(r.err.find(tmp / "bad.csv" + ":3:2:") != std::string::npos);

    CHECK(cli({"fit", "--data", tmp / "missing.csv", "--method", "pca", "--out", tmp / "p.txt"}).code != 0);
    CHECK(cli({"fit", "--data", tmp / "bad.csv", "--method", "qda", "--out", tmp / "p.txt"}).code != 0);
    CHECK(cli({"bogus"}).code != 0);
}

TEST_CASE("experiment smoke run") {
    TempDir tmp;
    const std::string cfg = (fs::path(CIDR_SOURCE_DIR) / "configs" / "smoke.json").string();
    const auto start = std::chrono::steady_clock::now();
    Run r = cli({"experiment", "--config", cfg, "--out", tmp / "a", "-q"});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    REQUIRE(r.code == 0);
    CHECK(seconds < 5.0);
    for (const char* name : {"results.csv", "summary.csv", "boxplot.svg", "metadata.json"}) {
        CHECK(fs::exists(tmp.path / "a" / name));
    }
    const std::string results = slurp(tmp.path / "a" / "results.csv");
    CHECK(results.rfind("replication,method,dim,total_cost\n", 0) == 0);
    CHECK(std::count(results.begin(), results.end(), '\n') == 1 + 3 * 9);

    REQUIRE(cli({"experiment", "--config", cfg, "--out", tmp / "b", "--threads", "2", "--no-svg", "-q"}).code == 0);
    CHECK(slurp(tmp.path / "a" / "results.csv") == slurp(tmp.path / "b" / "results.csv"));
    CHECK(slurp(tmp.path / "a" / "summary.csv") == slurp(tmp.path / "b" / "summary.csv"));
    CHECK_FALSE(fs::exists(tmp.path / "b" / "boxplot.svg"));

    REQUIRE(cli({"experiment", "--config", cfg, "--out", tmp / "c", "--seed", "8", "--replications", "2"}).code ==
            0);
    const std::string other = slurp(tmp.path / "c" / "results.csv");
    CHECK(std::count(other.begin(), other.end(), '\n') == 1 + 2 * 9);

    {
        std::ofstream f(tmp / "broken.json");
        f << R"({"replications": 2, "knn": 5})";
    }
    r = cli({"experiment", "--config", tmp / "broken.json", "--out", tmp / "d"});
    CHECK(r.code == 1);
    CHECK(r.err.find("knn") != std::string::npos);
}
