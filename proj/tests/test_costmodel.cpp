#include <doctest.h>

#include <random>

#include "cidr/costmodel.hpp"
#include "cidr/error.hpp"

using namespace cidr;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

ConfusionMatrix random_confusion(std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(0, 20);
    ConfusionMatrix cm(k);
    for (Label i = 0; i < k; ++i) {
        for (Label j = 0; j < k; ++j) {
            for (int n = count(rng); n > 0; --n) cm.record(i, j);
        }
    }
    return cm;
}

}  // namespace

TEST_CASE("case-study table") {
    const CostMatrix c = case_study_cost_matrix();
    REQUIRE(c.class_count() == 9);
    CHECK(c(2, 0) == 50.0);
    CHECK(c(6, 4) == 50.0);
    CHECK(c(7, 3) == 50.0);
    CHECK(c(8, 1) == 50.0);
    CHECK(c(0, 2) == 10.0);
    CHECK(c(4, 6) == 10.0);
    CHECK(c(3, 7) == 10.0);
    CHECK(c(1, 8) == 10.0);
    CHECK(c(7, 8) == 25.0);
    CHECK(c(8, 7) == 25.0);
    int ones = 0;
    for (Label i = 0; i < 9; ++i) {
        CHECK(c(i, i) == 0.0);
        for (Label j = 0; j < 9; ++j) ones += c(i, j) == 1.0;
    }
    CHECK(ones == 72 - 10);
}

TEST_CASE("validate_cost_matrix rejects bad tables") {
    Matrix diag = uniform_cost_matrix(3).matrix();
    diag(1, 1) = 1.0;
    CHECK(kind_of([&] { validate_cost_matrix(diag); }) == ErrorKind::NonzeroDiagonal);

    Matrix neg = uniform_cost_matrix(3).matrix();
    neg(0, 1) = -1.0;
    CHECK(kind_of([&] { validate_cost_matrix(neg); }) == ErrorKind::NegativeCost);

    CHECK(kind_of([] { validate_cost_matrix(Matrix(2, 3)); }) == ErrorKind::NotSquare);
    CHECK(kind_of([] { validate_cost_matrix(Matrix()); }) == ErrorKind::NotSquare);
}

TEST_CASE("total_cost examples") {
    const CostMatrix table = case_study_cost_matrix();
    ConfusionMatrix diag(9);
    for (Label k = 0; k < 9; ++k) diag.record(k, k);
    CHECK(total_cost(diag, table) == 0.0);

    ConfusionMatrix one(9);
    one.record(2, 0);
    CHECK(total_cost(one, table) == 50.0);

    ConfusionMatrix mixed(9);
    mixed.record(0, 1);
    mixed.record(3, 4);
    mixed.record(5, 6);
    mixed.record(8, 7);
    CHECK(total_cost(mixed, table) == 28.0);

    CHECK(kind_of([&] { total_cost(ConfusionMatrix(3), table); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("total_cost is linear") {
    std::mt19937_64 rng(31);
    const CostMatrix table = case_study_cost_matrix();
    for (int trial = 0; trial < 50; ++trial) {
        const ConfusionMatrix a = random_confusion(9, rng);
        const ConfusionMatrix b = random_confusion(9, rng);
        ConfusionMatrix sum = a;
        sum += b;
        CHECK(total_cost(sum, table) == total_cost(a, table) + total_cost(b, table));
        CHECK(total_cost(a, table.scaled(3.0)) == doctest::Approx(3.0 * total_cost(a, table)));
    }
}

TEST_CASE("total_cost is zero exactly for diagonal confusion") {
    std::mt19937_64 rng(32);
    const CostMatrix table = case_study_cost_matrix();
    for (int trial = 0; trial < 50; ++trial) {
        const ConfusionMatrix cm = random_confusion(9, rng);
        bool diagonal = true;
        for (Label i = 0; i < 9; ++i) {
            for (Label j = 0; j < 9; ++j) diagonal = diagonal && (i == j || cm(i, j) == 0);
        }
        CHECK((total_cost(cm, table) == 0.0) == diagonal);
    }
}
