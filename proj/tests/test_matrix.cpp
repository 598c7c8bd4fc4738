#include <doctest.h>

#include <cmath>
#include <random>

#include "dearank/matrix.hpp"

#include "oracle.hpp"

using namespace dearank;

namespace {

DecisionMatrix simple() {
    return DecisionMatrix(
        {"A", "B", "C"},
        {{"cost", AttributeRole::Input}, {"gain", AttributeRole::Output}},
        {{2, 4}, {1, 8}, {4, 2}});
}

bool has_error(const std::vector<ValidationIssue>& issues, bool want_error) {
    for (const auto& i : issues)
        if ((i.severity == ValidationIssue::Severity::Error) == want_error) return true;
    return false;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("construction and accessors") {
    DecisionMatrix m = simple();
    CHECK(m.alternatives() == 3);
    CHECK(m.attributes() == 2);
    CHECK(m.inputs() == 1);
    CHECK(m.outputs() == 1);
    CHECK(m.name(1) == "B");
    CHECK(m.attribute(0).label == "cost");
    CHECK(m.value(2, 1) == 2.0);
    CHECK(m.input(1, 0) == 1.0);
    CHECK(m.output(0, 0) == 4.0);
    CHECK(m.input_columns() == std::vector<std::size_t>{0});
    CHECK(m.output_columns() == std::vector<std::size_t>{1});
    CHECK(m.column_max(0) == 4.0);
    CHECK(m.column_max(1) == 8.0);
}

TEST_CASE("structural defects are rejected at construction") {
    std::vector<Attribute> attrs{{"x", AttributeRole::Input},
                                 {"y", AttributeRole::Output}};
    CHECK_THROWS_AS(DecisionMatrix({}, attrs, {}), std::invalid_argument);
    CHECK_THROWS_AS(DecisionMatrix({"A"}, attrs, {{1, 2}, {3, 4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DecisionMatrix({"A"}, attrs, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(
        DecisionMatrix({"A"}, {{"x", AttributeRole::Input}}, {{1}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        DecisionMatrix({"A"}, {{"y", AttributeRole::Output}}, {{1}}),
        std::invalid_argument);
}

TEST_CASE("validate flags value-level problems") {
    CHECK_FALSE(has_error(simple().validate(), true));

    DecisionMatrix zero_input = simple().with_value(0, 0, 0.0);
    CHECK(has_error(zero_input.validate(), true));
    CHECK_THROWS_AS(zero_input.ensure_valid(), std::invalid_argument);

    DecisionMatrix negative_output = simple().with_value(1, 1, -3.0);
    CHECK(has_error(negative_output.validate(), true));

    DecisionMatrix zero_output_row = simple().with_value(2, 1, 0.0);
    CHECK(has_error(zero_output_row.validate(), true));

    DecisionMatrix nan_cell = simple().with_value(0, 1, std::nan(""));
    CHECK(has_error(nan_cell.validate(), true));

    DecisionMatrix dup({"A", "A"},
                       {{"x", AttributeRole::Input}, {"y", AttributeRole::Output}},
                       {{1, 2}, {3, 4}});
    CHECK(has_error(dup.validate(), false));     // warning present
    CHECK_FALSE(has_error(dup.validate(), true)); // but no error
    CHECK_NOTHROW(dup.ensure_valid());
}

TEST_CASE("with_value replaces a single cell") {
    DecisionMatrix m = simple().with_value(1, 0, 9.0);
    CHECK(m.value(1, 0) == 9.0);
    CHECK(m.value(0, 0) == 2.0);
    CHECK_THROWS_AS(simple().with_value(5, 0, 1.0), std::out_of_range);
}

TEST_CASE("normalize scales every column by its maximum") {
    NormalizedMatrix nm = normalize(simple());
    CHECK(nm.column_max(0) == 4.0);
    CHECK(nm.column_max(1) == 8.0);
    const DecisionMatrix& s = nm.matrix();
    CHECK(s.value(0, 0) == 0.5);
    CHECK(s.value(1, 1) == 1.0);

    bool saw_one[2] = {false, false};
    for (std::size_t i = 0; i < s.attributes(); ++i) {
        for (std::size_t j = 0; j < s.alternatives(); ++j) {
            double v = s.value(j, i);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            if (i < s.inputs()) CHECK(v > 0.0);
            if (v == 1.0) saw_one[i] = true;
        }
    }
    CHECK(saw_one[0]);
    CHECK(saw_one[1]);
}

TEST_CASE("normalize is idempotent") {
    NormalizedMatrix once = normalize(simple());
    NormalizedMatrix twice = normalize(once.matrix());
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(once.matrix().value(j, i) == twice.matrix().value(j, i));
}

TEST_CASE("normalize is column-scale invariant") {
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        DecisionMatrix m = testutil::random_matrix(rng, 5, 2, 2);
        std::uniform_real_distribution<double> f(0.1, 25.0);
        DecisionMatrix scaled = testutil::scale_column(m, it % 4, f(rng));
        NormalizedMatrix a = normalize(m);
        NormalizedMatrix b = normalize(scaled);
        for (std::size_t j = 0; j < m.alternatives(); ++j)
            for (std::size_t i = 0; i < m.attributes(); ++i)
                CHECK(a.matrix().value(j, i) ==
                      doctest::Approx(b.matrix().value(j, i)).epsilon(1e-12));
    }
}

TEST_CASE("normalize rejects a column with no positive value") {
    DecisionMatrix m({"A", "B"},
                     {{"x", AttributeRole::Input},
                      {"y1", AttributeRole::Output},
                      {"y2", AttributeRole::Output}},
                     {{1, 0, 5}, {2, 0, 3}});
    CHECK_THROWS_AS(normalize(m), std::invalid_argument);
}

} // TEST_SUITE
