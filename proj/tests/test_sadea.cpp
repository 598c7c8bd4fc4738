#include <doctest.h>

#include <cmath>
#include <random>

#include "dearank/datasets.hpp"
#include "dearank/sadea.hpp"

#include "oracle.hpp"

using namespace dearank;

namespace {

// closed form for one input, one output: with a = normalized input level and
// b = normalized output level of the evaluated DMU, the optimal score is
// a / (2a + b), degenerating to a / (1 + 2a) when b = 1
double closed_form(double a, double b) {
    if (b >= 1.0) return a / (1.0 + 2.0 * a);
    return a / (2.0 * a + b);
}

} // namespace

TEST_SUITE("sadea") {

TEST_CASE("input membership grades") {
    MembershipFunction f = MembershipFunction::input_linear(1.0 / 3.0);
    CHECK_FALSE(f.degenerate);
    CHECK(f.degree(0.0) == doctest::Approx(1.0));
    CHECK(f.degree(1.0 / 3.0) == doctest::Approx(0.0));
    CHECK(f.degree((1.0 - 7.0 / 11.0) / 3.0) ==
          doctest::Approx(7.0 / 11.0).epsilon(1e-12));
    CHECK(input_membership(0.1, 0.4) == doctest::Approx(0.75));
    CHECK_THROWS_AS(f.degree(0.5), std::domain_error);
    CHECK_THROWS_AS(f.degree(-0.1), std::domain_error);
    CHECK_THROWS_AS(MembershipFunction::input_linear(0.0), std::invalid_argument);
}

TEST_CASE("literal input membership is the mirrored ramp") {
    MembershipFunction f =
        MembershipFunction::input_linear(0.5, MembershipDirection::Literal);
    CHECK(f.degree(0.0) == doctest::Approx(0.0));
    CHECK(f.degree(0.5) == doctest::Approx(1.0));
    CHECK(input_membership(0.25, 0.5, MembershipDirection::Literal) ==
          doctest::Approx(0.5));
}

TEST_CASE("output membership grades") {
    MembershipFunction f = MembershipFunction::output_linear(0.25);
    CHECK_FALSE(f.degenerate);
    CHECK(f.degree(0.25) == doctest::Approx(0.0));
    CHECK(f.degree(1.0) == doctest::Approx(1.0));
    CHECK(f.degree(0.625) == doctest::Approx(0.5));
    CHECK(output_membership(0.5, 0.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(f.degree(0.1), std::domain_error);
    CHECK_THROWS_AS(f.degree(1.1), std::domain_error);
    CHECK_THROWS_AS(MembershipFunction::output_linear(-0.2), std::invalid_argument);
    CHECK_THROWS_AS(MembershipFunction::output_linear(1.5), std::invalid_argument);

    MembershipFunction g = MembershipFunction::output_linear(1.0);
    CHECK(g.degenerate);
    CHECK(g.degree(1.0) == doctest::Approx(1.0));
}

TEST_CASE("walkthrough dataset scores and closed forms") {
    const DecisionMatrix& m = demo_dataset("table3.2");
    const double expected[4] = {1.0 / 8.0, 4.0 / 29.0, 4.0 / 11.0, 8.0 / 17.0};
    // normalized coordinates: inputs /6, outputs /8
    const double a[4] = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 6.0, 1.0};
    const double b[4] = {1.0, 7.0 / 8.0, 2.0 / 8.0, 1.0 / 8.0};
    for (std::size_t p = 0; p < 4; ++p) {
        SadeaResult r = sadea_score(m, p);
        CHECK(r.score == doctest::Approx(expected[p]).epsilon(1e-9));
        CHECK(r.score == doctest::Approx(closed_form(a[p], b[p])).epsilon(1e-9));
        CHECK(r.alpha == doctest::Approx(1.0 - expected[p]).epsilon(1e-9));
        CHECK(r.score >= 0.0);
        CHECK(r.score <= 1.0);
    }
    SadeaResult top = sadea_score(m, 0);
    REQUIRE(top.degenerate_outputs.size() == 1);
    CHECK(top.degenerate_outputs[0] == 0);
    CHECK(top.output_point[0] == doctest::Approx(1.0));
    CHECK(sadea_score(m, 1).degenerate_outputs.empty());
}

TEST_CASE("optimal fuzzy coordinates satisfy the envelopment rows") {
    const DecisionMatrix& m = demo_dataset("table3.2");
    for (std::size_t p = 0; p < 4; ++p) {
        SadeaResult r = sadea_score(m, p);
        const NormalizedMatrix norm = normalize(m);
        double xp = norm.matrix().input(p, 0);
        double yp = norm.matrix().output(p, 0);
        double w = 1.0;
        // recover w from the tightest row it relaxes
        w = std::max(r.lambda * xp - r.input_point[0],
                     r.output_point[0] - r.lambda * yp);
        CHECK(r.alpha + w <= 1.0 + 1e-7);
        CHECK(r.input_point[0] >= -1e-9);
        CHECK(r.input_point[0] <= xp + 1e-9);
        CHECK(r.output_point[0] >= yp - 1e-9);
        CHECK(r.output_point[0] <= 1.0 + 1e-9);
    }
}

TEST_CASE("eighteen-branch dataset column") {
    const double expected[18] = {
        0.35039817974971554, 0.44634111103084595, 0.43921897860390224,
        0.3516045705312808,  0.428125,            0.4838366430352643,
        0.46363187704166764, 0.4891004815861528,  0.48248988713190577,
        0.4225485166602019,  0.4585620565002009,  0.4848399500379613,
        0.435371885726218,   0.4450912558490231,  0.4455872011251758,
        0.4909821974884182,  0.46348913437313044, 0.4571409549679103};
    const DecisionMatrix& m = demo_dataset("table3.4");
    SadeaOptions opts;
    for (std::size_t p = 0; p < 18; ++p) {
        SadeaResult r = sadea_score(m, p, opts);
        CHECK(r.score == doctest::Approx(expected[p]).epsilon(1e-6));
    }
    // alternative 5 holds the RRSP column maximum, so that output is pinned
    SadeaResult r5 = sadea_score(m, 4, opts);
    REQUIRE(r5.degenerate_outputs.size() == 1);
    CHECK(r5.degenerate_outputs[0] == 0);
}

TEST_CASE("ranking is ascending with ties by source order") {
    const DecisionMatrix& m = demo_dataset("table3.4");
    Ranking rk = sadea_rank(m);
    CHECK(rk.method == "sadea");
    CHECK(rk.order == RankOrder::LowerBetter);
    REQUIRE(rk.entries.size() == 18);
    CHECK(rk.entries.front().name == "1");
    CHECK(rk.entries.front().rank_label == "1");
    CHECK(rk.entries[1].name == "4");
    for (std::size_t i = 1; i < rk.entries.size(); ++i)
        CHECK(rk.entries[i].score >= rk.entries[i - 1].score);
}

TEST_CASE("literal membership direction changes the walkthrough scores") {
    const DecisionMatrix& m = demo_dataset("table3.2");
    SadeaOptions opts;
    opts.direction = MembershipDirection::Literal;
    CHECK(sadea_score(m, 3, opts).score == doctest::Approx(7.0 / 16.0).epsilon(1e-9));
    CHECK(sadea_score(m, 3, opts).score != doctest::Approx(8.0 / 17.0).epsilon(1e-6));
}

TEST_CASE("score matches the grid-search reference") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 50; ++it) {
        std::size_t p = 0;
        DecisionMatrix m = testutil::random_sadea_instance(rng, p);
        double lp_score = sadea_score(m, p).score;
        double grid_score = testutil::sadea_grid_score(m, p);
        INFO("instance " << it << " dmu " << p);
        CHECK(std::fabs(lp_score - grid_score) <= 2e-3);
        // the grid only visits feasible points, so it can never beat the LP
        CHECK(grid_score >= lp_score - 1e-7);
    }
}

TEST_CASE("score depends only on the DMU's own normalized coordinates") {
    std::mt19937 rng(31);
    DecisionMatrix m = testutil::random_matrix(rng, 5, 2, 2);
    // make the first alternative hold every column maximum so perturbing
    // another row leaves all the normalizing constants alone
    for (std::size_t i = 0; i < m.attributes(); ++i) {
        double mx = m.column_max(i);
        m = m.with_value(0, i, mx * 2.0);
    }
    std::size_t p = 1;
    SadeaResult before = sadea_score(m, p);
    DecisionMatrix perturbed = m;
    for (std::size_t i = 0; i < m.attributes(); ++i)
        perturbed = perturbed.with_value(3, i, perturbed.value(3, i) * 0.9);
    SadeaResult after = sadea_score(perturbed, p);
    CHECK(before.score == after.score); // bit-identical, same program
    CHECK(before.alpha == after.alpha);
}

TEST_CASE("worse own coordinates give a worse score") {
    std::mt19937 rng(77);
    int ran = 0;
    for (int it = 0; it < 20; ++it) {
        DecisionMatrix m = testutil::random_matrix(rng, 4, 1, 1);
        std::size_t in_col = m.input_columns()[0];
        std::size_t out_col = m.output_columns()[0];
        // evaluate an alternative that holds neither column maximum
        std::size_t p = 0;
        double grow_in = m.value(p, in_col) * 1.2;
        double grow_out = m.value(p, out_col) * 1.2;
        if (grow_in >= m.column_max(in_col) || grow_out >= m.column_max(out_col))
            continue;
        ++ran;
        double base = sadea_score(m, p).score;
        double more_input = sadea_score(m.with_value(p, in_col, grow_in), p).score;
        CHECK(more_input > base + 1e-12);
        double more_output = sadea_score(m.with_value(p, out_col, grow_out), p).score;
        CHECK(more_output < base - 1e-12);
    }
    CHECK(ran > 0);
}

TEST_CASE("parallel scoring matches serial bit for bit") {
    const DecisionMatrix& m = demo_dataset("table3.4");
    SadeaOptions serial;
    SadeaOptions parallel;
    parallel.jobs = 4;
    auto a = sadea_all(m, serial);
    auto b = sadea_all(m, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t p = 0; p < a.size(); ++p) {
        CHECK(a[p].score == b[p].score);
        CHECK(a[p].alpha == b[p].alpha);
        CHECK(a[p].lambda == b[p].lambda);
    }
}

TEST_CASE("argument checking") {
    const DecisionMatrix& m = demo_dataset("table3.2");
    CHECK_THROWS_AS(sadea_score(m, 9), std::out_of_range);
    DecisionMatrix bad = m.with_value(0, 0, -1.0);
    CHECK_THROWS_AS(sadea_score(bad, 0), std::invalid_argument);
}

} // TEST_SUITE
