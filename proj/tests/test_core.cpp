#include <doctest.h>

#include "support.hpp"
#include "tgr/cnf.hpp"
#include "tgr/errors.hpp"
#include "tgr/metrics.hpp"
#include "tgr/temporal_graph.hpp"

using namespace tgr;

namespace {

DistanceMatrix rows(std::vector<std::vector<Dist>> r) { return DistanceMatrix::from_rows(r); }

const Dist INF = kInfinity;

}  // namespace

TEST_CASE("Dist orders infinity last and saturates addition") {
    CHECK(Dist(3) < INF);
    CHECK(INF + Dist(1) == INF);
    CHECK(Dist(2) + Dist(5) == Dist(7));
    CHECK(INF.to_string() == "inf");
}

TEST_CASE("DistanceMatrix rejects bad diagonal and zero off-diagonal entries") {
    CHECK_THROWS_AS(rows({{1, 2}, {2, 0}}), ValidationError);
    CHECK_THROWS_AS(rows({{0, 0}, {2, 0}}), ValidationError);
    CHECK_THROWS_AS(rows({{0, 1}, {2}}), ValidationError);
    const auto d = rows({{0, 3, INF}, {1, 0, 3}, {2, 2, 0}});
    CHECK(d.distinct_finite_values() == std::vector<Time>{1, 2, 3});
    CHECK(d.max_finite() == Dist(3));
}

TEST_CASE("RangeMatrix lists undetermined pairs row-major") {
    RangeMatrix r(3);
    r.set(2, 1, Range{1, 2});
    r.set(1, 3, Range{4, INF});
    r.set(1, 2, Range{5, 5});
    const auto u = r.undetermined();
    REQUIRE(u.size() == 2);
    CHECK(u[0] == OrderedPair{1, 3});
    CHECK(u[1] == OrderedPair{2, 1});
    CHECK_THROWS_AS(r.set(1, 2, Range{3, 2}), ValidationError);
    CHECK_THROWS_AS(r.set(1, 1, Range{0, 1}), ValidationError);
}

TEST_CASE("TemporalGraph canonicalizes periodic labels") {
    TemporalGraph g(3, 5);
    g.add_label(2, 1, 12);
    g.add_label(1, 2, 7);
    g.add_label(1, 3, 5);
    CHECK(std::vector<Time>(g.labels(1, 2).begin(), g.labels(1, 2).end()) == std::vector<Time>{2});
    CHECK(g.labels(1, 3)[0] == 5);
    CHECK(g.appears_at(1, 2, 17));
    CHECK_FALSE(g.appears_at(1, 2, 3));
    CHECK(g.label_count() == 2);
    const auto u = g.unrolled(12);
    CHECK(u.label_count() == 5);  // {2,7,12} and {5,10}
    CHECK_THROWS_AS(g.add_label(1, 1, 3), ValidationError);
    CHECK_THROWS_AS(g.add_label(1, 2, 0), ValidationError);
}

TEST_CASE("TemporalPath measures duration inclusively") {
    TemporalGraph g(3);
    g.add_label(1, 2, 8);
    g.add_label(2, 3, 9);
    TemporalPath p{{1, 2, 3}, {8, 9}, true};
    CHECK(p.valid_in(g));
    CHECK(p.duration() == 2);
    CHECK(p.arrival() == 9);
    TemporalPath bad{{1, 2, 1}, {8, 8}, false};
    CHECK_FALSE(bad.valid_in(g));
}

TEST_CASE("foremost matrix examples") {
    TemporalGraph g2(2);
    g2.add_label(1, 2, 7);
    CHECK(foremost_matrix(g2) == rows({{0, 7}, {7, 0}}));

    TemporalGraph g3(3);
    g3.add_labels(1, 2, {6, 11});
    g3.add_label(1, 3, 9);
    CHECK(foremost_matrix(g3) == rows({{0, 6, 9}, {6, 0, 9}, {9, 11, 0}}));

    TemporalGraph same(3);
    same.add_label(1, 2, 5);
    same.add_label(2, 3, 5);
    CHECK(foremost_matrix(same, Semantics::NonStrict)(1, 3) == Dist(5));
    CHECK(foremost_matrix(same, Semantics::Strict)(1, 3) == INF);
}

TEST_CASE("fastest matrix examples") {
    TemporalGraph g2(2);
    g2.add_label(1, 2, 7);
    CHECK(fastest_matrix(g2)(1, 2) == Dist(1));

    TemporalGraph g(3);
    g.add_labels(1, 2, {1, 8});
    g.add_label(2, 3, 9);
    CHECK(fastest_matrix(g)(1, 3) == Dist(2));
    CHECK(fastest_matrix(g)(3, 1) == INF);
}

TEST_CASE("shortest matrix examples") {
    TemporalGraph g2(2);
    g2.add_label(1, 2, 3);
    CHECK(shortest_matrix(g2)(1, 2) == Dist(1));

    TemporalGraph g(3);
    g.add_label(1, 2, 2);
    g.add_label(2, 3, 1);
    CHECK(shortest_matrix(g)(1, 3) == INF);
    CHECK(shortest_matrix(g)(3, 1) == Dist(2));
}

TEST_CASE("verify_realization reports mismatches") {
    TemporalGraph g3(3);
    g3.add_labels(1, 2, {6, 11});
    g3.add_label(1, 3, 9);
    CHECK(verify_realization(g3, foremost_matrix(g3), Metric::Foremost).equal);

    TemporalGraph empty(2);
    const auto r = verify_realization(empty, rows({{0, 1}, {1, 0}}), Metric::Foremost);
    CHECK_FALSE(r.equal);
    REQUIRE(r.mismatches.size() == 2);
    CHECK(r.mismatches[0] == Mismatch{1, 2, 1, INF});
    CHECK_THROWS_AS(verify_realization(empty, DistanceMatrix(3), Metric::Foremost), ValidationError);
}

TEST_CASE("verify_ranged checks foremost values against ranges") {
    TemporalGraph g(2);
    g.add_label(1, 2, 2);
    RangeMatrix r(2);
    r.set(1, 2, Range{1, 3});
    r.set(2, 1, Range{2, 2});
    CHECK(verify_ranged(g, r).equal);
    r.set(2, 1, Range{3, INF});
    const auto bad = verify_ranged(g, r);
    CHECK_FALSE(bad.equal);
    CHECK(bad.mismatches.at(0) == Mismatch{2, 1, 3, 2});
}

TEST_CASE("metric engine agrees with path enumeration on random graphs") {
    test::Rng rng(11);
    for (int iter = 0; iter < 150; ++iter) {
        const int n = test::uniform(rng, 1, 6);
        const Time period = iter % 3 == 0 ? test::uniform(rng, 2, 6) : 0;
        const auto g = test::random_temporal_graph(rng, n, test::uniform(rng, 0, 14), 8, period);
        for (Metric m : {Metric::Foremost, Metric::Fastest, Metric::Shortest})
            for (Semantics s : {Semantics::Strict, Semantics::NonStrict}) {
                CAPTURE(iter);
                CHECK(metric_matrix(g, m, s) == oracle_metric(g, m, s));
            }
    }
}

TEST_CASE("thread count does not change results") {
    test::Rng rng(5);
    const auto g = test::random_temporal_graph(rng, 30, 200, 50);
    MetricOptions one, four;
    four.threads = 4;
    for (Metric m : {Metric::Foremost, Metric::Fastest, Metric::Shortest})
        CHECK(metric_matrix(g, m, Semantics::Strict, one) == metric_matrix(g, m, Semantics::Strict, four));
}

TEST_CASE("oracle_metric enforces its size guard") {
    TemporalGraph g(9);
    CHECK_THROWS_AS(oracle_metric(g, Metric::Foremost), GuardExceeded);
}

TEST_CASE("CNF validation and brute-force SAT") {
    CHECK_THROWS_AS(validate_cnf({2, {{1, -1}}}), ValidationError);
    CHECK_THROWS_AS(validate_cnf({1, {{2}}}), ValidationError);
    CHECK_THROWS_AS(validate_cnf_both_polarities({2, {{1, 2}, {-1}}}), ValidationError);

    const auto a = sat_solve_brute({1, {{1}}});
    REQUIRE(a);
    CHECK((*a)[0]);
    CHECK_FALSE(sat_solve_brute({1, {{1}, {-1}}}));

    // Cross-check against enumeration with variable 1 least significant.
    test::Rng rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        const auto f = test::random_cnf(rng, test::uniform(rng, 1, 6), test::uniform(rng, 1, 12));
        bool any = false;
        for (std::uint64_t m = 0; m < (1u << f.num_vars) && !any; ++m) {
            Assignment x(f.num_vars);
            for (int i = 0; i < f.num_vars; ++i) x[i] = m >> i & 1;
            any = !first_violated_clause(f, x);
        }
        const auto got = sat_solve_brute(f);
        CHECK(any == got.has_value());
        if (got) CHECK_NOTHROW(require_satisfies(f, *got));
    }
}

TEST_CASE("require_satisfies names the violated clause") {
    const CnfFormula f{2, {{1, 2}, {-1}}};
    try {
        require_satisfies(f, {true, false});
        FAIL("expected refusal");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("clause 2") != std::string::npos);
    }
}
