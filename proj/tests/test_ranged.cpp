#include <doctest.h>

#include "support.hpp"
#include "tgr/errors.hpp"
#include "tgr/foremost.hpp"
#include "tgr/oracle.hpp"
#include "tgr/ranged.hpp"

using namespace tgr;

namespace {

const Dist INF = kInfinity;

RangeMatrix ranged(int n, std::vector<std::tuple<Vertex, Vertex, Range>> entries) {
    RangeMatrix r(n);
    for (auto [u, v, rg] : entries) r.set(u, v, rg);
    return r;
}

}  // namespace

TEST_CASE("candidate_times examples") {
    const auto r = ranged(2, {{1, 2, {1, 2}}, {2, 1, {1, 2}}});
    CHECK(candidate_times(r) == std::vector<Time>{1, 2, 3});

    const auto d = DistanceMatrix::from_rows({{0, 4, 2}, {7, 0, INF}, {2, 4, 0}});
    CHECK(candidate_times(RangeMatrix(d)) == d.distinct_finite_values());
    CHECK(candidate_times(RangeMatrix(3)).empty());
}

TEST_CASE("range_edge_compat reduces to edge_compat when everything is determined") {
    test::Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        const int n = test::uniform(rng, 2, 5);
        const auto d = test::random_matrix(rng, n, {1, 2, 3, 4, INF});
        const Vertex v = test::uniform(rng, 1, n);
        Vertex w = test::uniform(rng, 1, n - 1);
        if (w >= v) ++w;
        const Time t = test::uniform(rng, 1, 5);
        const RangeMatrix r(d);
        CHECK(range_edge_compat(r, v, w, t, CompatSplit(n)) == edge_compat(d, v, w, t));
        CHECK(prescribed_range_edge_compat(r, v, w, t, CompatSplit(n), StaticGraph::complete(n)) ==
              range_edge_compat(r, v, w, t, CompatSplit(n)));
        CHECK_FALSE(prescribed_range_edge_compat(r, v, w, t, CompatSplit(n), StaticGraph(n)));
    }
}

TEST_CASE("range_edge_compat with every finite undetermined entry in S u T") {
    // tau above every finite bound: all consequents hold.
    const auto r = ranged(3, {{1, 2, {1, 3}}, {2, 1, {2, 4}}, {1, 3, {1, 1}}, {3, 1, {1, 1}},
                              {2, 3, {2, 2}}, {3, 2, {2, 2}}});
    const auto undet = r.undetermined();
    const auto all = (std::uint64_t{1} << undet.size()) - 1;
    for (Vertex v = 1; v <= 3; ++v)
        for (Vertex w = 1; w <= 3; ++w)
            if (v != w) CHECK(range_edge_compat(r, v, w, 10, CompatSplit::from_masks(3, undet, 0, all)));
}

TEST_CASE("moving one entry from U to T flips range_edge_compat") {
    // D[1][1]=0 < 2 forces D[1][2] <= 2. With D[1][2] in [2,3] the entry must
    // be decided at tau=2 (put in T) for the edge {1,2} at time 2.
    const auto r = ranged(3, {{1, 2, {2, 3}}, {2, 1, {2, 2}}, {1, 3, {3, 3}}, {3, 1, {3, 3}},
                              {2, 3, {3, 3}}, {3, 2, {3, 3}}});
    const auto undet = r.undetermined();
    REQUIRE(undet.size() == 1);
    CHECK_FALSE(range_edge_compat(r, 1, 2, 2, CompatSplit::from_masks(3, undet, 0, 0)));
    CHECK(range_edge_compat(r, 1, 2, 2, CompatSplit::from_masks(3, undet, 0, 1)));
    CHECK_THROWS_AS(CompatSplit::from_masks(3, undet, 1, 1), ValidationError);
}

TEST_CASE("ns_range_edge_compat is symmetric") {
    test::Rng rng(2);
    for (int i = 0; i < 1000; ++i) {
        const int n = test::uniform(rng, 2, 5);
        const auto r = test::random_range_matrix(rng, n, test::uniform(rng, 0, 4), 3);
        const auto undet = r.undetermined();
        std::uint64_t s = 0, t = 0;
        for (std::size_t j = 0; j < undet.size(); ++j) {
            const int c = test::uniform(rng, 0, 2);
            if (c == 1) s |= std::uint64_t{1} << j;
            if (c == 2) t |= std::uint64_t{1} << j;
        }
        const auto split = CompatSplit::from_masks(n, undet, s, t);
        const Vertex v = test::uniform(rng, 1, n);
        Vertex w = test::uniform(rng, 1, n - 1);
        if (w >= v) ++w;
        const Time tau = test::uniform(rng, 1, 8);
        CHECK(ns_range_edge_compat(r, v, w, tau, split) == ns_range_edge_compat(r, w, v, tau, split));
    }
}

TEST_CASE("realize_ranged_foremost examples") {
    const auto yes = realize_ranged_foremost(ranged(2, {{1, 2, {1, 2}}, {2, 1, {1, 2}}}));
    REQUIRE(yes);
    CHECK(yes->graph.labels(1, 2)[0] == 1);
    CHECK_FALSE(realize_ranged_foremost(ranged(2, {{1, 2, {2, 3}}, {2, 1, {1, 1}}})));
}

TEST_CASE("k = 0 behaves like realize_foremost") {
    test::Rng rng(3);
    int yes = 0;
    for (int i = 0; i < 500; ++i) {
        const int n = test::uniform(rng, 1, 6);
        DistanceMatrix d = i % 2 ? test::random_matrix(rng, n, {1, 2, 3, 4, INF})
                                 : foremost_matrix(test::random_temporal_graph(rng, n, 2 * n, 6));
        const auto r = realize_ranged_foremost(RangeMatrix(d));
        const auto f = realize_foremost(d);
        CHECK(r.has_value() == f.has_value());
        if (r && f) {
            CHECK(r->determined == d);
            CHECK(r->graph == *f);
            ++yes;
        }
    }
    CHECK(yes > 100);
}

TEST_CASE("DP agrees with the determination oracle and witnesses verify") {
    test::Rng rng(4);
    int yes = 0, no = 0;
    for (int i = 0; i < 150; ++i) {
        const int n = test::uniform(rng, 2, 4);
        const auto r = test::random_range_matrix(rng, n, test::uniform(rng, 0, 4), 3);
        const auto o = oracle_ranged(r);
        REQUIRE(o.verdict != Verdict::BudgetExceeded);
        const auto got = realize_ranged_foremost(r);
        CAPTURE(i);
        REQUIRE(got.has_value() == (o.verdict == Verdict::Yes));
        if (!got) {
            ++no;
            continue;
        }
        ++yes;
        CHECK(r.contains(got->determined));
        CHECK(verify_ranged(got->graph, r).equal);
        CHECK(verify_realization(got->graph, got->determined, Metric::Foremost).equal);

        // Each temporal edge passes the predicate under the split induced by
        // the witness's own foremost values.
        const auto fo = foremost_matrix(got->graph);
        const auto undet = r.undetermined();
        for (const auto& [e, ls] : got->graph.edges())
            for (Time t : ls) {
                CompatSplit split(n);
                for (const auto& p : undet) {
                    if (fo(p.u, p.v) < Dist(t)) split.add_s(p.u, p.v);
                    else if (fo(p.u, p.v) == Dist(t)) split.add_t(p.u, p.v);
                }
                CHECK(range_edge_compat(r, e.u, e.v, t, split));
            }
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("witness-free mode answers the same") {
    test::Rng rng(5);
    RangedOptions opt;
    opt.witness = false;
    for (int i = 0; i < 100; ++i) {
        const auto r = test::random_range_matrix(rng, test::uniform(rng, 2, 5), test::uniform(rng, 0, 6), 3);
        CHECK(realize_ranged_foremost(r).has_value() == realize_ranged_foremost(r, opt).has_value());
    }
}

TEST_CASE("guard refuses large k") {
    RangeMatrix r(6);
    for (Vertex u = 1; u <= 6; ++u)
        for (Vertex v = 1; v <= 6; ++v)
            if (u != v) r.set(u, v, Range{1, 2});
    RangedOptions opt;
    opt.max_undetermined = 10;
    try {
        realize_ranged_foremost(r, opt);
        FAIL("expected refusal");
    } catch (const GuardExceeded& e) {
        CHECK(std::string(e.what()).find("k=30") != std::string::npos);
    }
}
