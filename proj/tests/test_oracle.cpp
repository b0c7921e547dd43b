#include <doctest.h>

#include "support.hpp"
#include "tgr/errors.hpp"
#include "tgr/foremost.hpp"
#include "tgr/hardness.hpp"
#include "tgr/oracle.hpp"
#include "tgr/ranged.hpp"

using namespace tgr;

namespace {

const Dist INF = kInfinity;

DistanceMatrix rows(std::vector<std::vector<Dist>> r) { return DistanceMatrix::from_rows(r); }

}  // namespace

TEST_CASE("oracle_foremost_realizable on 2x2 matrices") {
    const auto yes = oracle_foremost_realizable(rows({{0, 1}, {1, 0}}));
    CHECK(yes.verdict == Verdict::Yes);
    REQUIRE(yes.certificate);
    CHECK(foremost_matrix(*yes.certificate) == rows({{0, 1}, {1, 0}}));

    const auto no = oracle_foremost_realizable(rows({{0, 1}, {2, 0}}));
    CHECK(no.verdict == Verdict::No);
    CHECK_FALSE(no.certificate);
}

TEST_CASE("oracle certificates realize the matrix under the requested semantics") {
    test::Rng rng(21);
    SearchBudget b;
    b.prune_compat = false;
    for (int i = 0; i < 60; ++i) {
        const int n = test::uniform(rng, 2, 4);
        const Semantics sem = i % 2 ? Semantics::NonStrict : Semantics::Strict;
        const auto d = foremost_matrix(test::random_temporal_graph(rng, n, n + 1, 4), sem);
        const auto r = oracle_foremost_realizable(d, sem, b);
        REQUIRE(r.verdict == Verdict::Yes);
        CHECK(foremost_matrix(*r.certificate, sem) == d);
    }
}

TEST_CASE("oracle agrees with the realizers on 3x3 matrices") {
    // Every fourth matrix of the sweep; the full sweep runs in acceptance.
    const std::vector<Dist> vals{1, 2, 3, INF};
    int idx = 0;
    for (int code = 0; code < 4096; code += 4, ++idx) {
        DistanceMatrix d(3);
        int c = code;
        for (Vertex u = 1; u <= 3; ++u)
            for (Vertex v = 1; v <= 3; ++v)
                if (u != v) {
                    d.set(u, v, vals[c % 4]);
                    c /= 4;
                }
        SearchBudget b;
        b.prune_compat = idx % 2 == 0;
        CAPTURE(code);
        CHECK((oracle_foremost_realizable(d, Semantics::Strict, b).verdict == Verdict::Yes) ==
              realize_foremost(d).has_value());
        CHECK((oracle_foremost_realizable(d, Semantics::NonStrict, b).verdict == Verdict::Yes) ==
              realize_ns_foremost(d).has_value());
    }
}

TEST_CASE("oracle is deterministic") {
    test::Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        const auto d = foremost_matrix(test::random_temporal_graph(rng, 4, 5, 4));
        const auto a = oracle_foremost_realizable(d);
        const auto b = oracle_foremost_realizable(d);
        CHECK(a.verdict == b.verdict);
        CHECK(a.nodes == b.nodes);
        CHECK(a.certificate == b.certificate);
    }
}

TEST_CASE("budget exhaustion is a distinct verdict") {
    const auto d = rows({{0, 1, 2, 3}, {1, 0, 3, 3}, {2, 3, 0, 3}, {3, 3, 3, 0}});
    SearchBudget b;
    b.max_nodes = 2;
    b.prune_compat = false;
    const auto r = oracle_foremost_realizable(d, Semantics::Strict, b);
    CHECK(r.verdict == Verdict::BudgetExceeded);
    CHECK_FALSE(r.certificate);

    SearchBudget small;
    small.max_vertices = 3;
    CHECK(oracle_foremost_realizable(d, Semantics::Strict, small).verdict == Verdict::BudgetExceeded);
}

TEST_CASE("single-label oracle") {
    CHECK(oracle_single_label_foremost(rows({{0, 1}, {1, 0}})).verdict == Verdict::Yes);
    CHECK(oracle_single_label_foremost(rows({{0, 1}, {2, 0}})).verdict == Verdict::No);

    // Two labels are needed here: 1->2 at 1 and 2->1 only via 3 later.
    TemporalGraph g(3);
    g.add_labels(1, 2, {1, 3});
    g.add_label(2, 3, 2);
    const auto d = foremost_matrix(g);
    CHECK(oracle_foremost_realizable(d).verdict == Verdict::Yes);

    const auto x = oracle_single_label_foremost(reduce_sat_to_foremost_single({1, {{1}}}));
    CHECK(x.verdict == Verdict::Yes);
    REQUIRE(x.certificate);
    for (const auto& [e, ls] : x.certificate->edges()) CHECK(ls.size() <= 1);

    CHECK(oracle_single_label_foremost(reduce_sat_to_foremost_single({1, {{1}, {-1}}})).verdict ==
          Verdict::No);
}

TEST_CASE("oracle_ranged") {
    RangeMatrix yes(2);
    yes.set(1, 2, Range{1, 2});
    yes.set(2, 1, Range{1, 2});
    const auto a = oracle_ranged(yes);
    CHECK(a.verdict == Verdict::Yes);
    REQUIRE(a.determination);
    CHECK(yes.contains(*a.determination));
    CHECK(verify_ranged(*a.certificate, yes).equal);

    RangeMatrix no(2);
    no.set(1, 2, Range{2, 3});
    no.set(2, 1, Range{1, 1});
    const auto b = oracle_ranged(no);
    CHECK(b.verdict == Verdict::No);
    CHECK(b.determinations == 2);

    // All-singleton ranges reduce to the plain oracle.
    test::Rng rng(23);
    for (int i = 0; i < 80; ++i) {
        const auto d = test::random_matrix(rng, 3, {1, 2, 3, INF});
        CHECK((oracle_ranged(RangeMatrix(d)).verdict == Verdict::Yes) ==
              (oracle_foremost_realizable(d).verdict == Verdict::Yes));
    }

    // Width-2 ranges on 3x3 instances against the DP.
    for (int i = 0; i < 60; ++i) {
        const auto r = test::random_range_matrix(rng, 3, test::uniform(rng, 1, 3), 2);
        CHECK((oracle_ranged(r).verdict == Verdict::Yes) == realize_ranged_foremost(r).has_value());
    }

    SearchBudget tight;
    tight.max_determinations = 1;
    CHECK(oracle_ranged(no, tight).verdict == Verdict::BudgetExceeded);
}

TEST_CASE("sat_solve_brute returns the first assignment") {
    const auto a = sat_solve_brute({2, {{1, 2}}});
    REQUIRE(a);
    CHECK(*a == Assignment{false, true});
    CHECK_THROWS_AS(sat_solve_brute({21, {{1}}}), ValidationError);
}
