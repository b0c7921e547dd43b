#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tgr/cnf.hpp"
#include "tgr/dist.hpp"
#include "tgr/metrics.hpp"
#include "tgr/oracle.hpp"
#include "tgr/temporal_graph.hpp"

namespace tgr::test {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random temporal graph with `labels` label draws spread over random pairs.
// Labels are drawn from [1, max_time] (residues when periodic).
inline TemporalGraph random_temporal_graph(Rng& rng, int n, int labels, Time max_time,
                                           Time period = 0) {
    TemporalGraph g(n, period);
    if (n < 2) return g;
    for (int i = 0; i < labels; ++i) {
        const Vertex u = uniform(rng, 1, n);
        Vertex v = uniform(rng, 1, n - 1);
        if (v >= u) ++v;
        const Time hi = period > 0 ? std::min(period, max_time) : max_time;
        g.add_label(u, v, std::uniform_int_distribution<Time>(1, hi)(rng));
    }
    return g;
}

// Random matrix with entries drawn from `values` (kInfinity allowed).
inline DistanceMatrix random_matrix(Rng& rng, int n, const std::vector<Dist>& values) {
    DistanceMatrix d(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v)
            if (u != v) d.set(u, v, values[uniform(rng, 0, static_cast<int>(values.size()) - 1)]);
    return d;
}

// Ranged matrix with exactly k undetermined entries of width <= max_width.
// Half of the time it is built around a realizable matrix, otherwise around
// a random one, so both verdicts occur.
inline RangeMatrix random_range_matrix(Rng& rng, int n, int k, int max_width) {
    DistanceMatrix base;
    if (uniform(rng, 0, 1) == 0) {
        base = foremost_matrix(random_temporal_graph(rng, n, uniform(rng, n, 3 * n), 6));
    } else {
        base = random_matrix(rng, n, {1, 2, 3, 4, 5, kInfinity});
    }
    RangeMatrix r(base);
    std::vector<OrderedPair> pairs;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v)
            if (u != v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    k = std::min<int>(k, static_cast<int>(pairs.size()));
    for (int i = 0; i < k; ++i) {
        const auto [u, v] = pairs[i];
        const Dist c = base(u, v);
        const Time centre = c.is_finite() ? c.value() : uniform(rng, 1, 6);
        const Time width = uniform(rng, 1, max_width);
        const Time lo = std::max<Time>(1, centre - uniform(rng, 0, static_cast<int>(width)));
        const bool open = c.is_inf() || uniform(rng, 0, 5) == 0;
        r.set(u, v, Range{lo, open ? kInfinity : Dist(lo + width)});
    }
    return r;
}

// CNF with clauses of width 1..3 and no clause holding both polarities of
// one variable.
inline CnfFormula random_cnf(Rng& rng, int vars, int clauses) {
    CnfFormula f;
    f.num_vars = vars;
    for (int c = 0; c < clauses; ++c) {
        std::vector<int> clause;
        const int width = uniform(rng, 1, std::min(3, vars));
        std::vector<int> pool(vars);
        for (int i = 0; i < vars; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int i = 0; i < width; ++i) clause.push_back(uniform(rng, 0, 1) ? pool[i] : -pool[i]);
        f.clauses.push_back(clause);
    }
    return f;
}

inline CnfFormula random_satisfiable_cnf(Rng& rng, int max_vars, int max_clauses,
                                         bool both_polarities, Assignment& out) {
    while (true) {
        const int vars = uniform(rng, 1, max_vars);
        CnfFormula f = random_cnf(rng, vars, uniform(rng, 1, max_clauses));
        if (both_polarities) {
            // A missing polarity goes into the first clause without the
            // variable, or into a new unit clause.
            for (int x = 1; x <= vars; ++x)
                for (int lit : {x, -x}) {
                    bool seen = false;
                    for (const auto& c : f.clauses)
                        seen = seen || std::find(c.begin(), c.end(), lit) != c.end();
                    if (seen) continue;
                    bool placed = false;
                    for (auto& c : f.clauses)
                        if (std::find(c.begin(), c.end(), x) == c.end() &&
                            std::find(c.begin(), c.end(), -x) == c.end()) {
                            c.push_back(lit);
                            placed = true;
                            break;
                        }
                    if (!placed) f.clauses.push_back({lit});
                }
            if (static_cast<int>(f.clauses.size()) > max_clauses) continue;
        }
        if (auto a = sat_solve_brute(f)) {
            out = *a;
            return f;
        }
    }
}

}  // namespace tgr::test
