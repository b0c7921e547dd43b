#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tgr/cnf.hpp"
#include "tgr/dist.hpp"
#include "tgr/temporal_graph.hpp"

namespace tgr {

// Star rooted at 1 whose foremost matrix has (n-1) + (n-1)(n-2)/2 distinct
// finite entries. The matrix is built from closed forms and checked against
// foremost_matrix(graph) before returning. Throws ValidationError for n < 2.
std::pair<TemporalGraph, DistanceMatrix> gen_lower_bound_family(int n);

// Vertex numbering shared by the three SAT constructions: top, bottom, the
// optional v* (shortest only), then x_1, not x_1, x_2, ..., then clauses.
struct SatLayout {
    int num_vars = 0;
    int num_clauses = 0;
    bool with_vstar = false;

    Vertex top() const { return 1; }
    Vertex bottom() const { return 2; }
    Vertex vstar() const { return with_vstar ? 3 : 0; }
    Vertex literal(int lit) const;  // DIMACS literal -> vertex
    Vertex clause(std::size_t i) const;  // 0-based clause index
    int size() const;
};

SatLayout sat_layout_foremost_single(const CnfFormula& f);
SatLayout sat_layout_ranged(const CnfFormula& f);
SatLayout sat_layout_shortest(const CnfFormula& f);

DistanceMatrix reduce_sat_to_foremost_single(const CnfFormula& f);
// One label on every edge of the complete graph. Throws ValidationError when
// the assignment does not satisfy f.
TemporalGraph witness_foremost_single(const CnfFormula& f, const Assignment& a);

RangeMatrix reduce_sat_to_ranged(const CnfFormula& f);
TemporalGraph witness_ranged(const CnfFormula& f, const Assignment& a);

// Requires every variable in both polarities.
DistanceMatrix reduce_sat_to_shortest(const CnfFormula& f);
TemporalGraph witness_shortest(const CnfFormula& f, const Assignment& a);

// k color classes; color[v-1] in 1..k. Edges are stored with u < v.
struct MccInstance {
    int n = 0;
    int k = 0;
    std::vector<int> color;
    std::vector<EdgeKey> edges;
    // One vertex per class, listed by class, when the generator planted it.
    std::optional<std::vector<Vertex>> clique;

    friend bool operator==(const MccInstance&, const MccInstance&) = default;
};

// Throws ValidationError unless every class is independent and every
// G[V_a u V_b] is a disjoint union of bicliques. When the instance carries a
// clique it is checked too.
void check_mcc(const MccInstance& inst);
// Throws ValidationError unless clique holds one vertex of each class, listed
// in class order, pairwise adjacent.
void check_mcc_clique(const MccInstance& inst, const std::vector<Vertex>& clique);

MccInstance gen_mcc_instance(int k, int class_size, bool planted, std::uint64_t seed);

// Vertex numbering of the fastest construction: s, s', s'', t, t', t'', then
// x_1..x_{k+1}, then l*, l**, l_1, l'_1, ..., l_k, l'_k, then V in input order.
struct MccLayout {
    int k = 0;
    int base_n = 0;

    Vertex s() const { return 1; }
    Vertex s1() const { return 2; }
    Vertex s2() const { return 3; }
    Vertex t() const { return 4; }
    Vertex t1() const { return 5; }
    Vertex t2() const { return 6; }
    Vertex x(int i) const { return 6 + i; }  // 1..k+1
    Vertex lstar() const { return 7 + k + 1; }
    Vertex lstar2() const { return lstar() + 1; }
    Vertex l(int i) const { return lstar() + 2 * i; }        // 1..k
    Vertex lprime(int i) const { return lstar() + 2 * i + 1; }  // 1..k
    Vertex original(Vertex v) const { return lstar() + 2 * k + 1 + v; }
    int size() const { return 6 + (k + 1) + (2 * k + 2) + base_n; }
};

MccLayout mcc_layout(const MccInstance& inst);
// Underlying static graph of the construction (the 1-entries of D).
StaticGraph mcc_construction_graph(const MccInstance& inst);
DistanceMatrix reduce_mcc_to_fastest(const MccInstance& inst);
// One label per construction edge, arranged in time blocks of width 10k+20.
TemporalGraph witness_fastest(const MccInstance& inst, const std::vector<Vertex>& clique);

// Period 2 n^2 max(D) + 1 for the periodic variant of the same instance.
std::pair<DistanceMatrix, Time> lift_fastest_to_periodic(const DistanceMatrix& d);

}  // namespace tgr
