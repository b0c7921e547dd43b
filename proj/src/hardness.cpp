#include "tgr/hardness.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "tgr/errors.hpp"
#include "tgr/metrics.hpp"

namespace tgr {

std::pair<TemporalGraph, DistanceMatrix> gen_lower_bound_family(int n) {
    if (n < 2) throw ValidationError("lower-bound family needs n >= 2, got " + std::to_string(n));
    const Time nn = n;
    TemporalGraph g(n);
    for (Vertex v = 2; v <= n; ++v) {
        g.add_label(1, v, nn * v);
        for (Time j = v + 1; j <= nn; ++j) g.add_label(1, v, nn * j + v);
    }
    DistanceMatrix d(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v) continue;
            if (u == 1) d.set(u, v, nn * v);
            else if (v == 1) d.set(u, v, nn * u);
            else if (u > v) d.set(u, v, nn * u + v);
            else d.set(u, v, nn * v);
        }
    if (foremost_matrix(g) != d)
        throw std::logic_error("lower-bound family: closed form disagrees with foremost matrix");
    return {std::move(g), std::move(d)};
}

Vertex SatLayout::literal(int lit) const {
    const int x = std::abs(lit);
    return (with_vstar ? 3 : 2) + 2 * (x - 1) + (lit > 0 ? 1 : 2);
}

Vertex SatLayout::clause(std::size_t i) const {
    return (with_vstar ? 3 : 2) + 2 * num_vars + static_cast<int>(i) + 1;
}

int SatLayout::size() const { return (with_vstar ? 3 : 2) + 2 * num_vars + num_clauses; }

namespace {

SatLayout layout_for(const CnfFormula& f, bool vstar) {
    return SatLayout{f.num_vars, static_cast<int>(f.clauses.size()), vstar};
}

void set_both(DistanceMatrix& d, Vertex u, Vertex v, Dist x) {
    d.set(u, v, x);
    d.set(v, u, x);
}

void set_both(RangeMatrix& d, Vertex u, Vertex v, Range r) {
    d.set(u, v, r);
    d.set(v, u, r);
}

void require_assignment(const CnfFormula& f, const Assignment& a) {
    if (static_cast<int>(a.size()) != f.num_vars)
        throw ValidationError("assignment has " + std::to_string(a.size()) +
                              " variables, formula has " + std::to_string(f.num_vars));
    require_satisfies(f, a);
}

// Literal that the assignment makes true for variable x.
int true_literal(int x, const Assignment& a) { return a[x - 1] ? x : -x; }

}  // namespace

SatLayout sat_layout_foremost_single(const CnfFormula& f) { return layout_for(f, false); }
SatLayout sat_layout_ranged(const CnfFormula& f) { return layout_for(f, false); }
SatLayout sat_layout_shortest(const CnfFormula& f) { return layout_for(f, true); }

DistanceMatrix reduce_sat_to_foremost_single(const CnfFormula& f) {
    validate_cnf(f);
    const SatLayout L = sat_layout_foremost_single(f);
    DistanceMatrix d(L.size());
    for (Vertex u = 1; u <= L.size(); ++u)
        for (Vertex v = 1; v <= L.size(); ++v)
            if (u != v) d.set(u, v, 4);
    set_both(d, L.top(), L.bottom(), 1);
    for (int x = 1; x <= f.num_vars; ++x) {
        set_both(d, L.literal(x), L.literal(-x), 1);
        for (int lit : {x, -x}) {
            set_both(d, L.literal(lit), L.top(), 2);
            set_both(d, L.literal(lit), L.bottom(), 2);
            for (int y = x + 1; y <= f.num_vars; ++y)
                for (int other : {y, -y}) set_both(d, L.literal(lit), L.literal(other), 2);
        }
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Vertex c = L.clause(i);
        d.set(c, L.top(), 3);
        for (int lit : f.clauses[i]) {
            set_both(d, c, L.literal(lit), 2);
            d.set(L.literal(-lit), c, 2);
        }
    }
    return d;
}

TemporalGraph witness_foremost_single(const CnfFormula& f, const Assignment& a) {
    validate_cnf(f);
    require_assignment(f, a);
    const SatLayout L = sat_layout_foremost_single(f);
    std::map<EdgeKey, Time> label;
    label[EdgeKey::of(L.top(), L.bottom())] = 1;
    for (int x = 1; x <= f.num_vars; ++x) {
        label[EdgeKey::of(L.literal(x), L.literal(-x))] = 1;
        for (int y = x + 1; y <= f.num_vars; ++y)
            for (int lx : {x, -x})
                for (int ly : {y, -y}) label[EdgeKey::of(L.literal(lx), L.literal(ly))] = 2;
        const int t = true_literal(x, a);
        label[EdgeKey::of(L.literal(t), L.bottom())] = 2;
        label[EdgeKey::of(L.literal(-t), L.top())] = 2;
        label[EdgeKey::of(L.literal(t), L.top())] = 3;
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (int lit : f.clauses[i]) label[EdgeKey::of(L.clause(i), L.literal(lit))] = 2;
    TemporalGraph g(L.size());
    for (Vertex u = 1; u <= L.size(); ++u)
        for (Vertex v = u + 1; v <= L.size(); ++v) {
            auto it = label.find({u, v});
            g.add_label(u, v, it == label.end() ? 4 : it->second);
        }
    return g;
}

RangeMatrix reduce_sat_to_ranged(const CnfFormula& f) {
    validate_cnf(f);
    const SatLayout L = sat_layout_ranged(f);
    RangeMatrix d(L.size());
    const Range five{5, 5};
    for (Vertex u = 1; u <= L.size(); ++u)
        for (Vertex v = 1; v <= L.size(); ++v)
            if (u != v) d.set(u, v, five);
    for (int x = 1; x <= f.num_vars; ++x) {
        set_both(d, L.literal(x), L.literal(-x), Range{1, 1});
        for (int lit : {x, -x}) {
            d.set(L.literal(lit), L.top(), Range{2, 2});
            d.set(L.literal(lit), L.bottom(), Range{3, 3});
            d.set(L.top(), L.literal(lit), Range{2, 3});
            d.set(L.bottom(), L.literal(lit), Range{3, 4});
        }
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Vertex c = L.clause(i);
        d.set(c, L.top(), Range{2, 2});
        d.set(c, L.bottom(), Range{3, 3});
        for (int lit : f.clauses[i]) {
            set_both(d, c, L.literal(lit), Range{1, 1});
            d.set(c, L.literal(-lit), Range{2, 2});
        }
    }
    return d;
}

TemporalGraph witness_ranged(const CnfFormula& f, const Assignment& a) {
    validate_cnf(f);
    require_assignment(f, a);
    const SatLayout L = sat_layout_ranged(f);
    TemporalGraph g(L.size());
    for (Vertex u = 1; u <= L.size(); ++u)
        for (Vertex v = u + 1; v <= L.size(); ++v) g.add_label(u, v, 5);
    for (int x = 1; x <= f.num_vars; ++x) {
        g.add_labels(L.literal(x), L.literal(-x), {1, 2, 3, 4});
        const int t = true_literal(x, a);
        g.add_label(L.literal(t), L.top(), 2);
        g.add_label(L.literal(-t), L.bottom(), 3);
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (int lit : f.clauses[i]) g.add_label(L.clause(i), L.literal(lit), 1);
    return g;
}

DistanceMatrix reduce_sat_to_shortest(const CnfFormula& f) {
    validate_cnf_both_polarities(f);
    const SatLayout L = sat_layout_shortest(f);
    DistanceMatrix d(L.size());
    const Vertex top = L.top(), bot = L.bottom(), vs = L.vstar();

    for (int x = 1; x <= f.num_vars; ++x) {
        set_both(d, L.literal(x), L.literal(-x), 1);
        for (int lit : {x, -x}) {
            set_both(d, L.literal(lit), top, 1);
            set_both(d, L.literal(lit), bot, 1);
            set_both(d, L.literal(lit), vs, 2);
            for (int y = x + 1; y <= f.num_vars; ++y)
                for (int other : {y, -y}) set_both(d, L.literal(lit), L.literal(other), 2);
        }
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Vertex c = L.clause(i);
        set_both(d, c, vs, 1);
        d.set(c, top, 3);
        d.set(top, c, 2);
        set_both(d, c, bot, 2);
        for (std::size_t j = i + 1; j < f.clauses.size(); ++j) set_both(d, c, L.clause(j), 2);
        std::vector<char> present(static_cast<std::size_t>(f.num_vars) + 1, 0);
        for (int lit : f.clauses[i]) {
            present[std::abs(lit)] = 1;
            set_both(d, c, L.literal(lit), 1);
            set_both(d, c, L.literal(-lit), 2);
        }
        for (int x = 1; x <= f.num_vars; ++x)
            if (!present[x]) {
                set_both(d, c, L.literal(x), 3);
                set_both(d, c, L.literal(-x), 3);
            }
    }
    set_both(d, vs, bot, 3);
    set_both(d, bot, top, 2);
    d.set(vs, top, 4);
    d.set(top, vs, 3);

    for (Vertex u = 1; u <= L.size(); ++u)
        for (Vertex v = 1; v <= L.size(); ++v)
            if (u != v && d(u, v).is_inf())
                throw std::logic_error("shortest reduction left entry (" + std::to_string(u) +
                                       "," + std::to_string(v) + ") undefined");
    return d;
}

TemporalGraph witness_shortest(const CnfFormula& f, const Assignment& a) {
    validate_cnf_both_polarities(f);
    require_assignment(f, a);
    const SatLayout L = sat_layout_shortest(f);
    TemporalGraph g(L.size());
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        g.add_labels(L.clause(i), L.vstar(), {1, 2, 7, 8});
    for (int x = 1; x <= f.num_vars; ++x) {
        g.add_labels(L.literal(x), L.bottom(), {1, 2, 7, 8});
        g.add_labels(L.literal(-x), L.bottom(), {1, 2, 7, 8});
        g.add_labels(L.literal(x), L.literal(-x), {1, 4, 7});
        const int t = true_literal(x, a);
        g.add_label(L.literal(t), L.top(), 2);
        g.add_label(L.literal(-t), L.top(), 5);
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (int lit : f.clauses[i])
            g.add_label(L.clause(i), L.literal(lit), literal_true(lit, a) ? 3 : 6);
    return g;
}

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

// Components of the bipartite graph spanned by `edges`, each split into the
// side from class a and the side from class b. Ordered by smallest vertex.
std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> biclique_parts(
    const MccInstance& inst, const std::vector<EdgeKey>& edges, int a) {
    UnionFind uf(inst.n);
    std::set<Vertex> touched;
    for (const EdgeKey& e : edges) {
        uf.unite(e.u, e.v);
        touched.insert(e.u);
        touched.insert(e.v);
    }
    std::map<int, std::size_t> slot;
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> parts;
    for (Vertex v : touched) {
        const int r = uf.find(v);
        auto [it, fresh] = slot.emplace(r, parts.size());
        if (fresh) parts.emplace_back();
        auto& part = parts[it->second];
        (inst.color[v - 1] == a ? part.first : part.second).push_back(v);
    }
    return parts;
}

std::vector<EdgeKey> edges_between(const MccInstance& inst, int a, int b) {
    std::vector<EdgeKey> out;
    for (const EdgeKey& e : inst.edges) {
        const int cu = inst.color[e.u - 1], cv = inst.color[e.v - 1];
        if ((cu == a && cv == b) || (cu == b && cv == a)) out.push_back(e);
    }
    return out;
}

}  // namespace

void check_mcc(const MccInstance& inst) {
    if (inst.k < 1) throw ValidationError("MCC instance needs k >= 1");
    if (inst.n < 0 || static_cast<int>(inst.color.size()) != inst.n)
        throw ValidationError("MCC instance has " + std::to_string(inst.color.size()) +
                              " class ids for " + std::to_string(inst.n) + " vertices");
    for (int v = 1; v <= inst.n; ++v)
        if (inst.color[v - 1] < 1 || inst.color[v - 1] > inst.k)
            throw ValidationError("vertex " + std::to_string(v) + " has class " +
                                  std::to_string(inst.color[v - 1]) + " outside 1.." +
                                  std::to_string(inst.k));
    std::set<EdgeKey> seen;
    for (const EdgeKey& e : inst.edges) {
        const std::string name = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
        if (e.u < 1 || e.v > inst.n || e.u >= e.v) throw ValidationError(name + " is malformed");
        if (!seen.insert(e).second) throw ValidationError(name + " is listed twice");
        if (inst.color[e.u - 1] == inst.color[e.v - 1])
            throw ValidationError(name + " lies inside class " +
                                  std::to_string(inst.color[e.u - 1]));
    }
    for (int a = 1; a <= inst.k; ++a)
        for (int b = a + 1; b <= inst.k; ++b) {
            const auto edges = edges_between(inst, a, b);
            std::map<std::pair<Vertex, Vertex>, bool> present;
            for (const EdgeKey& e : edges) present[{e.u, e.v}] = true;
            for (const auto& [side_a, side_b] : biclique_parts(inst, edges, a))
                for (Vertex u : side_a)
                    for (Vertex v : side_b)
                        if (!present.count({std::min(u, v), std::max(u, v)}))
                            throw ValidationError(
                                "classes " + std::to_string(a) + " and " + std::to_string(b) +
                                " do not form a disjoint union of bicliques: " +
                                std::to_string(u) + " and " + std::to_string(v) +
                                " share a component but are not adjacent");
        }
    if (inst.clique) check_mcc_clique(inst, *inst.clique);
}

void check_mcc_clique(const MccInstance& inst, const std::vector<Vertex>& clique) {
    if (static_cast<int>(clique.size()) != inst.k)
        throw ValidationError("clique has " + std::to_string(clique.size()) +
                              " vertices, expected k=" + std::to_string(inst.k));
    std::set<EdgeKey> edges(inst.edges.begin(), inst.edges.end());
    for (int i = 0; i < inst.k; ++i) {
        const Vertex v = clique[i];
        if (v < 1 || v > inst.n)
            throw ValidationError("clique vertex " + std::to_string(v) + " out of range");
        if (inst.color[v - 1] != i + 1)
            throw ValidationError("clique vertex " + std::to_string(v) + " has class " +
                                  std::to_string(inst.color[v - 1]) + ", expected " +
                                  std::to_string(i + 1));
        for (int j = 0; j < i; ++j)
            if (!edges.count(EdgeKey::of(clique[j], v)))
                throw ValidationError("clique vertices " + std::to_string(clique[j]) + " and " +
                                      std::to_string(v) + " are not adjacent");
    }
}

MccInstance gen_mcc_instance(int k, int class_size, bool planted, std::uint64_t seed) {
    if (k < 2) throw ValidationError("gen_mcc_instance needs k >= 2");
    if (class_size < 1) throw ValidationError("gen_mcc_instance needs class_size >= 1");
    std::mt19937_64 rng(seed);
    // Plain modulo keeps the output identical across standard libraries.
    auto pick = [&](std::uint64_t m) { return static_cast<int>(rng() % m); };

    MccInstance inst;
    inst.k = k;
    inst.n = k * class_size;
    for (int a = 1; a <= k; ++a)
        for (int j = 0; j < class_size; ++j) inst.color.push_back(a);
    auto vertex = [&](int a, int j) { return (a - 1) * class_size + j + 1; };

    std::vector<Vertex> clique;
    if (planted)
        for (int a = 1; a <= k; ++a) clique.push_back(vertex(a, pick(class_size)));

    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            // Vertices sharing an active group form one biclique.
            std::vector<int> ga(class_size), gb(class_size);
            for (int& g : ga) g = pick(class_size);
            for (int& g : gb) g = pick(class_size);
            std::vector<char> active(class_size);
            for (auto& x : active) x = pick(2) == 0;
            if (planted) {
                const int ja = clique[a - 1] - vertex(a, 0);
                const int jb = clique[b - 1] - vertex(b, 0);
                gb[jb] = ga[ja];
                active[ga[ja]] = 1;
            }
            for (int i = 0; i < class_size; ++i)
                for (int j = 0; j < class_size; ++j)
                    if (ga[i] == gb[j] && active[ga[i]])
                        inst.edges.push_back(EdgeKey::of(vertex(a, i), vertex(b, j)));
        }
    std::sort(inst.edges.begin(), inst.edges.end());
    if (planted) inst.clique = clique;
    check_mcc(inst);
    return inst;
}

MccLayout mcc_layout(const MccInstance& inst) { return MccLayout{inst.k, inst.n}; }

StaticGraph mcc_construction_graph(const MccInstance& inst) {
    const MccLayout L = mcc_layout(inst);
    const int n = L.size();
    StaticGraph g(n);
    std::vector<Vertex> lset{L.lstar(), L.lstar2()};
    for (int i = 1; i <= L.k; ++i) {
        lset.push_back(L.l(i));
        lset.push_back(L.lprime(i));
    }
    for (Vertex l : lset)
        for (Vertex q = 1; q <= n; ++q)
            if (q != l && q != L.s() && q != L.t()) g.add_edge(l, q);
    for (Vertex z : {L.s1(), L.s2()})
        for (Vertex q = 1; q <= n; ++q)
            if (q != z && q != L.t()) g.add_edge(z, q);
    for (Vertex z : {L.t1(), L.t2()})
        for (Vertex q = 1; q <= n; ++q)
            if (q != z && q != L.s()) g.add_edge(z, q);
    for (Vertex v = 1; v <= inst.n; ++v) {
        const int a = inst.color[v - 1];
        // x_a sits before class a, x_{a+1} after it.
        g.add_edge(L.x(a), L.original(v));
        g.add_edge(L.x(a + 1), L.original(v));
    }
    g.add_edge(L.s(), L.x(1));
    g.add_edge(L.t(), L.x(L.k + 1));
    return g;
}

DistanceMatrix reduce_mcc_to_fastest(const MccInstance& inst) {
    check_mcc(inst);
    const MccLayout L = mcc_layout(inst);
    const int n = L.size();
    const Time k = inst.k;
    const Time slow = 2 * k + 3;
    DistanceMatrix d(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v)
            if (u != v) d.set(u, v, 2);
    std::vector<Vertex> lset{L.lstar(), L.lstar2()};
    for (int i = 1; i <= L.k; ++i) {
        lset.push_back(L.l(i));
        lset.push_back(L.lprime(i));
    }
    for (Vertex q : lset) {
        set_both(d, L.s(), q, slow);
        set_both(d, L.t(), q, slow);
    }
    for (Vertex q : {L.t1(), L.t2()}) set_both(d, L.s(), q, slow);
    for (Vertex q : {L.s1(), L.s2()}) set_both(d, L.t(), q, slow);
    std::set<EdgeKey> e(inst.edges.begin(), inst.edges.end());
    for (Vertex u = 1; u <= inst.n; ++u)
        for (Vertex v = u + 1; v <= inst.n; ++v)
            if (!e.count({u, v})) set_both(d, L.original(u), L.original(v), slow);
    d.set(L.s(), L.t(), 2 * k + 2);
    d.set(L.t(), L.s(), 4 * k + 5);
    for (const EdgeKey& ge : mcc_construction_graph(inst).edges()) set_both(d, ge.u, ge.v, 1);
    return d;
}

TemporalGraph witness_fastest(const MccInstance& inst, const std::vector<Vertex>& clique) {
    check_mcc(inst);
    check_mcc_clique(inst, clique);
    const MccLayout L = mcc_layout(inst);
    const int k = inst.k;
    const StaticGraph gp = mcc_construction_graph(inst);
    const Time width = 10 * static_cast<Time>(k) + 20;
    int block = 0;
    Time alpha = 0;
    auto next_block = [&] { alpha = 1 + static_cast<Time>(block++) * width; };

    std::map<EdgeKey, Time> label;
    auto put = [&](Vertex u, Vertex v, Time t) {
        if (!gp.has_edge(u, v))
            throw std::logic_error("fastest witness labels a non-edge {" + std::to_string(u) +
                                   "," + std::to_string(v) + "}");
        if (!label.emplace(EdgeKey::of(u, v), t).second)
            throw std::logic_error("fastest witness labels {" + std::to_string(u) + "," +
                                   std::to_string(v) + "} twice");
    };

    std::vector<Vertex> vx;  // V and X in construction numbering
    for (int i = 1; i <= k + 1; ++i) vx.push_back(L.x(i));
    for (Vertex v = 1; v <= inst.n; ++v) vx.push_back(L.original(v));
    std::vector<Vertex> lset{L.lstar(), L.lstar2()};
    for (int i = 1; i <= k; ++i) {
        lset.push_back(L.l(i));
        lset.push_back(L.lprime(i));
    }

    // Everything touching s, t, their twins and L, except D[s][t].
    next_block();
    put(L.s(), L.s1(), alpha + 1);
    put(L.t(), L.t1(), alpha + 1);
    put(L.s(), L.s2(), alpha + 4 * k + 5);
    put(L.t(), L.t2(), alpha + 4 * k + 5);
    for (Vertex q : vx) {
        put(L.s1(), q, alpha + 2);
        put(L.t1(), q, alpha + 2);
        put(q, L.s2(), alpha + 4 * k + 4);
        put(q, L.t2(), alpha + 4 * k + 4);
    }
    for (Vertex a : {L.s1(), L.s2()})
        for (Vertex b : {L.t1(), L.t2()}) put(a, b, alpha + 2 * k + 3);
    for (Vertex l : lset)
        for (Vertex z : {L.s1(), L.t1(), L.s2(), L.t2()}) put(l, z, alpha + 2 * k + 3);

    // The clique path from s to t.
    next_block();
    {
        std::vector<Vertex> path{L.s()};
        for (int i = 1; i <= k; ++i) {
            path.push_back(L.x(i));
            path.push_back(L.original(clique[i - 1]));
        }
        path.push_back(L.x(k + 1));
        path.push_back(L.t());
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            put(path[i], path[i + 1], alpha + static_cast<Time>(i));
    }

    // Slow V-V entries and V-X entries through l*, l**.
    next_block();
    for (Vertex v = 1; v <= inst.n; ++v) {
        put(L.original(v), L.lstar(), alpha + 1);
        put(L.original(v), L.lstar2(), alpha + 2 * k + 3);
    }
    for (int i = 1; i <= k + 1; ++i) {
        put(L.x(i), L.lstar(), alpha);
        put(L.x(i), L.lstar2(), alpha + 2 * k + 4);
    }
    put(L.lstar(), L.lstar2(), alpha + 2);

    // X-X entries, one block per x_i.
    for (int i = 1; i <= k + 1; ++i) {
        next_block();
        const Vertex hub = i <= k ? L.l(i) : L.lprime(1);
        put(L.x(i), hub, alpha);
        for (int j = 1; j <= k + 1; ++j)
            if (j != i) put(hub, L.x(j), alpha + 1);
    }

    // Edges of G in both directions, two blocks per biclique of each colour
    // class matching M_i = {(a,b) : a + b = i - 1 mod k}.
    for (int i = 1; i <= k; ++i)
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                if ((a + b) % k != i - 1) continue;
                for (const auto& [side_a, side_b] : biclique_parts(inst, edges_between(inst, a, b), a)) {
                    next_block();
                    for (Vertex v : side_a) put(L.original(v), L.l(i), alpha);
                    for (Vertex v : side_b) put(L.original(v), L.l(i), alpha + 1);
                    next_block();
                    for (Vertex v : side_b) put(L.original(v), L.lprime(i), alpha);
                    for (Vertex v : side_a) put(L.original(v), L.lprime(i), alpha + 1);
                }
            }

    next_block();
    for (const EdgeKey& e : gp.edges())
        if (!label.count(e)) put(e.u, e.v, alpha);

    TemporalGraph g(L.size());
    for (const auto& [e, t] : label) g.add_label(e.u, e.v, t);
    return g;
}

std::pair<DistanceMatrix, Time> lift_fastest_to_periodic(const DistanceMatrix& d) {
    const Dist mx = d.max_finite();
    const Time m = mx.is_finite() ? mx.value() : 0;
    const Time n = d.size();
    return {d, 2 * n * n * m + 1};
}

}  // namespace tgr
