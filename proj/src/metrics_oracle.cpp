#include <algorithm>
#include <limits>
#include <string>

#include "tgr/errors.hpp"
#include "tgr/metrics.hpp"

namespace tgr {

namespace {

constexpr Time kNone = std::numeric_limits<Time>::max();

struct Walker {
    const TemporalGraph& g;  // aperiodic
    int n;
    bool strict;
    Time last_departure;
    std::vector<std::vector<Vertex>> nbrs;
    std::vector<bool> on_path;
    std::vector<Time> fo, fa, sh;

    Walker(const TemporalGraph& graph, bool s, Time last_dep)
        : g(graph), n(graph.size()), strict(s), last_departure(last_dep), nbrs(graph.size() + 1),
          on_path(graph.size() + 1, false) {
        for (const auto& [e, ls] : g.edges()) {
            nbrs[e.u].push_back(e.v);
            nbrs[e.v].push_back(e.u);
        }
    }

    // Extends the current path ending at x whose last label is `last`.
    void extend(Vertex x, Time first, Time last, Time hops) {
        for (Vertex y : nbrs[x]) {
            if (on_path[y]) continue;
            for (Time t : g.labels(x, y)) {
                if (hops == 0) {
                    if (t > last_departure) continue;
                } else if (strict ? t <= last : t < last) {
                    continue;
                }
                const Time dep = hops == 0 ? t : first;
                fo[y] = std::min(fo[y], t);
                fa[y] = std::min(fa[y], t - dep + 1);
                sh[y] = std::min(sh[y], hops + 1);
                on_path[y] = true;
                extend(y, dep, t, hops + 1);
                on_path[y] = false;
            }
        }
    }

    void from(Vertex s) {
        fo.assign(n + 1, kNone);
        fa.assign(n + 1, kNone);
        sh.assign(n + 1, kNone);
        on_path[s] = true;
        extend(s, 0, 0, 0);
        on_path[s] = false;
    }
};

void put(DistanceMatrix& d, Vertex s, const std::vector<Time>& row) {
    for (Vertex v = 1; v < static_cast<Vertex>(row.size()); ++v)
        if (v != s && row[v] != kNone) d.set(s, v, Dist(row[v]));
}

}  // namespace

DistanceMatrix oracle_metric(const TemporalGraph& g, Metric m, Semantics sem,
                             const OracleGuard& guard, const MetricOptions& opt) {
    g.validate();
    if (g.size() > guard.max_vertices)
        throw GuardExceeded("oracle_metric: " + std::to_string(g.size()) +
                            " vertices exceeds guard of " + std::to_string(guard.max_vertices));
    if (g.label_count() > guard.max_labels)
        throw GuardExceeded("oracle_metric: " + std::to_string(g.label_count()) +
                            " labels exceeds guard of " + std::to_string(guard.max_labels));
    Time horizon = 0;
    Time last_departure = kNone;
    if (g.periodic()) {
        horizon = static_cast<Time>(g.size()) * g.period();
        if (m == Metric::Fastest) {
            horizon += g.period();
            last_departure = g.period();
        }
        if (opt.horizon) horizon = *opt.horizon;
    }
    const TemporalGraph flat = g.periodic() ? g.unrolled(horizon) : g;
    Walker w(flat, sem == Semantics::Strict, last_departure);
    DistanceMatrix d(g.size());
    for (Vertex s = 1; s <= g.size(); ++s) {
        w.from(s);
        put(d, s, m == Metric::Foremost ? w.fo : m == Metric::Fastest ? w.fa : w.sh);
    }
    return d;
}

}  // namespace tgr
