#include "tgr/metrics.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "tgr/errors.hpp"

namespace tgr {

std::string to_string(Metric m) {
    switch (m) {
        case Metric::Foremost: return "foremost";
        case Metric::Fastest: return "fastest";
        case Metric::Shortest: return "shortest";
    }
    return "?";
}

std::string to_string(Semantics s) { return s == Semantics::Strict ? "strict" : "non-strict"; }

namespace {

constexpr Time kNever = std::numeric_limits<Time>::max();

struct Event {
    Time t;
    int a;
    int b;
};

struct Edge {
    int a;
    int b;
    std::vector<Time> labels;
};

// Aperiodic, 0-based view of a temporal graph.
struct Prepared {
    int n = 0;
    std::vector<Event> events;  // sorted by time
    std::vector<Edge> edges;
    std::vector<std::vector<Time>> incident;  // sorted distinct labels per vertex
};

Prepared prepare(const TemporalGraph& g, Time horizon) {
    g.validate();
    const TemporalGraph flat = g.periodic() ? g.unrolled(horizon) : g;
    Prepared p;
    p.n = g.size();
    p.incident.resize(p.n);
    for (const auto& [e, ls] : flat.edges()) {
        if (ls.empty()) continue;
        p.edges.push_back({e.u - 1, e.v - 1, ls});
        for (Time t : ls) {
            p.events.push_back({t, e.u - 1, e.v - 1});
            p.incident[e.u - 1].push_back(t);
            p.incident[e.v - 1].push_back(t);
        }
    }
    std::stable_sort(p.events.begin(), p.events.end(),
                     [](const Event& x, const Event& y) { return x.t < y.t; });
    for (auto& v : p.incident) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return p;
}

Time default_horizon(const TemporalGraph& g, Metric m, const MetricOptions& opt) {
    if (opt.horizon) return *opt.horizon;
    if (!g.periodic()) return 0;
    const Time h = static_cast<Time>(std::max(g.size(), 1)) * g.period();
    return m == Metric::Fastest ? h + g.period() : h;
}

template <class Fn>
void for_each_source(int n, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1))));
    if (threads == 1) {
        for (int s = 0; s < n; ++s) fn(s);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k)
        pool.emplace_back([&, k] {
            for (int s = static_cast<int>(k); s < n; s += static_cast<int>(threads)) fn(s);
        });
    for (auto& th : pool) th.join();
}

// Earliest arrival scan starting at event index `from`. arr must be
// initialised by the caller. Non-strict groups are closed under snapshot
// reachability.
class Scanner {
public:
    explicit Scanner(const Prepared& p) : p_(p), adj_(p.n), stack_() {}

    void run(std::vector<Time>& arr, std::size_t from, Semantics sem) {
        const auto& ev = p_.events;
        if (sem == Semantics::Strict) {
            for (std::size_t i = from; i < ev.size(); ++i) {
                const Event& e = ev[i];
                if (arr[e.a] < e.t && arr[e.b] > e.t)
                    arr[e.b] = e.t;
                else if (arr[e.b] < e.t && arr[e.a] > e.t)
                    arr[e.a] = e.t;
            }
            return;
        }
        std::size_t i = from;
        while (i < ev.size()) {
            const Time t = ev[i].t;
            std::size_t j = i;
            while (j < ev.size() && ev[j].t == t) ++j;
            stack_.clear();
            for (std::size_t q = i; q < j; ++q) {
                const Event& e = ev[q];
                adj_[e.a].push_back(e.b);
                adj_[e.b].push_back(e.a);
                if (arr[e.a] <= t) stack_.push_back(e.a);
                if (arr[e.b] <= t) stack_.push_back(e.b);
            }
            while (!stack_.empty()) {
                const int x = stack_.back();
                stack_.pop_back();
                for (int y : adj_[x])
                    if (arr[y] > t) {
                        arr[y] = t;
                        stack_.push_back(y);
                    }
            }
            for (std::size_t q = i; q < j; ++q) {
                adj_[ev[q].a].clear();
                adj_[ev[q].b].clear();
            }
            i = j;
        }
    }

private:
    const Prepared& p_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> stack_;
};

DistanceMatrix assemble(int n, const std::vector<std::vector<Time>>& rows) {
    DistanceMatrix d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rows[u][v] != kNever) d.set(u + 1, v + 1, Dist(rows[u][v]));
    return d;
}

}  // namespace

DistanceMatrix foremost_matrix(const TemporalGraph& g, Semantics sem, const MetricOptions& opt) {
    const Prepared p = prepare(g, default_horizon(g, Metric::Foremost, opt));
    std::vector<std::vector<Time>> rows(p.n);
    for_each_source(p.n, opt.threads, [&](int s) {
        Scanner sc(p);
        std::vector<Time> arr(p.n, kNever);
        arr[s] = 0;
        sc.run(arr, 0, sem);
        rows[s] = std::move(arr);
    });
    return assemble(p.n, rows);
}

DistanceMatrix fastest_matrix(const TemporalGraph& g, Semantics sem, const MetricOptions& opt) {
    const Prepared p = prepare(g, default_horizon(g, Metric::Fastest, opt));
    const Time last_departure = g.periodic() ? g.period() : kNever;
    std::vector<std::vector<Time>> rows(p.n);
    for_each_source(p.n, opt.threads, [&](int s) {
        Scanner sc(p);
        std::vector<Time> best(p.n, kNever), arr(p.n);
        for (Time t0 : p.incident[s]) {
            if (t0 > last_departure) break;
            std::fill(arr.begin(), arr.end(), kNever);
            arr[s] = sem == Semantics::Strict ? t0 - 1 : t0;
            const auto from = static_cast<std::size_t>(
                std::lower_bound(p.events.begin(), p.events.end(), t0,
                                 [](const Event& e, Time t) { return e.t < t; }) -
                p.events.begin());
            sc.run(arr, from, sem);
            for (int v = 0; v < p.n; ++v)
                if (v != s && arr[v] != kNever) best[v] = std::min(best[v], arr[v] - t0 + 1);
        }
        rows[s] = std::move(best);
    });
    return assemble(p.n, rows);
}

DistanceMatrix shortest_matrix(const TemporalGraph& g, Semantics sem, const MetricOptions& opt) {
    const Prepared p = prepare(g, default_horizon(g, Metric::Shortest, opt));
    std::vector<std::vector<Time>> rows(p.n);
    for_each_source(p.n, opt.threads, [&](int s) {
        // cur[v] = earliest arrival at v using at most `hops` edges.
        std::vector<Time> cur(p.n, kNever), next;
        std::vector<Time> hops(p.n, kNever);
        cur[s] = 0;
        auto relax = [&](int a, int b, const std::vector<Time>& ls) {
            if (cur[a] == kNever) return;
            auto it = sem == Semantics::Strict ? std::upper_bound(ls.begin(), ls.end(), cur[a])
                                               : std::lower_bound(ls.begin(), ls.end(), cur[a]);
            if (it != ls.end() && *it < next[b]) next[b] = *it;
        };
        for (Time h = 1; h < p.n; ++h) {
            next = cur;
            for (const Edge& e : p.edges) {
                relax(e.a, e.b, e.labels);
                relax(e.b, e.a, e.labels);
            }
            if (next == cur) break;
            for (int v = 0; v < p.n; ++v)
                if (v != s && hops[v] == kNever && next[v] != kNever) hops[v] = h;
            cur.swap(next);
        }
        rows[s] = std::move(hops);
    });
    return assemble(p.n, rows);
}

DistanceMatrix metric_matrix(const TemporalGraph& g, Metric m, Semantics sem,
                             const MetricOptions& opt) {
    switch (m) {
        case Metric::Foremost: return foremost_matrix(g, sem, opt);
        case Metric::Fastest: return fastest_matrix(g, sem, opt);
        case Metric::Shortest: return shortest_matrix(g, sem, opt);
    }
    throw ValidationError("unknown metric");
}

VerifyReport verify_realization(const TemporalGraph& g, const DistanceMatrix& d, Metric m,
                                Semantics sem, const MetricOptions& opt) {
    if (g.size() != d.size())
        throw ValidationError("dimension mismatch: graph has " + std::to_string(g.size()) +
                              " vertices, matrix has " + std::to_string(d.size()));
    const DistanceMatrix got = metric_matrix(g, m, sem, opt);
    VerifyReport r;
    for (Vertex u = 1; u <= d.size(); ++u)
        for (Vertex v = 1; v <= d.size(); ++v)
            if (got(u, v) != d(u, v)) r.mismatches.push_back({u, v, d(u, v), got(u, v)});
    r.equal = r.mismatches.empty();
    r.label_count = g.label_count();
    r.max_labels_per_edge = g.max_labels_per_edge();
    return r;
}

VerifyReport verify_ranged(const TemporalGraph& g, const RangeMatrix& rm, Semantics sem,
                           const MetricOptions& opt) {
    if (g.size() != rm.size())
        throw ValidationError("dimension mismatch: graph has " + std::to_string(g.size()) +
                              " vertices, range matrix has " + std::to_string(rm.size()));
    const DistanceMatrix got = foremost_matrix(g, sem, opt);
    VerifyReport r;
    for (Vertex u = 1; u <= rm.size(); ++u)
        for (Vertex v = 1; v <= rm.size(); ++v)
            if (!rm(u, v).contains(got(u, v))) r.mismatches.push_back({u, v, rm.lo(u, v), got(u, v)});
    r.equal = r.mismatches.empty();
    r.label_count = g.label_count();
    r.max_labels_per_edge = g.max_labels_per_edge();
    return r;
}

}  // namespace tgr
