#include "tgr/foremost.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "tgr/errors.hpp"

namespace tgr {

namespace {

constexpr Time kOpen = std::numeric_limits<Time>::max();

bool dir_ok(const DistanceMatrix& d, Vertex v, Vertex w, Time tau) {
    for (Vertex x = 1; x <= d.size(); ++x)
        if (d(x, v) < Dist(tau) && d(x, w) > Dist(tau)) return false;
    return true;
}

bool period_dir_ok(const DistanceMatrix& d, Vertex v, Vertex w, Time tau, Time period) {
    for (Vertex x = 1; x <= d.size(); ++x) {
        const Dist dv = d(x, v);
        if (dv.is_inf()) continue;
        // First shift of tau strictly above D[x][v].
        const Time diff = dv.value() - tau;
        const Time floor_q = diff >= 0 ? diff / period : -((-diff + period - 1) / period);
        const Time shifted = tau + (floor_q + 1) * period;
        if (d(x, w) > Dist(shifted)) return false;
    }
    return true;
}

void check_square(const DistanceMatrix& d, const PrescribedGraph& gp) {
    if (gp.size() != d.size())
        throw ValidationError("dimension mismatch: prescribed graph has " +
                              std::to_string(gp.size()) + " vertices, matrix has " +
                              std::to_string(d.size()));
}

using CompatFn = bool (*)(const DistanceMatrix&, Vertex, Vertex, Time);

// Greedy realizer with a pluggable compatibility test, naive scan.
std::optional<TemporalGraph> greedy_naive(const DistanceMatrix& d, CompatFn compat) {
    const int n = d.size();
    TemporalGraph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex w = 1; w <= n; ++w) {
            if (u == w || d(u, w).is_inf()) continue;
            const Time tau = d(u, w).value();
            bool found = false;
            for (Vertex v = 1; v <= n && !found; ++v) {
                if (v == w || !(d(u, v) < d(u, w))) continue;
                if (compat(d, v, w, tau)) {
                    g.add_label(v, w, tau);
                    found = true;
                }
            }
            if (!found) return std::nullopt;
        }
    return g;
}

// Column-major copy of d (kOpen for inf) plus, per vertex v, the rows x
// sorted by D[x][v] and the sorted column itself.
class ColumnView {
public:
    explicit ColumnView(const DistanceMatrix& d)
        : n_(d.size()), val_(cells()), order_(cells()), pos_(cells()), sorted_(cells()) {
        for (Vertex v = 1; v <= n_; ++v) {
            Time* col = &val_[base(v)];
            Vertex* ord = &order_[base(v)];
            for (Vertex x = 1; x <= n_; ++x) {
                const Dist e = d(x, v);
                col[x - 1] = e.is_inf() ? kOpen : e.value();
                ord[x - 1] = x;
            }
            std::stable_sort(ord, ord + n_, [col](Vertex a, Vertex b) { return col[a - 1] < col[b - 1]; });
            for (int i = 0; i < n_; ++i) {
                sorted_[base(v) + i] = col[ord[i] - 1];
                pos_[base(v) + ord[i] - 1] = i;
            }
        }
    }

    int size() const { return n_; }
    const Time* column(Vertex v) const { return &val_[base(v)]; }
    const Vertex* order(Vertex v) const { return &order_[base(v)]; }
    // Position of row x in order(v).
    int position(Vertex v, Vertex x) const { return pos_[base(v) + x - 1]; }
    // Number of rows x with D[x][v] <= t.
    int count_at_most(Vertex v, Time t) const {
        const Time* s = &sorted_[base(v)];
        return static_cast<int>(std::upper_bound(s, s + n_, t) - s);
    }
private:
    std::size_t cells() const { return static_cast<std::size_t>(n_) * n_; }
    std::size_t base(Vertex v) const { return static_cast<std::size_t>(v - 1) * n_; }

    int n_;
    std::vector<Time> val_;
    std::vector<Vertex> order_;
    std::vector<int> pos_;
    std::vector<Time> sorted_;
};

// Stabbing index for the intervals [D[x][a]+shift, D[x][b]-1]. They arrive
// sorted by lower end (rows in order of column a), so keeping the running
// maximum of upper ends is enough: t is stabbed iff some interval with lower
// end <= t reaches t.
class PrefixStab {
public:
    void build(const ColumnView& cv, Vertex a, Vertex b, Time shift, Time* buf) {
        cv_ = &cv;
        a_ = a;
        shift_ = shift;
        reach_ = buf;
        const Time* cb = cv.column(b);
        const Vertex* ord = cv.order(a);
        Time best = std::numeric_limits<Time>::min();
        for (int i = 0; i < cv.size(); ++i) {
            best = std::max(best, cb[ord[i] - 1]);
            reach_[i] = best;
        }
    }

    // D[x][b] > t for some x with D[x][a] <= t - shift. `hint`, if given, is
    // the position of a row known to lie in that prefix.
    bool stab(Time t, int hint = -1) const {
        if (hint >= 0 && reach_[hint] > t) return true;
        if (reach_[cv_->size() - 1] <= t) return false;
        const int k = cv_->count_at_most(a_, t - shift_);
        return k > 0 && reach_[k - 1] > t;
    }

private:
    const ColumnView* cv_ = nullptr;
    Vertex a_ = 0;
    Time shift_ = 0;
    Time* reach_ = nullptr;
};

// Same decisions as greedy_naive. Pairs sharing a target w are handled
// together; each direction's index of (v,w) is built the first time it is
// queried.
std::optional<TemporalGraph> greedy_indexed(const DistanceMatrix& d, Semantics sem) {
    const int n = d.size();
    const Time shift = sem == Semantics::Strict ? 1 : 0;
    const ColumnView view(d);
    std::vector<std::vector<Time>> labels(static_cast<std::size_t>(n) * n);
    std::vector<Time> buf(static_cast<std::size_t>(2) * n * n);
    std::vector<PrefixStab> fwd(n + 1), bwd(n + 1);
    // Bit 1: forward index built, bit 2: backward index built.
    std::vector<char> built(n + 1);
    for (Vertex w = 1; w <= n; ++w) {
        std::fill(built.begin(), built.end(), 0);
        for (Vertex u = 1; u <= n; ++u) {
            if (u == w || d(u, w).is_inf()) continue;
            const Time tau = d(u, w).value();
            bool found = false;
            for (Vertex v = 1; v <= n && !found; ++v) {
                if (v == w || !(d(u, v) < d(u, w))) continue;
                // Row x = v alone already violates: D[v][v] = 0 < tau < D[v][w].
                if (view.column(w)[v - 1] > tau) continue;
                Time* slot = &buf[static_cast<std::size_t>(2) * (v - 1) * n];
                if (!(built[v] & 1)) {
                    fwd[v].build(view, v, w, shift, slot);
                    built[v] |= 1;
                }
                // D[u][v] < tau puts row u inside the forward prefix.
                if (fwd[v].stab(tau, view.position(v, u))) continue;
                if (!(built[v] & 2)) {
                    bwd[v].build(view, w, v, shift, slot + n);
                    built[v] |= 2;
                }
                if (!bwd[v].stab(tau)) {
                    labels[static_cast<std::size_t>(std::min(v, w) - 1) * n + std::max(v, w) - 1]
                        .push_back(tau);
                    found = true;
                }
            }
            if (!found) return std::nullopt;
        }
    }
    TemporalGraph g(n);
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            for (Time t : labels[static_cast<std::size_t>(a - 1) * n + b - 1]) g.add_label(a, b, t);
    return g;
}

}  // namespace

bool edge_compat(const DistanceMatrix& d, Vertex v, Vertex w, Time tau) {
    return dir_ok(d, v, w, tau) && dir_ok(d, w, v, tau);
}

bool ns_edge_compat(const DistanceMatrix& d, Vertex v, Vertex w, Time tau) {
    for (Vertex x = 1; x <= d.size(); ++x)
        if ((d(x, v) <= Dist(tau)) != (d(x, w) <= Dist(tau))) return false;
    return true;
}

bool period_edge_compat(const DistanceMatrix& d, Vertex v, Vertex w, Time tau, Time period) {
    if (period < 1) throw ValidationError("period must be >= 1");
    return period_dir_ok(d, v, w, tau, period) && period_dir_ok(d, w, v, tau, period);
}

IntervalIndex::IntervalIndex(std::vector<Interval> intervals) {
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    *this = from_sorted(intervals);
}

IntervalIndex IntervalIndex::from_sorted(const std::vector<Interval>& intervals) {
    IntervalIndex idx;
    auto& m = idx.merged_;
    for (const Interval& i : intervals) {
        if (i.lo > i.hi) continue;
        if (!m.empty() && (m.back().hi == kOpen || i.lo <= m.back().hi + 1))
            m.back().hi = std::max(m.back().hi, i.hi);
        else
            m.push_back(i);
    }
    return idx;
}

bool IntervalIndex::stab(Time t) const {
    auto it = std::upper_bound(merged_.begin(), merged_.end(), t,
                               [](Time x, const Interval& i) { return x < i.lo; });
    if (it == merged_.begin()) return false;
    return std::prev(it)->hi >= t;
}

IntervalIndex build_interval_index(const DistanceMatrix& d, Vertex v, Vertex w, CompatDirection dir,
                                   Semantics sem) {
    if (dir == CompatDirection::Backward) std::swap(v, w);
    const Time shift = sem == Semantics::Strict ? 1 : 0;
    std::vector<Interval> out;
    out.reserve(d.size());
    for (Vertex x = 1; x <= d.size(); ++x) {
        const Dist a = d(x, v), b = d(x, w);
        if (a.is_inf()) continue;
        const Time lo = a.value() + shift;
        const Time hi = b.is_inf() ? kOpen : b.value() - 1;
        if (lo <= hi) out.push_back({lo, hi});
    }
    return IntervalIndex(std::move(out));
}

std::optional<TemporalGraph> realize_foremost(const DistanceMatrix& d, const ForemostOptions& opt) {
    if (opt.accel == Acceleration::Naive) return greedy_naive(d, edge_compat);
    return greedy_indexed(d, Semantics::Strict);
}

std::optional<TemporalGraph> realize_ns_foremost(const DistanceMatrix& d,
                                                 const ForemostOptions& opt) {
    if (opt.accel == Acceleration::Naive) return greedy_naive(d, ns_edge_compat);
    return greedy_indexed(d, Semantics::NonStrict);
}

std::optional<TemporalGraph> realize_periodic_foremost(const DistanceMatrix& d, Time period) {
    if (period < 1) throw ValidationError("period must be >= 1, got " + std::to_string(period));
    const int n = d.size();
    TemporalGraph g(n, period);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex w = 1; w <= n; ++w) {
            if (u == w || d(u, w).is_inf()) continue;
            const Time tau = d(u, w).value();
            bool found = false;
            for (Vertex v = 1; v <= n && !found; ++v) {
                if (v == w || !(d(u, v) < d(u, w))) continue;
                if (period_edge_compat(d, v, w, tau, period)) {
                    g.add_label(v, w, tau);
                    found = true;
                }
            }
            if (!found) return std::nullopt;
        }
    return g;
}

std::optional<TemporalGraph> realize_prescribed_foremost(const DistanceMatrix& d,
                                                         const PrescribedGraph& gp) {
    check_square(d, gp);
    const int n = d.size();
    TemporalGraph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex w = 1; w <= n; ++w) {
            if (u == w || d(u, w).is_inf()) continue;
            const Time tau = d(u, w).value();
            bool found = false;
            for (Vertex v : gp.neighbors(w)) {
                if (!(d(u, v) < d(u, w))) continue;
                if (edge_compat(d, v, w, tau)) {
                    g.add_label(v, w, tau);
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
    return g;
}

std::optional<TemporalGraph> realize_prescribed_ns_foremost(const DistanceMatrix& d,
                                                            const PrescribedGraph& gp) {
    check_square(d, gp);
    const int n = d.size();
    TemporalGraph g(n);
    std::vector<char> mark(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    auto marked = [&](Vertex u, Vertex w) -> char& {
        return mark[static_cast<std::size_t>(u) * (n + 1) + w];
    };
    for (Time di : d.distinct_finite_values()) {
        std::vector<OrderedPair> group;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex w = 1; w <= n; ++w)
                if (u != w && d(u, w) == Dist(di)) group.push_back({u, w});
        for (auto [u, w] : group) {
            if (marked(u, w)) continue;
            bool found = false;
            for (Vertex v : gp.neighbors(w))
                if (d(u, v) < Dist(di) && ns_edge_compat(d, v, w, di)) {
                    marked(u, w) = 1;
                    g.add_label(v, w, di);
                    found = true;
                    break;
                }
            if (!found) continue;
            std::deque<Vertex> queue{w};
            while (!queue.empty()) {
                const Vertex v = queue.front();
                queue.pop_front();
                for (Vertex w2 : gp.neighbors(v)) {
                    if (d(u, w2) != Dist(di) || marked(u, w2)) continue;
                    if (ns_edge_compat(d, v, w2, di)) {
                        marked(u, w2) = 1;
                        g.add_label(v, w2, di);
                        queue.push_back(w2);
                    }
                }
            }
        }
        for (auto [u, w] : group)
            if (!marked(u, w)) return std::nullopt;
    }
    return g;
}

std::optional<TemporalGraph> realize_periodic_shortest(const DistanceMatrix& d, Time period) {
    if (period < 1) throw ValidationError("period must be >= 1, got " + std::to_string(period));
    const int n = d.size();
    StaticGraph gd(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (d(u, v) == Dist(1) && d(v, u) == Dist(1)) gd.add_edge(u, v);
    for (Vertex s = 1; s <= n; ++s) {
        std::vector<Dist> hop(n + 1, kInfinity);
        hop[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : gd.neighbors(x))
                if (hop[y].is_inf()) {
                    hop[y] = hop[x] + Dist(1);
                    queue.push_back(y);
                }
        }
        for (Vertex v = 1; v <= n; ++v)
            if (hop[v] != d(s, v)) return std::nullopt;
    }
    TemporalGraph g(n, period);
    for (const EdgeKey& e : gd.edges()) g.add_label(e.u, e.v, 1);
    return g;
}

}  // namespace tgr
