#include "tgr/temporal_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tgr/errors.hpp"

namespace tgr {

namespace {

void check_pair(int n, Vertex u, Vertex v) {
    if (u < 1 || u > n || v < 1 || v > n)
        throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} outside vertex range 1.." + std::to_string(n));
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
}

}  // namespace

StaticGraph::StaticGraph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw ValidationError("negative vertex count");
}

void StaticGraph::add_edge(Vertex u, Vertex v) {
    check_pair(n_, u, v);
    auto& nu = adj_[u - 1];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[v - 1];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool StaticGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    const auto& nu = adj_[u - 1];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<EdgeKey> StaticGraph::edges() const {
    std::vector<EdgeKey> out;
    out.reserve(edge_count_);
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v : adj_[u - 1])
            if (u < v) out.push_back({u, v});
    return out;
}

StaticGraph StaticGraph::complete(int n) {
    StaticGraph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

TemporalGraph::TemporalGraph(int n, Time period) : n_(n), period_(period) {
    if (n < 0) throw ValidationError("negative vertex count");
    if (period < 0) throw ValidationError("negative period");
}

Time TemporalGraph::canonical(Time t) const {
    if (!periodic()) return t;
    Time r = (t - 1) % period_;
    if (r < 0) r += period_;
    return r + 1;
}

void TemporalGraph::add_label(Vertex u, Vertex v, Time t) {
    check_pair(n_, u, v);
    if (t < 1) throw ValidationError("label " + std::to_string(t) + " is not positive");
    t = canonical(t);
    auto& ls = labels_[EdgeKey::of(u, v)];
    auto it = std::lower_bound(ls.begin(), ls.end(), t);
    if (it == ls.end() || *it != t) ls.insert(it, t);
}

void TemporalGraph::add_labels(Vertex u, Vertex v, std::initializer_list<Time> ts) {
    for (Time t : ts) add_label(u, v, t);
}

std::span<const Time> TemporalGraph::labels(Vertex u, Vertex v) const {
    auto it = labels_.find(EdgeKey::of(u, v));
    if (it == labels_.end()) return {};
    return it->second;
}

bool TemporalGraph::has_edge(Vertex u, Vertex v) const { return !labels(u, v).empty(); }

bool TemporalGraph::appears_at(Vertex u, Vertex v, Time t) const {
    if (t < 1) return false;
    auto ls = labels(u, v);
    return std::binary_search(ls.begin(), ls.end(), canonical(t));
}

std::size_t TemporalGraph::label_count() const {
    std::size_t c = 0;
    for (const auto& [e, ls] : labels_) c += ls.size();
    return c;
}

std::size_t TemporalGraph::max_labels_per_edge() const {
    std::size_t m = 0;
    for (const auto& [e, ls] : labels_) m = std::max(m, ls.size());
    return m;
}

StaticGraph TemporalGraph::underlying_graph() const {
    StaticGraph g(n_);
    for (const auto& [e, ls] : labels_)
        if (!ls.empty()) g.add_edge(e.u, e.v);
    return g;
}

TemporalGraph TemporalGraph::unrolled(Time horizon) const {
    if (!periodic()) return *this;
    TemporalGraph out(n_);
    for (const auto& [e, ls] : labels_) {
        auto& dst = out.labels_[e];
        for (Time base = 0; base < horizon; base += period_)
            for (Time t : ls)
                if (base + t <= horizon) dst.push_back(base + t);
        std::sort(dst.begin(), dst.end());
        if (dst.empty()) out.labels_.erase(e);
    }
    return out;
}

void TemporalGraph::validate() const {
    for (const auto& [e, ls] : labels_) {
        check_pair(n_, e.u, e.v);
        if (e.u > e.v) throw ValidationError("edge key not normalized");
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (ls[i] < 1) throw ValidationError("non-positive label on edge");
            if (periodic() && ls[i] > period_)
                throw ValidationError("label " + std::to_string(ls[i]) + " exceeds period " +
                                      std::to_string(period_));
            if (i > 0 && ls[i] <= ls[i - 1])
                throw ValidationError("labels not strictly increasing on edge {" +
                                      std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        }
    }
}

bool TemporalPath::valid_in(const TemporalGraph& g) const {
    if (times.empty() || vertices.size() != times.size() + 1) return false;
    std::set<Vertex> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) return false;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (i > 0 && (strict ? times[i] <= times[i - 1] : times[i] < times[i - 1])) return false;
        if (!g.appears_at(vertices[i], vertices[i + 1], times[i])) return false;
    }
    return true;
}

}  // namespace tgr
