#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tgr/dist.hpp"

namespace tgr {

// Unordered vertex pair, stored with u < v.
struct EdgeKey {
    Vertex u;
    Vertex v;

    static EdgeKey of(Vertex a, Vertex b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

// Simple undirected static graph on vertices 1..n. Used for prescribed graphs
// and underlying graphs.
class StaticGraph {
public:
    StaticGraph() = default;
    explicit StaticGraph(int n);

    int size() const { return n_; }
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    // Sorted neighbourhood.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v - 1]; }
    // Lexicographically sorted edge list.
    std::vector<EdgeKey> edges() const;
    std::size_t edge_count() const { return edge_count_; }

    static StaticGraph complete(int n);

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

using PrescribedGraph = StaticGraph;

// Temporal graph: every unordered pair carries a finite, strictly increasing
// set of positive labels. When a period is set, stored labels are the
// canonical residues in [1, period] and label t stands for {t + i*period}.
class TemporalGraph {
public:
    using LabelMap = std::map<EdgeKey, std::vector<Time>>;

    TemporalGraph() = default;
    explicit TemporalGraph(int n, Time period = 0);

    int size() const { return n_; }
    Time period() const { return period_; }
    bool periodic() const { return period_ > 0; }

    // Residue class representative in [1, period]; identity when aperiodic.
    Time canonical(Time t) const;

    // Adds t (canonicalized when periodic). Adding an existing label is a no-op.
    void add_label(Vertex u, Vertex v, Time t);
    void add_labels(Vertex u, Vertex v, std::initializer_list<Time> ts);

    std::span<const Time> labels(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    // True when some occurrence of edge {u,v} is at time t (periodic aware).
    bool appears_at(Vertex u, Vertex v, Time t) const;

    // Edges carrying at least one label, in lexicographic order.
    const LabelMap& edges() const { return labels_; }

    std::size_t label_count() const;
    std::size_t max_labels_per_edge() const;
    StaticGraph underlying_graph() const;

    // Aperiodic copy holding every occurrence up to `horizon`.
    TemporalGraph unrolled(Time horizon) const;

    // Throws ValidationError if a stored label violates the invariants.
    void validate() const;

    friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

private:
    int n_ = 0;
    Time period_ = 0;
    LabelMap labels_;
};

// A temporal path given by its vertex and label sequences.
struct TemporalPath {
    std::vector<Vertex> vertices;  // v0..vk
    std::vector<Time> times;       // tau1..tauk
    bool strict = true;

    std::size_t length() const { return times.size(); }
    Time departure() const { return times.front(); }
    Time arrival() const { return times.back(); }
    // Number of time steps spanned: tau_k - tau_1 + 1.
    Time duration() const { return times.back() - times.front() + 1; }

    // Label order, distinct vertices, and every hop present in g.
    bool valid_in(const TemporalGraph& g) const;
};

}  // namespace tgr
