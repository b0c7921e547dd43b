#pragma once

#include <optional>
#include <vector>

#include "tgr/dist.hpp"
#include "tgr/metrics.hpp"
#include "tgr/temporal_graph.hpp"

namespace tgr {

// Adding (v,w) at time tau creates no arrival earlier than D allows:
// for all x, D[x][v] < tau => D[x][w] <= tau, and symmetrically.
bool edge_compat(const DistanceMatrix& d, Vertex v, Vertex w, Time tau);

// Non-strict form: for all x, D[x][v] <= tau <=> D[x][w] <= tau.
bool ns_edge_compat(const DistanceMatrix& d, Vertex v, Vertex w, Time tau);

// edge_compat at every positive shift tau + i*period.
bool period_edge_compat(const DistanceMatrix& d, Vertex v, Vertex w, Time tau, Time period);

// Closed interval [lo, hi].
struct Interval {
    Time lo;
    Time hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Static set of intervals answering "does any interval contain t". Built by
// sorting and merging overlaps, so a query is one binary search.
class IntervalIndex {
public:
    IntervalIndex() = default;
    explicit IntervalIndex(std::vector<Interval> intervals);

    // Intervals already sorted by lower end; only overlaps are merged.
    static IntervalIndex from_sorted(const std::vector<Interval>& intervals);

    bool stab(Time t) const;
    bool empty() const { return merged_.empty(); }
    const std::vector<Interval>& merged() const { return merged_; }

private:
    std::vector<Interval> merged_;
};

enum class CompatDirection {
    Forward,   // intervals [D[x][v]+1, D[x][w]-1]
    Backward,  // intervals [D[x][w]+1, D[x][v]-1]
};

// Violation intervals for the temporal edge (v,w). Under strict semantics,
// edge_compat(d,v,w,t) holds iff neither direction's index stabs t. Under
// non-strict semantics the intervals become [D[x][v], D[x][w]-1] and
// [D[x][w], D[x][v]-1] and mirror ns_edge_compat.
IntervalIndex build_interval_index(const DistanceMatrix& d, Vertex v, Vertex w,
                                   CompatDirection dir, Semantics sem = Semantics::Strict);

inline bool stab(const IntervalIndex& idx, Time t) { return idx.stab(t); }

enum class Acceleration { Indexed, Naive };

struct ForemostOptions {
    Acceleration accel = Acceleration::Indexed;
};

std::optional<TemporalGraph> realize_foremost(const DistanceMatrix& d,
                                              const ForemostOptions& opt = {});
std::optional<TemporalGraph> realize_ns_foremost(const DistanceMatrix& d,
                                                 const ForemostOptions& opt = {});
std::optional<TemporalGraph> realize_periodic_foremost(const DistanceMatrix& d, Time period);
std::optional<TemporalGraph> realize_prescribed_foremost(const DistanceMatrix& d,
                                                         const PrescribedGraph& gp);
std::optional<TemporalGraph> realize_prescribed_ns_foremost(const DistanceMatrix& d,
                                                            const PrescribedGraph& gp);

// YES iff d is the hop-distance matrix of the graph formed by its symmetric
// 1-entries; the realization labels every such edge with 1.
std::optional<TemporalGraph> realize_periodic_shortest(const DistanceMatrix& d, Time period);

}  // namespace tgr
