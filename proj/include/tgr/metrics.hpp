#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgr/dist.hpp"
#include "tgr/temporal_graph.hpp"

namespace tgr {

enum class Metric { Foremost, Fastest, Shortest };
enum class Semantics { Strict, NonStrict };

std::string to_string(Metric m);
std::string to_string(Semantics s);

struct MetricOptions {
    // Unrolling horizon for periodic graphs. Defaults: n*period for foremost
    // and shortest, n*period + period for fastest.
    std::optional<Time> horizon;
    // Sources are split across this many threads; results do not depend on it.
    unsigned threads = 1;
};

DistanceMatrix foremost_matrix(const TemporalGraph& g, Semantics sem = Semantics::Strict,
                               const MetricOptions& opt = {});
DistanceMatrix fastest_matrix(const TemporalGraph& g, Semantics sem = Semantics::Strict,
                              const MetricOptions& opt = {});
DistanceMatrix shortest_matrix(const TemporalGraph& g, Semantics sem = Semantics::Strict,
                               const MetricOptions& opt = {});
DistanceMatrix metric_matrix(const TemporalGraph& g, Metric m, Semantics sem = Semantics::Strict,
                             const MetricOptions& opt = {});

struct Mismatch {
    Vertex u;
    Vertex v;
    Dist expected;
    Dist got;
    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
    bool equal = false;
    std::vector<Mismatch> mismatches;
    std::size_t label_count = 0;
    std::size_t max_labels_per_edge = 0;
};

// Compares metric_matrix(g) against d entrywise.
VerifyReport verify_realization(const TemporalGraph& g, const DistanceMatrix& d, Metric m,
                                Semantics sem = Semantics::Strict, const MetricOptions& opt = {});

// Foremost matrix of g must fall inside every range. A mismatch reports the
// offending foremost value as `got` and the range's lower end as `expected`.
VerifyReport verify_ranged(const TemporalGraph& g, const RangeMatrix& r,
                           Semantics sem = Semantics::Strict, const MetricOptions& opt = {});

struct OracleGuard {
    int max_vertices = 8;
    std::size_t max_labels = 40;
};

// Enumerates every temporal path explicitly. Slow; meant for cross-checking.
// Throws GuardExceeded when the graph is larger than the guard allows.
DistanceMatrix oracle_metric(const TemporalGraph& g, Metric m, Semantics sem = Semantics::Strict,
                             const OracleGuard& guard = {}, const MetricOptions& opt = {});

}  // namespace tgr
