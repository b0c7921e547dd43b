#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tgr/dist.hpp"
#include "tgr/temporal_graph.hpp"

namespace tgr {

// Disjoint subsets S and T of the undetermined entries with O(1) membership.
class CompatSplit {
public:
    CompatSplit() = default;
    explicit CompatSplit(int n) : n_(n), state_(static_cast<std::size_t>(n) * n, 0) {}

    // Bit i of s_mask / t_mask selects undet[i].
    static CompatSplit from_masks(int n, const std::vector<OrderedPair>& undet,
                                  std::uint64_t s_mask, std::uint64_t t_mask);

    int size() const { return n_; }
    bool in_s(Vertex u, Vertex v) const { return at(u, v) == kS; }
    bool in_t(Vertex u, Vertex v) const { return at(u, v) == kT; }
    bool in_s_or_t(Vertex u, Vertex v) const { return at(u, v) != 0; }
    void add_s(Vertex u, Vertex v) { ref(u, v) = kS; }
    void add_t(Vertex u, Vertex v) { ref(u, v) = kT; }

private:
    static constexpr std::uint8_t kS = 1;
    static constexpr std::uint8_t kT = 2;
    std::uint8_t at(Vertex u, Vertex v) const {
        return state_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    }
    std::uint8_t& ref(Vertex u, Vertex v) {
        return state_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    }
    int n_ = 0;
    std::vector<std::uint8_t> state_;
};

// Sorted distinct times lo(u,w) + j with u != w, lo finite, 0 <= j <= k.
std::vector<Time> candidate_times(const RangeMatrix& d);

// Both directions of: for all x, (hi[x][v] < tau or (x,v) in S) =>
// (hi[x][w] <= tau or (x,w) in S u T).
bool range_edge_compat(const RangeMatrix& d, Vertex v, Vertex w, Time tau,
                       const CompatSplit& split);

// for all x, (hi[x][v] <= tau or (x,v) in S u T) <=> (hi[x][w] <= tau or (x,w) in S u T).
bool ns_range_edge_compat(const RangeMatrix& d, Vertex v, Vertex w, Time tau,
                          const CompatSplit& split);

// range_edge_compat restricted to edges of gp.
bool prescribed_range_edge_compat(const RangeMatrix& d, Vertex v, Vertex w, Time tau,
                                  const CompatSplit& split, const StaticGraph& gp);

struct RangedOptions {
    int max_undetermined = 20;
    // Keep one bitset per layer so a witness can be rebuilt.
    bool witness = true;
};

struct RangedRealization {
    TemporalGraph graph;           // empty when options.witness is false
    DistanceMatrix determined;     // chosen value of every entry; empty without witness
};

// Subset DP over the undetermined entries. Throws GuardExceeded when k is
// above options.max_undetermined.
std::optional<RangedRealization> realize_ranged_foremost(const RangeMatrix& d,
                                                         const RangedOptions& opt = {});

}  // namespace tgr
