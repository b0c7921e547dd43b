#include "tgr/ranged.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tgr/errors.hpp"
#include "tgr/foremost.hpp"

namespace tgr {

CompatSplit CompatSplit::from_masks(int n, const std::vector<OrderedPair>& undet,
                                    std::uint64_t s_mask, std::uint64_t t_mask) {
    if (s_mask & t_mask) throw ValidationError("S and T must be disjoint");
    CompatSplit c(n);
    for (std::size_t i = 0; i < undet.size(); ++i) {
        if (s_mask >> i & 1) c.add_s(undet[i].u, undet[i].v);
        if (t_mask >> i & 1) c.add_t(undet[i].u, undet[i].v);
    }
    return c;
}

std::vector<Time> candidate_times(const RangeMatrix& d) {
    const Time k = static_cast<Time>(d.undetermined().size());
    std::vector<Time> out;
    for (Vertex u = 1; u <= d.size(); ++u)
        for (Vertex w = 1; w <= d.size(); ++w) {
            if (u == w || d.lo(u, w).is_inf()) continue;
            for (Time j = 0; j <= k; ++j) out.push_back(d.lo(u, w).value() + j);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool range_dir(const RangeMatrix& d, Vertex v, Vertex w, Time tau, const CompatSplit& split) {
    for (Vertex x = 1; x <= d.size(); ++x) {
        const bool before = d.hi(x, v) < Dist(tau) || split.in_s(x, v);
        if (!before) continue;
        if (!(d.hi(x, w) <= Dist(tau) || split.in_s_or_t(x, w))) return false;
    }
    return true;
}

void check_split(const RangeMatrix& d, const CompatSplit& split) {
    if (split.size() != d.size())
        throw ValidationError("split dimension " + std::to_string(split.size()) +
                              " does not match matrix dimension " + std::to_string(d.size()));
}

class Dp {
public:
    Dp(const RangeMatrix& d, const RangedOptions& opt)
        : d_(d), n_(d.size()), undet_(d.undetermined()), k_(static_cast<int>(undet_.size())),
          times_(candidate_times(d)), opt_(opt) {
        for (Time tau : times_) {
            Layer l;
            l.tau = tau;
            for (Vertex u = 1; u <= n_; ++u)
                for (Vertex w = 1; w <= n_; ++w)
                    if (u != w && d.lo(u, w) == Dist(tau) && d.hi(u, w) == Dist(tau))
                        l.fixed.push_back({u, w});
            for (int i = 0; i < k_; ++i) {
                const Range& r = d(undet_[i].u, undet_[i].v);
                if (r.contains(Dist(tau))) l.eligible |= std::uint64_t{1} << i;
                if (r.hi <= Dist(tau)) l.expired |= std::uint64_t{1} << i;
            }
            layers_.push_back(std::move(l));
        }
        for (int i = 0; i < k_; ++i)
            if (d(undet_[i].u, undet_[i].v).hi.is_finite()) finite_hi_ |= std::uint64_t{1} << i;
    }

    std::optional<RangedRealization> run() {
        const std::size_t states = std::size_t{1} << k_;
        std::vector<std::uint8_t> prev(states, 0), cur(states, 0);
        prev[0] = 1;
        if (opt_.witness) history_.push_back(pack(prev));
        for (const Layer& l : layers_) {
            std::fill(cur.begin(), cur.end(), 0);
            for (std::uint64_t s = 0; s < states; ++s) {
                if (!prev[s]) continue;
                const std::uint64_t free = l.eligible & ~s;
                // Every submask of `free`, including the empty one.
                std::uint64_t t = free;
                while (true) {
                    const std::uint64_t x = s | t;
                    if (!cur[x] && (l.expired & ~x) == 0 && exists(l, s, t)) cur[x] = 1;
                    if (t == 0) break;
                    t = (t - 1) & free;
                }
            }
            prev.swap(cur);
            if (opt_.witness) history_.push_back(pack(prev));
        }
        std::optional<std::uint64_t> final_set;
        for (std::uint64_t x = 0; x < states; ++x)
            if (prev[x] && (finite_hi_ & ~x) == 0) {
                final_set = x;
                break;
            }
        if (!final_set) return std::nullopt;
        if (!opt_.witness) return RangedRealization{};
        return reconstruct(*final_set);
    }

private:
    struct Layer {
        Time tau = 0;
        std::vector<OrderedPair> fixed;
        std::uint64_t eligible = 0;
        std::uint64_t expired = 0;
    };

    static std::vector<std::uint64_t> pack(const std::vector<std::uint8_t>& bits) {
        std::vector<std::uint64_t> out((bits.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) out[i / 64] |= std::uint64_t{1} << (i % 64);
        return out;
    }

    static bool test(const std::vector<std::uint64_t>& packed, std::uint64_t i) {
        return packed[i / 64] >> (i % 64) & 1;
    }

    bool exists(const Layer& l, std::uint64_t s, std::uint64_t t) {
        const CompatSplit split = CompatSplit::from_masks(n_, undet_, s, t);
        cache_.assign(static_cast<std::size_t>(n_) * n_, -1);
        auto compat = [&](Vertex v, Vertex w) {
            auto& c = cache_[static_cast<std::size_t>(v - 1) * n_ + (w - 1)];
            if (c < 0) c = range_edge_compat(d_, v, w, l.tau, split) ? 1 : 0;
            return c == 1;
        };
        auto served = [&](Vertex u, Vertex w) {
            for (Vertex v = 1; v <= n_; ++v) {
                if (v == w) continue;
                if (!(d_.hi(u, v) < Dist(l.tau) || split.in_s(u, v))) continue;
                if (compat(v, w)) return true;
            }
            return false;
        };
        for (const OrderedPair& p : l.fixed)
            if (!served(p.u, p.v)) return false;
        for (int i = 0; i < k_; ++i)
            if ((t >> i & 1) && !served(undet_[i].u, undet_[i].v)) return false;
        return true;
    }

    RangedRealization reconstruct(std::uint64_t x) {
        DistanceMatrix dprime(n_);
        for (Vertex u = 1; u <= n_; ++u)
            for (Vertex w = 1; w <= n_; ++w)
                if (u != w && d_(u, w).determined()) dprime.set(u, w, d_.lo(u, w));
        for (std::size_t i = layers_.size(); i-- > 0;) {
            const Layer& l = layers_[i];
            const auto& before = history_[i];
            bool found = false;
            // Submasks of x in decreasing order: the largest S wins, so
            // entries are fixed at the earliest feasible time.
            std::uint64_t s = x;
            while (true) {
                const std::uint64_t t = x & ~s;
                if ((t & ~l.eligible) == 0 && test(before, s) && exists(l, s, t)) {
                    for (int j = 0; j < k_; ++j)
                        if (t >> j & 1) dprime.set(undet_[j].u, undet_[j].v, Dist(l.tau));
                    x = s;
                    found = true;
                    break;
                }
                if (s == 0) break;
                s = (s - 1) & x;
            }
            if (!found) throw std::logic_error("ranged DP: inconsistent layer history");
        }
        auto g = realize_foremost(dprime);
        if (!g) throw std::logic_error("ranged DP: determined matrix is not realizable");
        return RangedRealization{std::move(*g), std::move(dprime)};
    }

    const RangeMatrix& d_;
    int n_;
    std::vector<OrderedPair> undet_;
    int k_;
    std::vector<Time> times_;
    RangedOptions opt_;
    std::vector<Layer> layers_;
    std::uint64_t finite_hi_ = 0;
    std::vector<std::vector<std::uint64_t>> history_;
    std::vector<signed char> cache_;
};

}  // namespace

bool range_edge_compat(const RangeMatrix& d, Vertex v, Vertex w, Time tau,
                       const CompatSplit& split) {
    check_split(d, split);
    return range_dir(d, v, w, tau, split) && range_dir(d, w, v, tau, split);
}

bool ns_range_edge_compat(const RangeMatrix& d, Vertex v, Vertex w, Time tau,
                          const CompatSplit& split) {
    check_split(d, split);
    for (Vertex x = 1; x <= d.size(); ++x) {
        const bool a = d.hi(x, v) <= Dist(tau) || split.in_s_or_t(x, v);
        const bool b = d.hi(x, w) <= Dist(tau) || split.in_s_or_t(x, w);
        if (a != b) return false;
    }
    return true;
}

bool prescribed_range_edge_compat(const RangeMatrix& d, Vertex v, Vertex w, Time tau,
                                  const CompatSplit& split, const StaticGraph& gp) {
    return gp.has_edge(v, w) && range_edge_compat(d, v, w, tau, split);
}

std::optional<RangedRealization> realize_ranged_foremost(const RangeMatrix& d,
                                                         const RangedOptions& opt) {
    const auto k = d.undetermined().size();
    if (static_cast<int>(k) > opt.max_undetermined)
        throw GuardExceeded("ranged DP refuses k=" + std::to_string(k) +
                            " undetermined entries (limit " +
                            std::to_string(opt.max_undetermined) + ")");
    if (k > 30) throw GuardExceeded("ranged DP supports at most 30 undetermined entries");
    return Dp(d, opt).run();
}

}  // namespace tgr
