#include "tgr/oracle.hpp"

#include <algorithm>
#include <limits>

#include "tgr/errors.hpp"

namespace tgr {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "YES";
        case Verdict::No: return "NO";
        case Verdict::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

namespace {

constexpr Time kUnreached = std::numeric_limits<Time>::max();
using Mask = std::uint64_t;

class LabelSearch {
public:
    LabelSearch(const DistanceMatrix& d, Semantics sem, bool single, const SearchBudget& budget)
        : d_(d), n_(d.size()), strict_(sem == Semantics::Strict), single_(single),
          budget_(budget), universe_(d.distinct_finite_values()),
          start_(std::chrono::steady_clock::now()) {
        for (Vertex a = 1; a <= n_; ++a)
            for (Vertex b = a + 1; b <= n_; ++b) edges_.push_back({a, b});
        for (const auto& [a, b] : edges_) {
            Mask allowed = 0;
            for (std::size_t j = 0; j < universe_.size(); ++j)
                if (!budget.prune_compat || compatible(a, b, universe_[j]))
                    allowed |= Mask{1} << j;
            allowed_.push_back(allowed);
        }
        chosen_.assign(edges_.size(), 0);
        arr_.assign(static_cast<std::size_t>(n_) * n_, kUnreached);
    }

    OracleResult run() {
        OracleResult r;
        if (n_ > budget_.max_vertices || universe_.size() > budget_.max_universe ||
            universe_.size() > 63) {
            r.verdict = Verdict::BudgetExceeded;
            return r;
        }
        const Outcome o = dfs(0);
        r.nodes = nodes_;
        r.verdict = o == Outcome::Found ? Verdict::Yes
                    : o == Outcome::Abort ? Verdict::BudgetExceeded
                                          : Verdict::No;
        if (o == Outcome::Found) {
            TemporalGraph g(n_);
            for (std::size_t e = 0; e < edges_.size(); ++e)
                for (std::size_t j = 0; j < universe_.size(); ++j)
                    if (chosen_[e] >> j & 1) g.add_label(edges_[e].first, edges_[e].second, universe_[j]);
            r.certificate = std::move(g);
        }
        return r;
    }

private:
    enum class Outcome { Found, Exhausted, Abort };

    bool compatible(Vertex v, Vertex w, Time tau) const {
        for (Vertex x = 1; x <= n_; ++x) {
            const Dist dv = d_(x, v), dw = d_(x, w);
            if (strict_) {
                if (dv < Dist(tau) && dw > Dist(tau)) return false;
                if (dw < Dist(tau) && dv > Dist(tau)) return false;
            } else if ((dv <= Dist(tau)) != (dw <= Dist(tau))) {
                return false;
            }
        }
        return true;
    }

    // Earliest arrivals when edge e carries labels[e] (bit j = universe_[j]).
    void arrivals(const std::vector<Mask>& labels) {
        std::fill(arr_.begin(), arr_.end(), kUnreached);
        for (int s = 0; s < n_; ++s) {
            Time* a = &arr_[static_cast<std::size_t>(s) * n_];
            a[s] = 0;
            for (std::size_t j = 0; j < universe_.size(); ++j) {
                const Time t = universe_[j];
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (std::size_t e = 0; e < edges_.size(); ++e) {
                        if (!(labels[e] >> j & 1)) continue;
                        const int x = edges_[e].first - 1, y = edges_[e].second - 1;
                        const bool xy = strict_ ? a[x] < t : a[x] <= t;
                        const bool yx = strict_ ? a[y] < t : a[y] <= t;
                        if (xy && a[y] > t) {
                            a[y] = t;
                            changed = !strict_;
                        } else if (yx && a[x] > t) {
                            a[x] = t;
                            changed = !strict_;
                        }
                    }
                }
            }
        }
    }

    Dist arrival(int u, int v) const {
        const Time t = arr_[static_cast<std::size_t>(u) * n_ + v];
        return t == kUnreached ? kInfinity : Dist(t);
    }

    bool any_earlier() const {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (arrival(u, v) < d_(u + 1, v + 1)) return true;
        return false;
    }
    bool any_later() const {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (arrival(u, v) > d_(u + 1, v + 1)) return true;
        return false;
    }

    bool over_budget() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) return true;
        if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_cap)
            return true;
        return false;
    }

    Outcome dfs(std::size_t e) {
        if (over_budget()) return Outcome::Abort;
        // Labels only lower arrivals: the decided prefix alone is an upper
        // bound, the prefix plus every allowed label a lower bound.
        scratch_ = chosen_;
        for (std::size_t f = e; f < edges_.size(); ++f) scratch_[f] = 0;
        arrivals(scratch_);
        if (any_earlier()) return Outcome::Exhausted;
        for (std::size_t f = e; f < edges_.size(); ++f) scratch_[f] = allowed_[f];
        arrivals(scratch_);
        if (any_later()) return Outcome::Exhausted;
        if (e == edges_.size()) return Outcome::Found;

        const Mask allowed = allowed_[e];
        if (single_) {
            for (int j = -1; j < static_cast<int>(universe_.size()); ++j) {
                if (j >= 0 && !(allowed >> j & 1)) continue;
                chosen_[e] = j < 0 ? 0 : Mask{1} << j;
                const Outcome o = dfs(e + 1);
                if (o != Outcome::Exhausted) return o;
            }
        } else {
            Mask s = 0;
            while (true) {
                chosen_[e] = s;
                const Outcome o = dfs(e + 1);
                if (o != Outcome::Exhausted) return o;
                if (s == allowed) break;
                s = (s - allowed) & allowed;
            }
        }
        chosen_[e] = 0;
        return Outcome::Exhausted;
    }

    const DistanceMatrix& d_;
    int n_;
    bool strict_;
    bool single_;
    SearchBudget budget_;
    std::vector<Time> universe_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<Mask> allowed_;
    std::vector<Mask> chosen_;
    std::vector<Mask> scratch_;
    std::vector<Time> arr_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

OracleResult oracle_foremost_realizable(const DistanceMatrix& d, Semantics sem,
                                        const SearchBudget& budget) {
    return LabelSearch(d, sem, false, budget).run();
}

OracleResult oracle_single_label_foremost(const DistanceMatrix& d, const SearchBudget& budget) {
    return LabelSearch(d, Semantics::Strict, true, budget).run();
}

RangedOracleResult oracle_ranged(const RangeMatrix& d, const SearchBudget& budget) {
    RangedOracleResult r;
    const auto undet = d.undetermined();
    Time max_lo = 0;
    for (Vertex u = 1; u <= d.size(); ++u)
        for (Vertex v = 1; v <= d.size(); ++v)
            if (u != v && d.lo(u, v).is_finite()) max_lo = std::max(max_lo, d.lo(u, v).value());
    const Time cap = max_lo + static_cast<Time>(undet.size());

    std::vector<std::vector<Dist>> choices;
    std::uint64_t total = 1;
    for (const auto& p : undet) {
        const Range& rg = d(p.u, p.v);
        std::vector<Dist> vals;
        const Time top = rg.hi.is_inf() ? cap : rg.hi.value();
        for (Time t = rg.lo.value(); t <= top; ++t) vals.push_back(Dist(t));
        if (rg.hi.is_inf()) vals.push_back(kInfinity);
        total = vals.empty() ? 0 : total * vals.size();
        if (total > budget.max_determinations) {
            r.verdict = Verdict::BudgetExceeded;
            return r;
        }
        choices.push_back(std::move(vals));
    }

    DistanceMatrix base(d.size());
    for (Vertex u = 1; u <= d.size(); ++u)
        for (Vertex v = 1; v <= d.size(); ++v)
            if (u != v && d(u, v).determined()) base.set(u, v, d.lo(u, v));

    bool exceeded = false;
    if (total == 0) return r;
    std::vector<std::size_t> pick(undet.size(), 0);
    while (true) {
        DistanceMatrix cur = base;
        for (std::size_t i = 0; i < undet.size(); ++i)
            cur.set(undet[i].u, undet[i].v, choices[i][pick[i]]);
        ++r.determinations;
        OracleResult o = oracle_foremost_realizable(cur, Semantics::Strict, budget);
        if (o.verdict == Verdict::Yes) {
            r.verdict = Verdict::Yes;
            r.determination = std::move(cur);
            r.certificate = std::move(o.certificate);
            return r;
        }
        if (o.verdict == Verdict::BudgetExceeded) exceeded = true;
        bool carry = true;
        for (std::size_t i = undet.size(); i-- > 0 && carry;) {
            if (++pick[i] < choices[i].size())
                carry = false;
            else
                pick[i] = 0;
        }
        if (carry) break;
    }
    r.verdict = exceeded ? Verdict::BudgetExceeded : Verdict::No;
    return r;
}

std::optional<Assignment> sat_solve_brute(const CnfFormula& f) {
    validate_cnf(f);
    if (f.num_vars > 20)
        throw ValidationError("sat_solve_brute handles at most 20 variables, got " +
                              std::to_string(f.num_vars));
    const int nv = f.num_vars;
    Assignment a(static_cast<std::size_t>(nv));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nv); ++m) {
        for (int x = 0; x < nv; ++x) a[x] = (m >> (nv - 1 - x)) & 1;
        if (!first_violated_clause(f, a)) return a;
    }
    return std::nullopt;
}

}  // namespace tgr
