#include "tgr/dist.hpp"

#include <algorithm>

#include "tgr/errors.hpp"

namespace tgr {

namespace {

void check_vertex(int n, Vertex u) {
    if (u < 1 || u > n)
        throw ValidationError("vertex " + std::to_string(u) + " out of range 1.." +
                              std::to_string(n));
}

void check_entry(Vertex u, Vertex v, Dist d) {
    if (u == v) {
        if (d != Dist(0))
            throw ValidationError("diagonal entry (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") must be 0, got " + d.to_string());
    } else if (d.is_finite() && d.value() < 1) {
        throw ValidationError("off-diagonal entry (" + std::to_string(u) + "," +
                              std::to_string(v) + ") must be >= 1 or inf, got " +
                              d.to_string());
    }
}

}  // namespace

DistanceMatrix::DistanceMatrix(int n) : n_(n) {
    if (n < 0) throw ValidationError("negative matrix dimension");
    cells_.assign(static_cast<std::size_t>(n) * n, kInfinity);
    for (int i = 0; i < n; ++i) cells_[static_cast<std::size_t>(i) * n + i] = Dist(0);
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<Dist>>& rows) {
    const int n = static_cast<int>(rows.size());
    DistanceMatrix d(n);
    for (int u = 1; u <= n; ++u) {
        if (static_cast<int>(rows[u - 1].size()) != n)
            throw ValidationError("row " + std::to_string(u) + " has " +
                                  std::to_string(rows[u - 1].size()) + " entries, expected " +
                                  std::to_string(n));
        for (int v = 1; v <= n; ++v) d.set(u, v, rows[u - 1][v - 1]);
    }
    return d;
}

Dist DistanceMatrix::at(Vertex u, Vertex v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    return (*this)(u, v);
}

void DistanceMatrix::set(Vertex u, Vertex v, Dist d) {
    check_vertex(n_, u);
    check_vertex(n_, v);
    check_entry(u, v, d);
    cells_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] = d;
}

std::vector<Time> DistanceMatrix::distinct_finite_values() const {
    std::vector<Time> out;
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v = 1; v <= n_; ++v)
            if (u != v && (*this)(u, v).is_finite()) out.push_back((*this)(u, v).value());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Dist DistanceMatrix::max_finite() const {
    Dist best(0);
    for (Dist d : cells_)
        if (d.is_finite() && d > best) best = d;
    return best;
}

std::ostream& operator<<(std::ostream& os, const DistanceMatrix& d) {
    os << '[';
    for (Vertex u = 1; u <= d.size(); ++u) {
        os << (u > 1 ? "," : "") << '[';
        for (Vertex v = 1; v <= d.size(); ++v) os << (v > 1 ? "," : "") << d(u, v);
        os << ']';
    }
    return os << ']';
}

std::string to_string(const Range& r) {
    if (r.determined()) return r.lo.to_string();
    return r.lo.to_string() + ".." + r.hi.to_string();
}

RangeMatrix::RangeMatrix(int n) : n_(n) {
    if (n < 0) throw ValidationError("negative matrix dimension");
    cells_.assign(static_cast<std::size_t>(n) * n, Range{kInfinity, kInfinity});
    for (int i = 0; i < n; ++i) cells_[static_cast<std::size_t>(i) * n + i] = Range{0, 0};
}

RangeMatrix::RangeMatrix(const DistanceMatrix& d) : RangeMatrix(d.size()) {
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v = 1; v <= n_; ++v) set(u, v, Range{d(u, v), d(u, v)});
}

void RangeMatrix::set(Vertex u, Vertex v, Range r) {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (r.lo > r.hi)
        throw ValidationError("range (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has lo > hi: " + r.lo.to_string() + ".." + r.hi.to_string());
    if (u == v) {
        if (r.lo != Dist(0) || r.hi != Dist(0))
            throw ValidationError("diagonal range (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") must be 0");
    } else {
        check_entry(u, v, r.lo);
    }
    cells_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] = r;
}

std::vector<OrderedPair> RangeMatrix::undetermined() const {
    std::vector<OrderedPair> out;
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v = 1; v <= n_; ++v)
            if (!(*this)(u, v).determined()) out.push_back({u, v});
    return out;
}

bool RangeMatrix::contains(const DistanceMatrix& d) const {
    if (d.size() != n_) return false;
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v = 1; v <= n_; ++v)
            if (!(*this)(u, v).contains(d(u, v))) return false;
    return true;
}

}  // namespace tgr
