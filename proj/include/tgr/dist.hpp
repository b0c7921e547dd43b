#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace tgr {

using Time = std::int64_t;
// Vertices are numbered 1..n in every public interface.
using Vertex = int;

// Extended natural number: a non-negative integer or infinity. Infinity
// compares larger than every finite value and absorbs addition.
class Dist {
public:
    constexpr Dist() = default;
    constexpr Dist(Time value) : v_(value) {}  // NOLINT(google-explicit-constructor)

    static constexpr Dist inf() {
        Dist d;
        d.v_ = kInfRaw;
        return d;
    }

    constexpr bool is_inf() const { return v_ == kInfRaw; }
    constexpr bool is_finite() const { return v_ != kInfRaw; }
    // Only meaningful for finite values.
    constexpr Time value() const { return v_; }

    friend constexpr bool operator==(const Dist&, const Dist&) = default;
    friend constexpr auto operator<=>(const Dist&, const Dist&) = default;

    friend constexpr Dist operator+(Dist a, Dist b) {
        if (a.is_inf() || b.is_inf()) return inf();
        return Dist(a.v_ + b.v_);
    }

    std::string to_string() const { return is_inf() ? "inf" : std::to_string(v_); }

private:
    static constexpr Time kInfRaw = std::numeric_limits<Time>::max();
    Time v_ = 0;
};

inline constexpr Dist kInfinity = Dist::inf();

inline std::ostream& operator<<(std::ostream& os, Dist d) { return os << d.to_string(); }

// n x n matrix over N u {inf} with D(u,u) = 0 and D(u,v) >= 1 (or inf) off the
// diagonal. No other metric axiom is assumed.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    // Zero diagonal, infinity everywhere else.
    explicit DistanceMatrix(int n);

    // Builds from explicit rows and validates the invariants.
    static DistanceMatrix from_rows(const std::vector<std::vector<Dist>>& rows);

    int size() const { return n_; }

    Dist operator()(Vertex u, Vertex v) const {
        return cells_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    }
    Dist at(Vertex u, Vertex v) const;  // bounds-checked
    void set(Vertex u, Vertex v, Dist d);

    // Sorted list of the distinct finite off-diagonal entries.
    std::vector<Time> distinct_finite_values() const;
    Dist max_finite() const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    int n_ = 0;
    std::vector<Dist> cells_;
};

std::ostream& operator<<(std::ostream& os, const DistanceMatrix& d);

// Closed integer range [lo, hi]; hi may be infinite.
struct Range {
    Dist lo;
    Dist hi;

    bool determined() const { return lo == hi; }
    bool contains(Dist d) const { return lo <= d && d <= hi; }
    friend bool operator==(const Range&, const Range&) = default;
};

std::string to_string(const Range& r);

struct OrderedPair {
    Vertex u;
    Vertex v;
    friend bool operator==(const OrderedPair&, const OrderedPair&) = default;
    friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

// Matrix of ranges; the diagonal is fixed to [0,0].
class RangeMatrix {
public:
    RangeMatrix() = default;
    explicit RangeMatrix(int n);  // off-diagonal entries start as [inf, inf]
    explicit RangeMatrix(const DistanceMatrix& d);

    int size() const { return n_; }
    const Range& operator()(Vertex u, Vertex v) const {
        return cells_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    }
    Dist lo(Vertex u, Vertex v) const { return (*this)(u, v).lo; }
    Dist hi(Vertex u, Vertex v) const { return (*this)(u, v).hi; }
    void set(Vertex u, Vertex v, Range r);

    // Undetermined ordered pairs in row-major order; index = position.
    std::vector<OrderedPair> undetermined() const;
    bool contains(const DistanceMatrix& d) const;

    friend bool operator==(const RangeMatrix&, const RangeMatrix&) = default;

private:
    int n_ = 0;
    std::vector<Range> cells_;
};

}  // namespace tgr
