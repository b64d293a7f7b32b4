#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tropidom/exact.hpp"
#include "tropidom/graph.hpp"
#include "tropidom/instance_io.hpp"

namespace tropidom {

// A coloured interval graph with its representation. Positions 1..n refer
// to vertices sorted by right endpoint (ties by vertex id).
class IntervalInstance {
public:
    // Throws RepresentationMismatch unless the intersection graph of
    // `intervals` (indexed by vertex - 1) is exactly g.
    static IntervalInstance build(const ColouredGraph& g, std::span<const Interval> intervals);

    const ColouredGraph& graph() const noexcept { return graph_; }
    int size() const noexcept { return static_cast<int>(order_.size()); }

    // Vertex at sorted position p (1-based) and its interval.
    Vertex vertex_at(int p) const { return order_[static_cast<std::size_t>(p - 1)]; }
    const Interval& interval_at(int p) const { return sorted_[static_cast<std::size_t>(p - 1)]; }
    Colour colour_at(int p) const { return graph_.colour(vertex_at(p)); }
    const std::vector<Vertex>& order() const noexcept { return order_; }

    // Non-strict containment of the intervals at positions p and q.
    bool contained_in(int p, int q) const;

private:
    explicit IntervalInstance(ColouredGraph g) : graph_(std::move(g)) {}

    ColouredGraph graph_;
    std::vector<Vertex> order_;
    std::vector<Interval> sorted_;
};

inline constexpr int no_position = std::numeric_limits<int>::max();

// Per-position tables driving the recursion. All indices are sorted
// positions; index 0 of each vector is unused.
struct PrefixTables {
    std::vector<int> a;               // least position dominated by position i
    std::vector<int> b;               // least position > j not dominated by [1, j], or no_position
    std::vector<std::vector<int>> P;  // admissible predecessors of i (0 = start)
};

PrefixTables prefix_tables(const IntervalInstance& inst);

// f(S, i) over colour masks S and positions 0..n, with back-pointers.
class DpTable {
public:
    static constexpr int infinity = std::numeric_limits<int>::max() / 2;

    DpTable(int colours, int positions);

    int value(std::uint32_t mask, int i) const { return f_[index(mask, i)]; }
    // Predecessor (mask, position) that realises value(mask, i); position -1
    // marks the start state.
    std::pair<std::uint32_t, int> parent(std::uint32_t mask, int i) const {
        auto k = index(mask, i);
        return {parent_mask_[k], parent_pos_[k]};
    }

    int colours() const noexcept { return colours_; }
    int positions() const noexcept { return positions_; }

    void set(std::uint32_t mask, int i, int v, std::uint32_t pmask, int ppos) {
        auto k = index(mask, i);
        f_[k] = v;
        parent_mask_[k] = pmask;
        parent_pos_[k] = ppos;
    }

private:
    std::size_t index(std::uint32_t mask, int i) const {
        return static_cast<std::size_t>(mask) * static_cast<std::size_t>(positions_ + 1) +
               static_cast<std::size_t>(i);
    }

    int colours_;
    int positions_;
    std::vector<int> f_;
    std::vector<std::uint32_t> parent_mask_;
    std::vector<int> parent_pos_;
};

inline constexpr int default_colour_cap = 24;

DpTable fill_dp(const IntervalInstance& inst, const PrefixTables& tables);

// Sorted positions of the proper i-prefix dominating set recorded for
// (mask, i); empty when the entry is infinite.
std::vector<int> reconstruct(const DpTable& dp, int i, std::uint32_t mask);

// Minimum tropical dominating set of an interval graph in O(2^c n^2).
SolveResult tdn_interval(const IntervalInstance& inst, int colour_cap = default_colour_cap);

// Convenience overload for a parsed instance; throws NoRepresentation when
// the instance carries no intervals.
SolveResult tdn_interval(const Instance& inst, int colour_cap = default_colour_cap);

}  // namespace tropidom
