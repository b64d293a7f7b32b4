#include "tropidom/interval.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "tropidom/error.hpp"

namespace tropidom {

namespace {

constexpr std::size_t max_table_entries = std::size_t{1} << 27;

bool intersects(const Interval& x, const Interval& y) { return std::max(x.l, y.l) <= std::min(x.r, y.r); }

}  // namespace

IntervalInstance IntervalInstance::build(const ColouredGraph& g, std::span<const Interval> intervals) {
    auto n = static_cast<std::size_t>(g.order());
    if (intervals.size() != n)
        fail(ErrorCode::RepresentationMismatch, "expected " + std::to_string(n) + " intervals, got " +
                                                    std::to_string(intervals.size()));
    for (std::size_t i = 0; i < n; ++i)
        if (intervals[i].l > intervals[i].r)
            fail(ErrorCode::RepresentationMismatch, "interval of vertex " + std::to_string(i + 1) + " has l > r");
    for (Vertex u = 1; u <= g.order(); ++u)
        for (Vertex v = u + 1; v <= g.order(); ++v) {
            bool meet = intersects(intervals[static_cast<std::size_t>(u - 1)], intervals[static_cast<std::size_t>(v - 1)]);
            if (meet != g.adjacent(u, v))
                fail(ErrorCode::RepresentationMismatch,
                     "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         (meet ? " have intersecting intervals but no edge" : " are adjacent but their intervals are disjoint"));
        }

    IntervalInstance inst(g);
    inst.order_.resize(n);
    std::iota(inst.order_.begin(), inst.order_.end(), 1);
    std::stable_sort(inst.order_.begin(), inst.order_.end(), [&](Vertex a, Vertex b) {
        return intervals[static_cast<std::size_t>(a - 1)].r < intervals[static_cast<std::size_t>(b - 1)].r;
    });
    inst.sorted_.reserve(n);
    for (auto v : inst.order_) inst.sorted_.push_back(intervals[static_cast<std::size_t>(v - 1)]);
    return inst;
}

bool IntervalInstance::contained_in(int p, int q) const {
    const auto& x = interval_at(p);
    const auto& y = interval_at(q);
    return y.l <= x.l && x.r <= y.r;
}

PrefixTables prefix_tables(const IntervalInstance& inst) {
    int n = inst.size();
    PrefixTables t;
    t.a.assign(static_cast<std::size_t>(n + 1), 0);
    t.b.assign(static_cast<std::size_t>(n + 1), no_position);
    t.P.assign(static_cast<std::size_t>(n + 1), {});

    for (int i = 1; i <= n; ++i) {
        int j = 1;
        while (inst.interval_at(j).r < inst.interval_at(i).l) ++j;
        t.a[static_cast<std::size_t>(i)] = j;
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            if (inst.interval_at(k).l > inst.interval_at(j).r) {
                t.b[static_cast<std::size_t>(j)] = k;
                break;
            }
    for (int i = 1; i <= n; ++i) {
        auto& preds = t.P[static_cast<std::size_t>(i)];
        int ai = t.a[static_cast<std::size_t>(i)];
        if (ai == 1) preds.push_back(0);
        for (int j = 1; j < i; ++j)
            if (ai <= t.b[static_cast<std::size_t>(j)] && !inst.contained_in(i, j) && !inst.contained_in(j, i))
                preds.push_back(j);
    }
    return t;
}

DpTable::DpTable(int colours, int positions) : colours_(colours), positions_(positions) {
    auto entries = (std::size_t{1} << colours) * static_cast<std::size_t>(positions + 1);
    f_.assign(entries, infinity);
    parent_mask_.assign(entries, 0);
    parent_pos_.assign(entries, -1);
}

DpTable fill_dp(const IntervalInstance& inst, const PrefixTables& tables) {
    int n = inst.size();
    int c = inst.graph().colour_count();
    DpTable dp(c, n);
    dp.set(0, 0, 0, 0, -1);
    std::uint32_t full = (std::uint32_t{1} << c) - 1;
    for (int i = 1; i <= n; ++i) {
        std::uint32_t bit = std::uint32_t{1} << (inst.colour_at(i) - 1);
        const auto& preds = tables.P[static_cast<std::size_t>(i)];
        for (std::uint32_t mask = bit; mask <= full; mask = (mask + 1) | bit) {
            int best = DpTable::infinity;
            std::uint32_t best_mask = 0;
            int best_pos = -1;
            for (int j : preds)
                for (std::uint32_t prev : {mask, mask ^ bit}) {
                    int v = dp.value(prev, j);
                    if (v < best) {
                        best = v;
                        best_mask = prev;
                        best_pos = j;
                    }
                }
            if (best < DpTable::infinity) dp.set(mask, i, best + 1, best_mask, best_pos);
            if (mask == full) break;
        }
    }
    return dp;
}

std::vector<int> reconstruct(const DpTable& dp, int i, std::uint32_t mask) {
    std::vector<int> positions;
    if (dp.value(mask, i) >= DpTable::infinity) return positions;
    while (i > 0) {
        positions.push_back(i);
        std::tie(mask, i) = dp.parent(mask, i);
    }
    std::reverse(positions.begin(), positions.end());
    return positions;
}

SolveResult tdn_interval(const IntervalInstance& inst, int colour_cap) {
    const auto& g = inst.graph();
    int n = inst.size();
    int c = g.colour_count();
    if (c > colour_cap || c > 30)
        fail(ErrorCode::TooManyColours, std::to_string(c) + " colours exceed the cap of " + std::to_string(std::min(colour_cap, 30)));
    if ((std::size_t{1} << c) * static_cast<std::size_t>(n + 1) > max_table_entries)
        fail(ErrorCode::TooManyColours, "table for " + std::to_string(c) + " colours and " + std::to_string(n) +
                                            " vertices exceeds the memory cap");

    auto tables = prefix_tables(inst);
    auto dp = fill_dp(inst, tables);

    int best = DpTable::infinity;
    int best_i = 0;
    std::uint32_t best_mask = 0;
    std::uint32_t full = (std::uint32_t{1} << c) - 1;
    for (int i = 1; i <= n; ++i) {
        if (tables.b[static_cast<std::size_t>(i)] != no_position) continue;
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            int v = dp.value(mask, i);
            if (v >= DpTable::infinity) continue;
            int total = v + c - std::popcount(mask);
            if (total < best) {
                best = total;
                best_i = i;
                best_mask = mask;
            }
        }
    }

    SolveResult out;
    out.kind = SolveKind::TropicalDomination;
    for (int pos : reconstruct(dp, best_i, best_mask)) out.witness.insert(inst.vertex_at(pos));
    for (Colour k = 1; k <= c; ++k)
        if (!(best_mask >> (k - 1) & 1U)) out.witness.insert(g.colour_class(k).front());
    out.value = static_cast<int>(out.witness.size());
    std::uint64_t transitions = 0;
    for (const auto& p : tables.P) transitions += p.size();
    out.explored = transitions << c;
    return out;
}

SolveResult tdn_interval(const Instance& inst, int colour_cap) {
    if (!inst.intervals) fail(ErrorCode::NoRepresentation, "instance has no interval representation ('i' lines)");
    return tdn_interval(IntervalInstance::build(inst.graph, *inst.intervals), colour_cap);
}

}  // namespace tropidom
