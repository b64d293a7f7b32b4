#include <doctest.h>

#include <chrono>

#include "support/intervals.hpp"
#include "support/oracles.hpp"
#include "tropidom/error.hpp"
#include "tropidom/interval.hpp"

using namespace tropidom;

namespace {

IntervalInstance three_intervals() {
    auto g = ColouredGraph::build(3, {{1, 2}}, {1, 2, 1});
    std::vector<Interval> iv{{0, 2}, {1, 3}, {4, 5}};
    return IntervalInstance::build(g, iv);
}

bool meets(const Interval& x, const Interval& y) { return std::max(x.l, y.l) <= std::min(x.r, y.r); }
bool inside(const Interval& x, const Interval& y) { return y.l <= x.l && x.r <= y.r; }

// Positions (1..n) dominated by the positions in `set` (bit p-1).
oracle::Mask dominated(const IntervalInstance& inst, oracle::Mask set) {
    oracle::Mask out = 0;
    for (int p = 1; p <= inst.size(); ++p)
        for (int q = 1; q <= inst.size(); ++q)
            if ((set >> (q - 1) & 1U) && meets(inst.interval_at(p), inst.interval_at(q))) out |= oracle::Mask{1} << (p - 1);
    return out;
}

bool proper(const IntervalInstance& inst, oracle::Mask set) {
    for (int p = 1; p <= inst.size(); ++p)
        for (int q = p + 1; q <= inst.size(); ++q)
            if ((set >> (p - 1) & 1U) && (set >> (q - 1) & 1U) &&
                (inside(inst.interval_at(p), inst.interval_at(q)) || inside(inst.interval_at(q), inst.interval_at(p))))
                return false;
    return true;
}

}  // namespace

TEST_CASE("tables for the three-interval example") {
    auto inst = three_intervals();
    CHECK(inst.order() == std::vector<Vertex>{1, 2, 3});
    auto t = prefix_tables(inst);
    CHECK(t.a[1] == 1);
    CHECK(t.a[2] == 1);
    CHECK(t.a[3] == 3);
    CHECK(t.b[1] == 3);
    CHECK(t.b[2] == 3);
    CHECK(t.b[3] == no_position);
    CHECK(t.P[1] == std::vector<int>{0});
    CHECK(t.P[2] == std::vector<int>{0, 1});
    CHECK(t.P[3] == std::vector<int>{1, 2});

    auto r = tdn_interval(inst);
    CHECK(r.value == 2);
    CHECK(r.witness == VertexSet{2, 3});
}

TEST_CASE("representation checks") {
    auto wrong = ColouredGraph::build(3, {{1, 3}}, {1, 2, 1});
    std::vector<Interval> iv{{0, 2}, {1, 3}, {4, 5}};
    try {
        IntervalInstance::build(wrong, iv);
        FAIL("expected RepresentationMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RepresentationMismatch);
    }
    std::vector<Interval> short_list{{0, 2}};
    CHECK_THROWS_AS(IntervalInstance::build(wrong, short_list), Error);

    auto plain = parse_instance("p tdgs 1 0 1\nv 1 1\n");
    try {
        tdn_interval(plain);
        FAIL("expected NoRepresentation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoRepresentation);
    }
}

TEST_CASE("ties in right endpoints go to the lower vertex id") {
    auto g = ColouredGraph::build(2, {{1, 2}}, {1, 1});
    std::vector<Interval> iv{{0, 2}, {1, 2}};
    CHECK(IntervalInstance::build(g, iv).order() == std::vector<Vertex>{1, 2});
}

TEST_CASE("nested intervals exclude each other from predecessor sets") {
    auto g = ColouredGraph::build(2, {{1, 2}}, {1, 2});
    std::vector<Interval> iv{{0, 5}, {1, 2}};
    auto inst = IntervalInstance::build(g, iv);
    CHECK(inst.order() == std::vector<Vertex>{2, 1});
    auto t = prefix_tables(inst);
    CHECK(t.P[2] == std::vector<int>{0});
    CHECK(tdn_interval(inst).value == 2);
}

TEST_CASE("single interval") {
    auto g = ColouredGraph::build(1, {}, {1});
    std::vector<Interval> iv{{3, 3}};
    auto inst = IntervalInstance::build(g, iv);
    auto t = prefix_tables(inst);
    CHECK(t.a[1] == 1);
    CHECK(t.b[1] == no_position);
    CHECK(t.P[1] == std::vector<int>{0});
    CHECK(tdn_interval(inst).value == 1);
}

TEST_CASE("tables match their definitions on random instances") {
    Rng rng(404);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng.below(10));
        auto ri = oracle::random_intervals(rng, n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 3)))));
        auto inst = IntervalInstance::build(ri.graph, ri.intervals);
        auto tables = prefix_tables(inst);
        for (int p = 2; p <= n; ++p) CHECK(inst.interval_at(p - 1).r <= inst.interval_at(p).r);
        for (int i = 1; i <= n; ++i) {
            int a = 1;
            while (inst.interval_at(a).r < inst.interval_at(i).l) ++a;
            CHECK(tables.a[static_cast<std::size_t>(i)] == a);
            int b = no_position;
            for (int k = i + 1; k <= n && b == no_position; ++k)
                if (inst.interval_at(k).l > inst.interval_at(i).r) b = k;
            CHECK(tables.b[static_cast<std::size_t>(i)] == b);
        }
    }
}

TEST_CASE("f(S,i) equals the minimum over proper i-prefix dominating sets") {
    Rng rng(99);
    for (int t = 0; t < 150; ++t) {
        int n = 1 + static_cast<int>(rng.below(10));
        int c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 3))));
        auto ri = oracle::random_intervals(rng, n, c);
        auto inst = IntervalInstance::build(ri.graph, ri.intervals);
        auto dp = fill_dp(inst, prefix_tables(inst));
        // best[S][i] by enumeration of every position set whose maximum is i.
        std::vector<std::vector<int>> best(1U << c, std::vector<int>(static_cast<std::size_t>(n + 1), DpTable::infinity));
        for (oracle::Mask set = 1; set < (oracle::Mask{1} << n); ++set) {
            int i = 64 - std::countl_zero(set);
            auto prefix = (oracle::Mask{1} << i) - 1;
            if ((dominated(inst, set) & prefix) != prefix || !proper(inst, set)) continue;
            unsigned colours = 0;
            for (int p = 1; p <= n; ++p)
                if (set >> (p - 1) & 1U) colours |= 1U << (inst.colour_at(p) - 1);
            auto& slot = best[colours][static_cast<std::size_t>(i)];
            slot = std::min(slot, std::popcount(set));
        }
        for (unsigned s = 0; s < (1U << c); ++s)
            for (int i = 1; i <= n; ++i) {
                CHECK(dp.value(s, i) == best[s][static_cast<std::size_t>(i)]);
                auto positions = reconstruct(dp, i, s);
                if (dp.value(s, i) >= DpTable::infinity) {
                    CHECK(positions.empty());
                    continue;
                }
                oracle::Mask set = 0;
                unsigned colours = 0;
                for (int p : positions) {
                    set |= oracle::Mask{1} << (p - 1);
                    colours |= 1U << (inst.colour_at(p) - 1);
                }
                auto prefix = (oracle::Mask{1} << i) - 1;
                CHECK(static_cast<int>(positions.size()) == dp.value(s, i));
                CHECK(positions.back() == i);
                CHECK(colours == s);
                CHECK(proper(inst, set));
                CHECK((dominated(inst, set) & prefix) == prefix);
            }
    }
}

TEST_CASE("an i-prefix dominating set dominates exactly what [1,i] dominates") {
    Rng rng(123);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng.below(10));
        auto ri = oracle::random_intervals(rng, n, 1);
        auto inst = IntervalInstance::build(ri.graph, ri.intervals);
        auto set = (rng() & oracle::full(n)) | 1U;
        int i = 64 - std::countl_zero(set);
        auto prefix = (oracle::Mask{1} << i) - 1;
        if ((dominated(inst, set) & prefix) != prefix) continue;
        ++checked;
        CHECK(dominated(inst, set) == dominated(inst, prefix));
    }
    CHECK(checked > 20);
}

TEST_CASE("tdn_interval equals the exact oracle") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng.below(12));
        int c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 4))));
        auto ri = oracle::random_intervals(rng, n, c);
        auto r = tdn_interval(IntervalInstance::build(ri.graph, ri.intervals));
        CHECK(r.value == oracle::gamma_t(ri.graph));
        CHECK(is_tropical(ri.graph, r.witness));
        CHECK(r.witness.size() == static_cast<std::size_t>(r.value));
    }
}

TEST_CASE("colour cap") {
    std::vector<Colour> colours;
    std::vector<Interval> iv;
    for (int v = 1; v <= 5; ++v) {
        colours.push_back(v);
        iv.push_back({3 * v, 3 * v + 1});
    }
    auto g = ColouredGraph::build(5, std::vector<Edge>{}, colours);
    auto inst = IntervalInstance::build(g, iv);
    CHECK(tdn_interval(inst).value == 5);
    try {
        tdn_interval(inst, 4);
        FAIL("expected TooManyColours");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooManyColours);
    }
}

TEST_CASE("doubling n at fixed c roughly quadruples the work") {
    // Work is measured as DP transitions, which is what O(2^c n^2) bounds.
    auto work = [](int n) {
        std::vector<Edge> edges;
        std::vector<Interval> iv;
        std::vector<Colour> colours;
        for (int v = 1; v <= n; ++v) {
            iv.push_back({v, v + 3});
            colours.push_back(1 + v % 3);
        }
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n && v <= u + 3; ++v) edges.push_back({u, v});
        auto g = ColouredGraph::build(n, edges, colours);
        return tdn_interval(IntervalInstance::build(g, iv)).explored;
    };
    auto small = static_cast<double>(work(200));
    auto large = static_cast<double>(work(400));
    CHECK(large / small <= 4.5);
}
