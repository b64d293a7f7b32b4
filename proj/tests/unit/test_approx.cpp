#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tropidom/approx.hpp"
#include "tropidom/error.hpp"
#include "tropidom/exact.hpp"

using namespace tropidom;

namespace {

ColouredGraph coloured_path(const std::vector<Colour>& colours) {
    std::vector<Edge> edges;
    for (int v = 1; v < static_cast<int>(colours.size()); ++v) edges.push_back({v, v + 1});
    return ColouredGraph::build(static_cast<int>(colours.size()), edges, colours);
}

}  // namespace

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == doctest::Approx(1.0));
    CHECK(harmonic(4) == doctest::Approx(25.0 / 12.0));
}

TEST_CASE("greedy on P3 is valid and within its guarantee") {
    auto g = ColouredGraph::build(3, {{1, 2}, {2, 3}}, {1, 2, 1});
    auto r = greedy_setcover_tds(g);
    CHECK(r.size >= 2);
    CHECK(is_tropical(g, r.witness));
    CHECK(r.ratio_bound == doctest::Approx(harmonic(4)));
    CHECK(r.lower_bound <= 2);
}

TEST_CASE("greedy guarantee on random graphs") {
    Rng rng(31);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + static_cast<int>(rng.below(12));
        auto g = oracle::random_graph(rng, n, 0.1 + 0.8 * rng.uniform(),
                                      1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 4)))));
        auto r = greedy_setcover_tds(g);
        int opt = oracle::gamma_t(g);
        CHECK(is_tropical(g, r.witness));
        CHECK(r.size == static_cast<int>(r.witness.size()));
        CHECK(r.lower_bound <= opt);
        CHECK(r.size <= r.ratio_bound * opt + 1e-9);
    }
}

TEST_CASE("minimum dominating set plus colours") {
    Rng rng(8);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng.below(10));
        auto g = oracle::random_graph(rng, n, 0.3, 1 + static_cast<int>(rng.below(3)) % n);
        auto ds = gamma(g).witness;
        auto r = mds_plus_colours(g, ds);
        CHECK(is_tropical(g, r.witness));
        CHECK(r.ratio_bound == doctest::Approx(2.0));
        CHECK(r.size <= oracle::gamma(g) + g.colour_count() - 1);
        CHECK(r.size <= 2 * oracle::gamma_t(g));
    }
    auto g = ColouredGraph::build(3, {{1, 2}, {2, 3}}, {1, 2, 1});
    CHECK_THROWS_AS(mds_plus_colours(g, {1}), Error);
}

TEST_CASE("path 5/3 on every 2-colouring of short paths") {
    for (int n = 1; n <= 10; ++n)
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            std::vector<Colour> colours;
            for (int v = 0; v < n; ++v) colours.push_back(1 + static_cast<int>(mask >> v & 1U));
            if (n > 1 && (mask == 0 || mask == (1U << n) - 1)) continue;
            if (n == 1 && mask == 1) continue;
            auto g = coloured_path(colours);
            auto d = path_five_thirds_detail(g);
            int opt = oracle::gamma_t(g);
            int c = g.colour_count();
            CHECK(is_tropical(g, d.result.witness));
            CHECK(3 * d.result.size <= 5 * opt);
            CHECK(d.result.size <= (n + 2 * c) / 3 + 1);
            CHECK(path_lower_bound(g) <= opt);
            CHECK(d.result.size == std::min({d.candidate_sizes[0], d.candidate_sizes[1], d.candidate_sizes[2]}));
        }
}

TEST_CASE("path 5/3 rejects non-paths") {
    auto tri = ColouredGraph::build(3, {{1, 2}, {2, 3}, {1, 3}}, {1, 1, 1});
    CHECK_THROWS_AS(path_five_thirds(tri), Error);
}

TEST_CASE("path 5/3 accepts paths labelled out of order") {
    auto g = ColouredGraph::build(5, {{3, 1}, {1, 5}, {5, 2}, {2, 4}}, {1, 2, 1, 3, 1});
    auto r = path_five_thirds(g);
    CHECK(is_tropical(g, r.witness));
    CHECK(3 * r.size <= 5 * oracle::gamma_t(g));
}
