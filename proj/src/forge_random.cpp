#include <algorithm>
#include <cmath>
#include <string>

#include "tropidom/error.hpp"
#include "tropidom/forge.hpp"

namespace tropidom {

namespace {

constexpr int max_colour_redraws = 1'000'000;

}  // namespace

bool RawColouredSample::all_colours_used() const {
    std::vector<char> used(static_cast<std::size_t>(c), 0);
    int distinct = 0;
    for (auto col : colours) {
        auto& flag = used[static_cast<std::size_t>(col - 1)];
        if (!flag) {
            flag = 1;
            ++distinct;
        }
    }
    return distinct == c;
}

RawColouredSample sample_gnpc(int n, double p, int c, Rng& rng) {
    RawColouredSample s;
    s.n = n;
    s.c = c;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.bernoulli(p)) s.edges.push_back(Edge{u, v});
    s.colours.resize(static_cast<std::size_t>(n));
    for (auto& col : s.colours) col = static_cast<Colour>(1 + rng.below(static_cast<std::uint64_t>(c)));
    return s;
}

GeneratedGraph gen_gnpc(int n, double p, int c, std::uint64_t seed) {
    if (n < 1) fail(ErrorCode::BadParameters, "n must be at least 1");
    if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::BadParameters, "p must lie strictly between 0 and 1");
    if (c < 1 || c > n) fail(ErrorCode::BadParameters, "c must lie in 1..n");

    Rng rng(seed);
    auto sample = sample_gnpc(n, p, c, rng);
    int redraws = 0;
    while (!sample.all_colours_used()) {
        if (++redraws > max_colour_redraws)
            fail(ErrorCode::BadParameters, "could not draw a colouring that uses all " + std::to_string(c) + " colours");
        for (auto& col : sample.colours) col = static_cast<Colour>(1 + rng.below(static_cast<std::uint64_t>(c)));
    }
    return GeneratedGraph{ColouredGraph::build(n, sample.edges, sample.colours), redraws};
}

ColouredGraph extremal_gamma_plus(int gamma_target, int c) {
    if (gamma_target < 1 || c < 1) fail(ErrorCode::BadParameters, "gamma and c must both be at least 1");
    int cycle = 3 * gamma_target;
    int n = cycle + c - 1;
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= cycle; ++v) edges.push_back(Edge{v, v % cycle + 1});
    std::vector<Colour> colours(static_cast<std::size_t>(n), 1);
    for (int leaf = 1; leaf < c; ++leaf) {
        Vertex v = cycle + leaf;
        edges.push_back(Edge{1, v});
        colours[static_cast<std::size_t>(v - 1)] = leaf + 1;
    }
    return ColouredGraph::build(n, edges, colours);
}

ColouredGraph extremal_edge_bound(int n, int k, int c) {
    if (k < 1 || c < 1 || k < c) fail(ErrorCode::BadParameters, "need k >= c >= 1");
    if (n <= k + c - 2) fail(ErrorCode::BadParameters, "need n > k + c - 2");
    int clique = n - k + c - 1;
    int extra = k - c + 1;
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= clique; ++u)
        for (Vertex v = u + 1; v <= clique; ++v) edges.push_back(Edge{u, v});
    std::vector<Colour> colours(static_cast<std::size_t>(n), c);
    for (Vertex v = 1; v < c; ++v) colours[static_cast<std::size_t>(v - 1)] = v;
    int next = 0;
    for (Vertex a = c; a <= clique; ++a) {
        edges.push_back(Edge{a, clique + 1 + next});
        next = (next + 1) % extra;
    }
    return ColouredGraph::build(n, edges, colours);
}

std::int64_t padding_length(int n, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) fail(ErrorCode::BadEpsilon, "epsilon must lie in (0, 1]");
    long double x = std::pow(static_cast<long double>(n + 2), 1.0L / static_cast<long double>(epsilon));
    long double nearest = std::round(x);
    if (std::fabs(x - nearest) <= 1e-9L * nearest) x = nearest;
    x = std::ceil(x);
    if (x > 10'000'000.0L) fail(ErrorCode::BadParameters, "padding would exceed 10^7 vertices");
    return static_cast<std::int64_t>(x);
}

ColouredGraph pad_colours(const ColouredGraph& path, double epsilon) {
    auto order = path_order(path);
    auto extra = padding_length(path.order(), epsilon);
    int n = path.order();
    int total = n + static_cast<int>(extra);
    std::vector<Edge> edges = path.edges();
    std::vector<Colour> colours = path.colours();
    colours.resize(static_cast<std::size_t>(total), path.colour_count() + 2);
    colours[static_cast<std::size_t>(n + 1)] = path.colour_count() + 1;
    edges.push_back(Edge{order.back(), n + 1});
    for (Vertex v = n + 1; v < total; ++v) edges.push_back(Edge{v, v + 1});
    return ColouredGraph::build(total, edges, colours);
}

}  // namespace tropidom
