#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "tropidom/error.hpp"
#include "tropidom/exact.hpp"
#include "tropidom/forge.hpp"
#include "tropidom/instance_io.hpp"
#include "tropidom/problab.hpp"

namespace tropidom {

namespace {

constexpr int max_enumeration_order = 8;

// Adjacency as one bit per unordered pair, rows packed into 8-bit masks.
struct SmallGraph {
    int n = 0;
    std::uint8_t adj[max_enumeration_order] = {};

    bool has(int u, int v) const { return adj[u] >> v & 1U; }
};

// Upper triangle in row order, most significant bit first.
std::uint64_t encode(const SmallGraph& g, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) code = code << 1 | (g.has(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1U : 0U);
    return code;
}

// Canonical code: vertices are split into cells by an isomorphism-invariant
// key (degree, then sorted neighbour degrees); cells are ordered by key and
// only permutations inside cells are tried. The maximum code wins.
std::uint64_t canonical_code(const SmallGraph& g, std::vector<int>* best_perm = nullptr) {
    int n = g.n;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) deg[static_cast<std::size_t>(u)] = std::popcount(static_cast<unsigned>(g.adj[u]));
    std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        auto& k = key[static_cast<std::size_t>(u)];
        k.push_back(deg[static_cast<std::size_t>(u)]);
        std::vector<int> nd;
        for (int v = 0; v < n; ++v)
            if (g.has(u, v)) nd.push_back(deg[static_cast<std::size_t>(v)]);
        std::sort(nd.begin(), nd.end());
        k.insert(k.end(), nd.begin(), nd.end());
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]; });
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && key[static_cast<std::size_t>(order[j])] == key[static_cast<std::size_t>(order[i])]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    for (auto [b, e] : cells) std::sort(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e));

    std::uint64_t best = 0;
    bool first = true;
    // Odometer over per-cell permutations.
    while (true) {
        auto code = encode(g, order);
        if (first || code > best) {
            best = code;
            first = false;
            if (best_perm) *best_perm = order;
        }
        std::size_t k = 0;
        for (; k < cells.size(); ++k) {
            auto [b, e] = cells[k];
            if (std::next_permutation(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e))) break;
        }
        if (k == cells.size()) break;
    }
    return best;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm) {
    // New vertex i is old vertex perm[i].
    SmallGraph out;
    out.n = g.n;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (i != j && g.has(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                out.adj[i] = static_cast<std::uint8_t>(out.adj[i] | 1U << j);
    return out;
}

bool small_connected(const SmallGraph& g) {
    if (g.n == 0) return true;
    unsigned seen = 1, frontier = 1;
    while (frontier) {
        unsigned next = 0;
        for (int u = 0; u < g.n; ++u)
            if (frontier >> u & 1U) next |= g.adj[u];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1U << g.n) - 1;
}

std::vector<SmallGraph> all_graphs(int n) {
    std::vector<SmallGraph> level(1);  // the empty graph on 0 vertices
    for (int k = 1; k <= n; ++k) {
        std::map<std::uint64_t, SmallGraph> next;
        for (const auto& base : level)
            for (unsigned nb = 0; nb < (1U << (k - 1)); ++nb) {
                SmallGraph g = base;
                g.n = k;
                g.adj[k - 1] = static_cast<std::uint8_t>(nb);
                for (int u = 0; u < k - 1; ++u)
                    if (nb >> u & 1U) g.adj[u] = static_cast<std::uint8_t>(g.adj[u] | 1U << (k - 1));
                std::vector<int> perm;
                auto code = canonical_code(g, &perm);
                if (!next.count(code)) next.emplace(code, relabel(g, perm));
            }
        level.clear();
        for (auto& [code, g] : next) level.push_back(g);
    }
    return level;
}

std::vector<Edge> edge_list(const SmallGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has(u, v)) edges.push_back(Edge{u + 1, v + 1});
    return edges;
}

struct Tally {
    std::map<int, DeltaStats> per_delta;
    std::uint64_t instances = 0;
    std::vector<Counterexample> counterexamples;

    void add(const ColouredGraph& g, std::uint64_t budget) {
        int delta = degree_profile(g).delta;
        int n = g.order(), c = g.colour_count();
        int gt = gamma_t(g, SearchOptions{budget}).value;
        double bound = conjecture_bound(n, c, delta);
        ++instances;
        auto& s = per_delta[delta];
        s.delta = delta;
        double ratio = gt / bound, slack = bound - gt;
        if (s.instances == 0 || ratio > s.max_ratio) s.max_ratio = ratio;
        if (s.instances == 0 || slack < s.min_slack) s.min_slack = slack;
        ++s.instances;
        if (std::abs(slack) <= 1e-9) ++s.tight;
        if (gt > bound + 1e-9) {
            Counterexample x{format_instance(g), n, c, delta, gt, bound};
            if (delta >= n - c)
                x.kind = CounterexampleClass::MinDegreeAtLeastNMinusC;
            else if (c == 1 && delta == 2)
                x.kind = CounterexampleClass::UncolouredDeltaTwoException;
            counterexamples.push_back(std::move(x));
        }
    }
};

}  // namespace

const char* to_string(CounterexampleClass k) noexcept {
    switch (k) {
        case CounterexampleClass::MinDegreeAtLeastNMinusC: return "min_degree_at_least_n_minus_c";
        case CounterexampleClass::UncolouredDeltaTwoException: return "uncoloured_delta2_exception";
        case CounterexampleClass::Unexplained: return "unexplained";
    }
    return "unknown";
}

std::vector<ColouredGraph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > max_enumeration_order)
        fail(ErrorCode::BadParameters, "graph enumeration supports 1 <= n <= " + std::to_string(max_enumeration_order));
    std::vector<ColouredGraph> out;
    std::vector<Colour> colours(static_cast<std::size_t>(n), 1);
    for (const auto& g : all_graphs(n)) {
        if (connected_only && !small_connected(g)) continue;
        auto edges = edge_list(g);
        out.push_back(ColouredGraph::build(n, edges, colours));
    }
    return out;
}

std::vector<std::vector<Colour>> colourings_up_to_permutation(int n, int c) {
    std::vector<std::vector<Colour>> out;
    if (c < 1 || c > n) return out;
    std::vector<Colour> s(static_cast<std::size_t>(n), 1);
    // Restricted growth strings: s[0] = 1, s[i] <= 1 + max(s[0..i-1]).
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            if (used == c) out.push_back(s);
            return;
        }
        if (used + (n - i) < c) return;
        for (int k = 1; k <= std::min(used + 1, c); ++k) {
            s[static_cast<std::size_t>(i)] = k;
            self(self, i + 1, std::max(used, k));
        }
    };
    rec(rec, 1, 1);
    return out;
}

ConjectureReport search_conjecture(const ConjectureConfig& config) {
    if (config.max_n < 1 || config.max_n > max_enumeration_order || config.max_c < 1)
        fail(ErrorCode::BadParameters, "conjecture search needs 1 <= max_n <= " +
                                           std::to_string(max_enumeration_order) + " and max_c >= 1");
    Tally tally;
    for (int n = 2; n <= config.max_n; ++n) {
        auto graphs = enumerate_graphs(n, true);
        for (int c = 1; c <= std::min(config.max_c, n - 1); ++c)
            for (const auto& colours : colourings_up_to_permutation(n, c))
                for (const auto& base : graphs)
                    tally.add(ColouredGraph::build(n, base.edges(), colours), config.node_budget);
    }
    ConjectureReport report;
    report.exhaustive_instances = tally.instances;

    if (config.random_samples > 0) {
        if (config.random_max_n < 2 || !(config.random_p > 0 && config.random_p < 1))
            fail(ErrorCode::BadParameters, "random sampling needs random_max_n >= 2 and 0 < p < 1");
        for (std::uint64_t s = 0; s < config.random_samples; ++s) {
            Rng rng(derive_seed(config.seed, s));
            int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.random_max_n - 1)));
            int c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(config.max_c, n - 1))));
            // Redraw until the sample is connected and uses every colour.
            while (true) {
                auto raw = sample_gnpc(n, config.random_p, c, rng);
                if (!raw.all_colours_used()) continue;
                auto g = ColouredGraph::build(n, raw.edges, raw.colours);
                if (!g.is_connected()) continue;
                tally.add(g, config.node_budget);
                break;
            }
        }
    }
    report.instances = tally.instances;
    report.random_instances = tally.instances - report.exhaustive_instances;
    report.counterexamples = std::move(tally.counterexamples);
    for (const auto& x : report.counterexamples)
        if (x.kind == CounterexampleClass::Unexplained) ++report.unexplained;
    for (auto& [d, s] : tally.per_delta) report.per_delta.push_back(s);
    return report;
}

std::string conjecture_json(const ConjectureReport& report, const ConjectureConfig& config) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["config"] = {{"max_n", config.max_n},
                   {"max_c", config.max_c},
                   {"random_samples", config.random_samples},
                   {"random_max_n", config.random_max_n},
                   {"random_p", config.random_p},
                   {"seed", config.seed}};
    j["instances"] = report.instances;
    j["exhaustive_instances"] = report.exhaustive_instances;
    j["random_instances"] = report.random_instances;
    auto rows = ordered_json::array();
    for (const auto& s : report.per_delta)
        rows.push_back(ordered_json{{"delta", s.delta},
                                    {"instances", s.instances},
                                    {"tight", s.tight},
                                    {"max_ratio", s.max_ratio},
                                    {"min_slack", s.min_slack}});
    j["per_delta"] = rows;
    j["counterexample_count"] = report.counterexamples.size();
    j["unexplained_count"] = report.unexplained;
    auto found = ordered_json::array();
    for (const auto& x : report.counterexamples)
        found.push_back(ordered_json{{"class", to_string(x.kind)},
                                     {"n", x.n},
                                     {"c", x.c},
                                     {"delta", x.delta},
                                     {"gamma_t", x.gamma_t},
                                     {"bound", x.bound},
                                     {"instance", x.instance}});
    j["counterexamples"] = found;
    return j.dump(2) + "\n";
}

}  // namespace tropidom
