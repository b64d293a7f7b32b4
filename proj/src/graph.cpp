#include "tropidom/graph.hpp"

#include <algorithm>
#include <string>

#include "tropidom/error.hpp"

namespace tropidom {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ColourGap: return "ColourGap";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotDominating: return "NotDominating";
        case ErrorCode::NotAPath: return "NotAPath";
        case ErrorCode::RepresentationMismatch: return "RepresentationMismatch";
        case ErrorCode::TooManyColours: return "TooManyColours";
        case ErrorCode::NoRepresentation: return "NoRepresentation";
        case ErrorCode::MalformedFormula: return "MalformedFormula";
        case ErrorCode::NotSubcubic: return "NotSubcubic";
        case ErrorCode::HasIsolatedVertex: return "HasIsolatedVertex";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::NotTropicalDominating: return "NotTropicalDominating";
        case ErrorCode::WrongArtifact: return "WrongArtifact";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::BadEpsilon: return "BadEpsilon";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
}

ColouredGraph ColouredGraph::build(int n, std::span<const Edge> edges,
                                   std::span<const Colour> colours) {
    if (n < 1) fail(ErrorCode::OutOfRange, "vertex count must be at least 1");
    if (colours.size() != static_cast<std::size_t>(n))
        fail(ErrorCode::OutOfRange, "colour list length " + std::to_string(colours.size()) +
                                        " does not match n = " + std::to_string(n));

    ColouredGraph g;
    g.n_ = n;
    g.colours_.assign(colours.begin(), colours.end());
    for (std::size_t i = 0; i < g.colours_.size(); ++i)
        if (g.colours_[i] < 1)
            fail(ErrorCode::OutOfRange, "vertex " + std::to_string(i + 1) + " has colour " +
                                            std::to_string(g.colours_[i]) + " < 1");
    g.c_ = *std::max_element(g.colours_.begin(), g.colours_.end());
    g.classes_.assign(static_cast<std::size_t>(g.c_), {});
    for (int v = 1; v <= n; ++v) g.classes_[static_cast<std::size_t>(g.colour(v) - 1)].push_back(v);
    for (int k = 1; k <= g.c_; ++k)
        if (g.classes_[static_cast<std::size_t>(k - 1)].empty())
            fail(ErrorCode::ColourGap, "colour " + std::to_string(k) + " is not used by any vertex");

    g.edges_.reserve(edges.size());
    for (auto e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            fail(ErrorCode::OutOfRange, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            ") has an endpoint outside 1.." + std::to_string(n));
        if (e.u == e.v) fail(ErrorCode::SelfLoop, "self-loop on vertex " + std::to_string(e.u));
        g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        fail(ErrorCode::DuplicateEdge,
             "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    g.closed_rows_.assign(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < g.closed_rows_.size(); ++i) g.closed_rows_[i].set(i);
    for (auto e : g.edges_) {
        auto a = static_cast<std::size_t>(e.u - 1), b = static_cast<std::size_t>(e.v - 1);
        g.adjacency_[a].push_back(e.v);
        g.adjacency_[b].push_back(e.u);
        g.closed_rows_[a].set(b);
        g.closed_rows_[b].set(a);
    }
    for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
    return g;
}

bool ColouredGraph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    return closed_rows_[static_cast<std::size_t>(u - 1)].test(static_cast<std::size_t>(v - 1));
}

bool ColouredGraph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{1};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : neighbours(v)) {
            auto& s = seen[static_cast<std::size_t>(w - 1)];
            if (!s) {
                s = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

Bits to_bits(const ColouredGraph& g, const VertexSet& s) {
    Bits bits(static_cast<std::size_t>(g.order()));
    for (auto v : s) {
        if (v < 1 || v > g.order())
            fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " is not in the graph");
        bits.set(static_cast<std::size_t>(v - 1));
    }
    return bits;
}

bool is_dominating(const ColouredGraph& g, const VertexSet& s) {
    Bits covered(static_cast<std::size_t>(g.order()));
    for (auto v : s) covered |= g.closed_row(static_cast<std::size_t>(v - 1));
    return covered.all();
}

bool is_tropical(const ColouredGraph& g, const VertexSet& s) {
    std::vector<char> seen(static_cast<std::size_t>(g.colour_count()), 0);
    int distinct = 0;
    for (auto v : s) {
        auto& flag = seen[static_cast<std::size_t>(g.colour(v) - 1)];
        if (!flag) {
            flag = 1;
            ++distinct;
        }
    }
    return distinct == g.colour_count();
}

bool is_rainbow(const ColouredGraph& g, const VertexSet& s) {
    return s.size() == static_cast<std::size_t>(g.colour_count()) && is_tropical(g, s);
}

DegreeProfile degree_profile(const ColouredGraph& g) {
    DegreeProfile p;
    p.degree.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 1; v <= g.order(); ++v) p.degree[static_cast<std::size_t>(v - 1)] = g.degree(v);
    p.delta = *std::min_element(p.degree.begin(), p.degree.end());
    p.big_delta = *std::max_element(p.degree.begin(), p.degree.end());
    return p;
}

bool is_path(const ColouredGraph& g) {
    if (g.size() != static_cast<std::size_t>(g.order() - 1)) return false;
    for (Vertex v = 1; v <= g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return g.is_connected();
}

std::vector<Vertex> path_order(const ColouredGraph& g) {
    if (!is_path(g)) fail(ErrorCode::NotAPath, "graph is not a simple path");
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(g.order()));
    Vertex start = 1;
    for (Vertex v = 1; v <= g.order(); ++v)
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    Vertex prev = 0, cur = start;
    while (cur != 0) {
        order.push_back(cur);
        Vertex next = 0;
        for (auto w : g.neighbours(cur))
            if (w != prev) next = w;
        prev = cur;
        cur = next;
    }
    return order;
}

}  // namespace tropidom
