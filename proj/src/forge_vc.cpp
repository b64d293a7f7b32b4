#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "path_builder.hpp"
#include "tropidom/error.hpp"
#include "tropidom/forge.hpp"

namespace tropidom {

namespace {

// Layout of the vertex-cover path; positions equal vertex ids.
constexpr int block_first(int j) { return 3 + 9 * (j - 1) + 1; }  // x1 of block j
constexpr int triple_first(int j) { return j == 0 ? 1 : 3 + 9 * (j - 1) + 7; }

}  // namespace

void SubcubicGraph::validate() const {
    if (n < 1 || edges.empty()) fail(ErrorCode::EmptyGraph, "graph has no vertices or no edges");
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    auto sorted = edges;
    for (auto& e : sorted) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            fail(ErrorCode::OutOfRange, "edge endpoint outside 1.." + std::to_string(n));
        if (e.u == e.v) fail(ErrorCode::SelfLoop, "self-loop on vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        ++degree[static_cast<std::size_t>(e.u - 1)];
        ++degree[static_cast<std::size_t>(e.v - 1)];
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorCode::DuplicateEdge, "duplicate edge");
    for (int v = 1; v <= n; ++v) {
        auto d = degree[static_cast<std::size_t>(v - 1)];
        if (d == 0) fail(ErrorCode::HasIsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
        if (d > 3) fail(ErrorCode::NotSubcubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
}

SubcubicGraph parse_dimacs_graph(std::string_view text) {
    SubcubicGraph g;
    bool have_header = false;
    long declared = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto bad = [&](const std::string& what) {
        fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string tok;
        if (!(fields >> tok) || tok[0] == 'c' || tok[0] == '#') continue;
        if (tok == "p") {
            std::string fmt;
            long n = 0;
            if (have_header) bad("duplicate problem line");
            if (!(fields >> fmt >> n >> declared) || fmt != "edge" || n < 1 || declared < 0)
                bad("expected 'p edge <n> <m>'");
            g.n = static_cast<int>(n);
            have_header = true;
        } else if (tok == "e") {
            long u = 0, v = 0;
            if (!have_header) bad("edge before problem line");
            if (!(fields >> u >> v) || (fields >> tok)) bad("expected 'e <u> <v>'");
            g.edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
        } else {
            bad("unknown line '" + tok + "'");
        }
    }
    if (!have_header) fail(ErrorCode::Parse, "missing 'p edge <n> <m>' line");
    if (static_cast<long>(g.edges.size()) != declared)
        fail(ErrorCode::Parse, "declared " + std::to_string(declared) + " edges, found " + std::to_string(g.edges.size()));
    g.validate();
    return g;
}

ReductionArtifact vc_to_path(const SubcubicGraph& g) {
    g.validate();
    int n = g.n;
    int m = static_cast<int>(g.edges.size());

    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (int i = 1; i <= m; ++i) {
        const auto& e = g.edges[static_cast<std::size_t>(i - 1)];
        incident[static_cast<std::size_t>(e.u - 1)].push_back(i);
        incident[static_cast<std::size_t>(e.v - 1)].push_back(i);
    }

    // Colours in id order: B, E_1..E_m, S_1..S_n.
    std::vector<std::string> labels{"B"};
    for (int i = 1; i <= m; ++i) labels.push_back("E" + std::to_string(i));
    for (int j = 1; j <= n; ++j) labels.push_back("S" + std::to_string(j));
    std::vector<Colour> colours;
    std::map<std::string, Vertex> anchors;
    auto add = [&](Colour col, const std::string& anchor) {
        colours.push_back(col);
        anchors[anchor] = static_cast<Vertex>(colours.size());
    };
    constexpr Colour black = 1;
    auto edge_colour = [&](int j, std::size_t slot) -> Colour {
        const auto& inc = incident[static_cast<std::size_t>(j - 1)];
        return slot < inc.size() ? 1 + inc[slot] : black;
    };

    for (int k = 1; k <= 3; ++k) add(black, "V0." + std::to_string(k));
    for (int j = 1; j <= n; ++j) {
        auto block = "X" + std::to_string(j) + ".";
        add(edge_colour(j, 0), block + "1");
        add(black, block + "2");
        add(edge_colour(j, 1), block + "3");
        add(black, block + "4");
        add(black, block + "5");
        add(edge_colour(j, 2), block + "6");
        auto triple = "V" + std::to_string(j) + ".";
        add(black, triple + "1");
        add(1 + m + j, triple + "2");
        add(black, triple + "3");
    }

    std::vector<Edge> edges;
    for (Vertex v = 1; v < static_cast<Vertex>(colours.size()); ++v) edges.push_back(Edge{v, v + 1});
    std::vector<std::pair<Colour, std::string>> legend;
    for (std::size_t k = 0; k < labels.size(); ++k) legend.emplace_back(static_cast<Colour>(k + 1), labels[k]);
    return ReductionArtifact{ArtifactKind::VertexCover,
                             ColouredGraph::build(static_cast<int>(colours.size()), edges, colours),
                             std::move(legend), std::move(anchors), n};
}

VertexSet extract_vc(const ReductionArtifact& art, const VertexSet& sigma) {
    if (art.kind != ArtifactKind::VertexCover || art.path.order() != 9 * art.source_vertices + 3)
        fail(ErrorCode::WrongArtifact, "artifact was not produced by vc_to_path");
    const auto& path = art.path;
    to_bits(path, sigma);
    if (!is_dominating(path, sigma) || !is_tropical(path, sigma))
        fail(ErrorCode::NotTropicalDominating, "sigma is not a tropical dominating set of the path");

    int n = art.source_vertices;
    std::vector<char> in(static_cast<std::size_t>(path.order() + 2), 0);
    for (auto v : sigma) in[static_cast<std::size_t>(v)] = 1;

    // Outer vertices of each triple move inward to the adjacent block; the
    // middle of V_0 stands in for the black colour.
    for (int j = 0; j <= n; ++j) {
        int first = triple_first(j);
        if (in[static_cast<std::size_t>(first)]) {
            in[static_cast<std::size_t>(first)] = 0;
            if (j > 0) in[static_cast<std::size_t>(first - 1)] = 1;
        }
        if (in[static_cast<std::size_t>(first + 2)]) {
            in[static_cast<std::size_t>(first + 2)] = 0;
            if (j < n) in[static_cast<std::size_t>(first + 3)] = 1;
        }
    }
    in[2] = 1;

    VertexSet cover;
    for (int j = 1; j <= n; ++j) {
        int x1 = block_first(j);
        int picked = 0;
        for (int k = 0; k < 6; ++k) picked += in[static_cast<std::size_t>(x1 + k)];
        if (picked < 2) throw std::logic_error("normalised set leaves block " + std::to_string(j) + " undominated");
        if (picked == 2) {
            if (!in[static_cast<std::size_t>(x1 + 1)] || !in[static_cast<std::size_t>(x1 + 4)])
                throw std::logic_error("two picks in block " + std::to_string(j) + " are not the black pair");
            continue;
        }
        cover.insert(j);
    }
    return cover;
}

}  // namespace tropidom
