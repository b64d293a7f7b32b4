#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "tropidom/bits.hpp"

namespace tropidom {

// Vertices are identified 1..n on every public interface.
using Vertex = int;
using Colour = int;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of 1-based vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
    explicit VertexSet(std::vector<Vertex> ids);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const noexcept;
    void insert(Vertex v);
    void erase(Vertex v);

    const std::vector<Vertex>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

struct DegreeProfile {
    int delta = 0;
    int big_delta = 0;
    std::vector<int> degree;  // degree[v - 1]
};

// Immutable vertex-coloured simple graph. Colours are 1..c and every colour
// is carried by at least one vertex.
class ColouredGraph {
public:
    // Validates and builds. Edge endpoints and colours are 1-based.
    static ColouredGraph build(int n, std::span<const Edge> edges, std::span<const Colour> colours);
    static ColouredGraph build(int n, std::initializer_list<Edge> edges,
                               std::initializer_list<Colour> colours) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()),
                     std::span<const Colour>(colours.begin(), colours.size()));
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    int colour_count() const noexcept { return c_; }

    Colour colour(Vertex v) const { return colours_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<Colour>& colours() const noexcept { return colours_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbours(Vertex v) const {
        return adjacency_[static_cast<std::size_t>(v - 1)];
    }
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    // Closed neighbourhood of vertex index i (0-based) as a bit row.
    const Bits& closed_row(std::size_t i) const noexcept { return closed_rows_[i]; }
    // Vertices (1-based) of colour k, ascending.
    const std::vector<Vertex>& colour_class(Colour k) const {
        return classes_[static_cast<std::size_t>(k - 1)];
    }

    bool is_connected() const;

private:
    ColouredGraph() = default;

    int n_ = 0;
    int c_ = 0;
    std::vector<Edge> edges_;
    std::vector<Colour> colours_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Bits> closed_rows_;
    std::vector<std::vector<Vertex>> classes_;
};

// Bit row of the vertices in `s` (0-based indices).
Bits to_bits(const ColouredGraph& g, const VertexSet& s);

bool is_dominating(const ColouredGraph& g, const VertexSet& s);
bool is_tropical(const ColouredGraph& g, const VertexSet& s);
bool is_rainbow(const ColouredGraph& g, const VertexSet& s);
DegreeProfile degree_profile(const ColouredGraph& g);

// Vertex sequence of a path graph, starting from the lower-numbered
// endpoint; throws NotAPath otherwise. A single vertex is a path.
std::vector<Vertex> path_order(const ColouredGraph& g);
bool is_path(const ColouredGraph& g);

}  // namespace tropidom
