#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropidom/graph.hpp"
#include "tropidom/instance_io.hpp"
#include "tropidom/random.hpp"

namespace tropidom {

// ---------------------------------------------------------------------------
// Random coloured graphs

// Raw G(n, p, c) sample: the colour vector may leave some colour unused.
struct RawColouredSample {
    int n = 0;
    int c = 0;
    std::vector<Edge> edges;
    std::vector<Colour> colours;

    bool all_colours_used() const;
};

// Edges first (pairs in lexicographic order), then iid uniform colours.
RawColouredSample sample_gnpc(int n, double p, int c, Rng& rng);

struct GeneratedGraph {
    ColouredGraph graph;
    int colour_resamples = 0;
};

// G(n, p, c) conditioned on every colour being used: when a colour class is
// empty only the colours are redrawn.
GeneratedGraph gen_gnpc(int n, double p, int c, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Extremal constructions

// Cycle C_{3γ} with c − 1 uniquely coloured leaves on vertex 1, all other
// vertices colour 1.
ColouredGraph extremal_gamma_plus(int gamma_target, int c);

// Clique on n − k + c − 1 vertices (vertices 1..c−1 uniquely coloured, the
// rest colour c) plus k − c + 1 vertices of colour c, each remaining clique
// vertex joined to exactly one of them round-robin.
ColouredGraph extremal_edge_bound(int n, int k, int c);

// ---------------------------------------------------------------------------
// Reductions

struct Literal {
    int variable = 0;  // 1-based
    bool positive = true;
    friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;  // exactly three literals each

    int tau() const { return static_cast<int>(clauses.size()); }
    int literal_count() const { return 3 * tau(); }
    // Literal l_i for i in 1..X, in clause order.
    const Literal& literal(int i) const {
        return clauses[static_cast<std::size_t>((i - 1) / 3)][static_cast<std::size_t>((i - 1) % 3)];
    }
    void validate() const;
};

// DIMACS CNF: `c` comments, `p cnf <vars> <clauses>`, clauses of exactly
// three non-zero literals terminated by 0.
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string format_dimacs_cnf(const CnfFormula& f);

// Simple graph of maximum degree three without isolated vertices.
struct SubcubicGraph {
    int n = 0;
    std::vector<Edge> edges;  // edge e_i is edges[i - 1]

    void validate() const;
};

// DIMACS edge format: `c` comments, `p edge <n> <m>`, `e <u> <v>` lines.
SubcubicGraph parse_dimacs_graph(std::string_view text);

enum class ArtifactKind { Sat, VertexCover };

// A coloured path produced by a reduction together with the meaning of its
// colours and the positions of named vertices. The path's vertex ids run
// 1..N along the path.
struct ReductionArtifact {
    ArtifactKind kind = ArtifactKind::Sat;
    ColouredGraph path;
    std::vector<std::pair<Colour, std::string>> legend;
    std::map<std::string, Vertex> anchors;
    int source_vertices = 0;  // n of the source graph (vertex cover only)

    Instance to_instance() const { return Instance{path, std::nullopt, legend}; }
};

// Path P0 = v v' v_0 .. v_{4τ}, one five-vertex gadget A,P,M,N,L for every
// ordered antithetic literal pair (lexicographic), then a final vertex F.
ReductionArtifact sat_to_path(const CnfFormula& f);

// Path of 9n + 3 vertices: V_0 = (B,B,B), then per source vertex a block
// (E_{j1},B,E_{j2},B,B,E_{j3}) followed by V_j = (B,S_j,B).
ReductionArtifact vc_to_path(const SubcubicGraph& g);

// Vertex cover read back from a tropical dominating set of a vc_to_path
// artifact after normalising it.
VertexSet extract_vc(const ReductionArtifact& art, const VertexSet& sigma);

// Appends a path of N = ceil((n+2)^{1/ε}) vertices whose second vertex gets
// a fresh colour and the rest another fresh colour.
ColouredGraph pad_colours(const ColouredGraph& path, double epsilon);
std::int64_t padding_length(int n, double epsilon);

}  // namespace tropidom
