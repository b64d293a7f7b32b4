#pragma once

#include "tropidom/graph.hpp"

namespace tropidom {

struct ApproxResult {
    VertexSet witness;
    int size = 0;
    int lower_bound = 0;       // certified lower bound on the tropical domination number
    double ratio_bound = 1.0;  // a-priori guarantee on size / optimum
};

// H(k) = 1 + 1/2 + ... + 1/k.
double harmonic(int k);

// Classical greedy set cover over U = V ∪ C with one set N[v] ∪ {c(v)} per
// vertex. Ties go to the smallest vertex id.
ApproxResult greedy_setcover_tds(const ColouredGraph& g);

// Extends a dominating set with the lowest-id vertex of each missing colour.
// `ds_ratio` is the known approximation factor of `ds` for the uncoloured
// domination number (1 when `ds` is minimum); the result is then within
// ds_ratio + 1 of optimal.
ApproxResult mds_plus_colours(const ColouredGraph& g, const VertexSet& ds, double ds_ratio = 1.0);

// max(ceil(n/3), c, ceil((n+2c)/5)) for a coloured path.
int path_lower_bound(const ColouredGraph& g);

struct PathApproxDetail {
    ApproxResult result;
    int candidate_sizes[3] = {0, 0, 0};  // |S_1|, |S_2|, |S_3|
    int chosen = 0;                      // residue class (1..3) of the returned set
};

// Residue-class covering of a path: S_i = {v_j : j ≡ i mod 3} completed with
// one vertex per missing colour, using the endpoint repairs so that every S_i
// dominates. Returns the smallest S_i.
PathApproxDetail path_five_thirds_detail(const ColouredGraph& g);
ApproxResult path_five_thirds(const ColouredGraph& g);

}  // namespace tropidom
