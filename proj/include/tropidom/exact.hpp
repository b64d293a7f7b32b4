#pragma once

#include <cstdint>
#include <optional>

#include "tropidom/graph.hpp"

namespace tropidom {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

// Node budget from TROPIDOM_BUDGET when set and valid, else the default.
std::uint64_t budget_from_environment();

enum class SolveKind { Domination, TropicalDomination };

struct SolveResult {
    SolveKind kind = SolveKind::Domination;
    int value = 0;
    VertexSet witness;
    std::uint64_t explored = 0;
};

struct SearchOptions {
    std::uint64_t node_budget = default_node_budget;
};

// Minimum dominating set (colours ignored). Iterative deepening on the
// solution size, branching over the closed neighbourhood of the lowest
// undominated vertex; a greedy cover seeds the upper bound.
SolveResult gamma(const ColouredGraph& g, SearchOptions opts = {});

// Minimum tropical dominating set.
SolveResult gamma_t(const ColouredGraph& g, SearchOptions opts = {});

struct RainbowResult {
    bool exists = false;
    std::optional<VertexSet> witness;
    std::uint64_t explored = 0;
};

// Decides whether some set with exactly one vertex per colour dominates g.
RainbowResult rainbow_exists(const ColouredGraph& g, SearchOptions opts = {});

struct RainbowCount {
    std::uint64_t count = 0;
    std::uint64_t explored = 0;
};

// Number of rainbow dominating sets.
RainbowCount count_rainbow_ds(const ColouredGraph& g, SearchOptions opts = {});

}  // namespace tropidom
