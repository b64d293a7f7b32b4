#include "tropidom/exact.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>

#include "tropidom/error.hpp"

namespace tropidom {

std::uint64_t budget_from_environment() {
    const char* raw = std::getenv("TROPIDOM_BUDGET");
    if (!raw || !*raw) return default_node_budget;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
    if (ec != std::errc{} || *ptr != '\0' || value == 0) return default_node_budget;
    return value;
}

namespace {

[[noreturn]] void budget_exceeded(std::uint64_t budget) {
    fail(ErrorCode::BudgetExceeded, "search node budget of " + std::to_string(budget) + " exhausted");
}

// Greedy cover of V (and of the colour set, when tropical). Provides the
// initial incumbent for iterative deepening.
VertexSet greedy_incumbent(const ColouredGraph& g, bool tropical) {
    auto n = static_cast<std::size_t>(g.order());
    Bits dominated(n);
    std::vector<char> colour_seen(static_cast<std::size_t>(g.colour_count()), 0);
    int colours_left = tropical ? g.colour_count() : 0;
    VertexSet chosen;
    while (!dominated.all() || colours_left > 0) {
        std::size_t best = n, best_gain = 0;
        for (std::size_t w = 0; w < n; ++w) {
            auto gain = g.closed_row(w).count_outside(dominated);
            if (tropical && !colour_seen[static_cast<std::size_t>(g.colours()[w] - 1)]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = w;
            }
        }
        dominated |= g.closed_row(best);
        auto& seen = colour_seen[static_cast<std::size_t>(g.colours()[best] - 1)];
        if (tropical && !seen) --colours_left;
        seen = 1;
        chosen.insert(static_cast<Vertex>(best + 1));
    }
    return chosen;
}

class DominationSearch {
public:
    DominationSearch(const ColouredGraph& g, bool tropical, std::uint64_t budget)
        : g_(g),
          tropical_(tropical),
          budget_(budget),
          n_(static_cast<std::size_t>(g.order())),
          colour_uses_(static_cast<std::size_t>(g.colour_count()), 0) {}

    std::uint64_t explored() const noexcept { return nodes_; }

    // Looks for a solution of size at most k; fills `found` on success.
    bool run(int k, VertexSet& found) {
        Bits dominated(n_);
        chosen_.clear();
        std::fill(colour_uses_.begin(), colour_uses_.end(), 0);
        colours_present_ = 0;
        if (!dfs(dominated, k)) return false;
        found = VertexSet{};
        for (auto i : chosen_) found.insert(static_cast<Vertex>(i + 1));
        if (tropical_)
            for (Colour col = 1; col <= g_.colour_count(); ++col)
                if (!colour_uses_[static_cast<std::size_t>(col - 1)]) found.insert(g_.colour_class(col).front());
        return true;
    }

private:
    int missing_colours() const noexcept { return tropical_ ? g_.colour_count() - colours_present_ : 0; }

    // Fewest further picks that could dominate the rest, from the largest
    // per-vertex gains.
    int domination_lower_bound(const Bits& dominated) {
        auto undominated = n_ - dominated.count();
        gains_.clear();
        for (std::size_t w = 0; w < n_; ++w) {
            auto gain = g_.closed_row(w).count_outside(dominated);
            if (gain) gains_.push_back(gain);
        }
        std::sort(gains_.begin(), gains_.end(), std::greater<>());
        std::size_t covered = 0;
        int picks = 0;
        for (auto gain : gains_) {
            if (covered >= undominated) break;
            covered += gain;
            ++picks;
        }
        return picks;
    }

    bool dfs(const Bits& dominated, int left) {
        if (++nodes_ > budget_) budget_exceeded(budget_);
        auto u = dominated.first_clear();
        int missing = missing_colours();
        if (u == n_) return missing <= left;
        if (left <= 0 || missing > left) return false;
        if (std::max(domination_lower_bound(dominated), missing) > left) return false;

        const auto& row = g_.closed_row(u);
        for (auto w = row.first(); w < n_; w = row.next(w)) {
            auto col = static_cast<std::size_t>(g_.colours()[w] - 1);
            bool new_colour = colour_uses_[col] == 0;
            // With exactly `missing` picks left, each one must bring a new colour.
            if (tropical_ && missing == left && !new_colour) continue;
            chosen_.push_back(w);
            if (colour_uses_[col]++ == 0) ++colours_present_;
            bool ok = dfs(dominated | g_.closed_row(w), left - 1);
            if (ok) return true;
            if (--colour_uses_[col] == 0) --colours_present_;
            chosen_.pop_back();
        }
        return false;
    }

    const ColouredGraph& g_;
    bool tropical_;
    std::uint64_t budget_;
    std::size_t n_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> chosen_;
    std::vector<int> colour_uses_;
    int colours_present_ = 0;
    std::vector<std::size_t> gains_;
};

SolveResult solve_domination(const ColouredGraph& g, bool tropical, SearchOptions opts) {
    SolveResult result;
    result.kind = tropical ? SolveKind::TropicalDomination : SolveKind::Domination;
    auto incumbent = greedy_incumbent(g, tropical);
    int upper = static_cast<int>(incumbent.size());
    int max_cover = degree_profile(g).big_delta + 1;
    int lower = (g.order() + max_cover - 1) / max_cover;
    if (tropical) lower = std::max(lower, g.colour_count());

    DominationSearch search(g, tropical, opts.node_budget);
    for (int k = lower; k < upper; ++k) {
        VertexSet found;
        if (search.run(k, found)) {
            result.value = static_cast<int>(found.size());
            result.witness = std::move(found);
            result.explored = search.explored();
            return result;
        }
    }
    result.value = upper;
    result.witness = std::move(incumbent);
    result.explored = search.explored();
    return result;
}

// Colour classes in search order (smallest first) with the union of closed
// neighbourhoods reachable from each suffix of that order.
// Branches on the undominated vertex with the fewest candidates, where a
// candidate is a closed neighbour whose colour is still free and which was
// not ruled out by an earlier sibling branch. Excluding earlier siblings makes
// the branches disjoint, so counting needs no deduplication: once everything
// is dominated, each free colour contributes its non-excluded class size.
class RainbowSearch {
public:
    RainbowSearch(const ColouredGraph& g, std::uint64_t budget, bool count_all)
        : g_(g),
          budget_(budget),
          count_all_(count_all),
          used_(static_cast<std::size_t>(g.colour_count()) + 1, 0),
          excluded_(static_cast<std::size_t>(g.order()) + 1, 0) {}

    bool run() {
        Bits dominated(static_cast<std::size_t>(g_.order()));
        return dfs(dominated);
    }

    std::uint64_t explored() const noexcept { return nodes_; }
    std::uint64_t count() const noexcept { return count_; }
    VertexSet witness() const { return VertexSet(witness_); }

private:
    bool candidate(Vertex v) const {
        return !excluded_[static_cast<std::size_t>(v)] && !used_[static_cast<std::size_t>(g_.colour(v))];
    }

    bool dfs(const Bits& dominated) {
        if (++nodes_ > budget_) budget_exceeded(budget_);
        Vertex best = 0;
        std::size_t best_count = 0;
        for (Vertex u = 1; u <= g_.order(); ++u) {
            if (dominated.test(static_cast<std::size_t>(u - 1))) continue;
            std::size_t k = candidate(u) ? 1 : 0;
            for (auto w : g_.neighbours(u)) k += candidate(w) ? 1 : 0;
            if (k == 0) return false;
            if (best == 0 || k < best_count) {
                best = u;
                best_count = k;
                if (k == 1) break;
            }
        }
        if (best == 0) return complete();

        std::vector<Vertex> options;
        if (candidate(best)) options.push_back(best);
        for (auto w : g_.neighbours(best))
            if (candidate(w)) options.push_back(w);
        std::size_t tried = 0;
        bool found = false;
        for (auto v : options) {
            auto col = static_cast<std::size_t>(g_.colour(v));
            used_[col] = 1;
            picked_.push_back(v);
            found = dfs(dominated | g_.closed_row(static_cast<std::size_t>(v - 1)));
            picked_.pop_back();
            used_[col] = 0;
            if (found) break;
            excluded_[static_cast<std::size_t>(v)] = 1;
            ++tried;
        }
        for (std::size_t i = 0; i < tried; ++i) excluded_[static_cast<std::size_t>(options[i])] = 0;
        return found;
    }

    // Every vertex is dominated; free colours take any non-excluded vertex.
    bool complete() {
        std::uint64_t ways = 1;
        std::vector<Vertex> fill;
        for (Colour col = 1; col <= g_.colour_count(); ++col) {
            if (used_[static_cast<std::size_t>(col)]) continue;
            std::uint64_t k = 0;
            for (auto v : g_.colour_class(col))
                if (!excluded_[static_cast<std::size_t>(v)]) {
                    if (k == 0) fill.push_back(v);
                    ++k;
                }
            ways *= k;
            if (ways == 0) return false;
        }
        count_ += ways;
        if (witness_.empty()) {
            witness_ = picked_;
            witness_.insert(witness_.end(), fill.begin(), fill.end());
        }
        return !count_all_;
    }

    const ColouredGraph& g_;
    std::uint64_t budget_;
    bool count_all_;
    std::vector<char> used_;
    std::vector<char> excluded_;
    std::uint64_t nodes_ = 0;
    std::uint64_t count_ = 0;
    std::vector<Vertex> picked_;
    std::vector<Vertex> witness_;
};

}  // namespace

SolveResult gamma(const ColouredGraph& g, SearchOptions opts) { return solve_domination(g, false, opts); }

SolveResult gamma_t(const ColouredGraph& g, SearchOptions opts) { return solve_domination(g, true, opts); }

RainbowResult rainbow_exists(const ColouredGraph& g, SearchOptions opts) {
    RainbowSearch search(g, opts.node_budget, false);
    RainbowResult result;
    result.exists = search.run();
    if (result.exists) result.witness = search.witness();
    result.explored = search.explored();
    return result;
}

RainbowCount count_rainbow_ds(const ColouredGraph& g, SearchOptions opts) {
    RainbowSearch search(g, opts.node_budget, true);
    search.run();
    return RainbowCount{search.count(), search.explored()};
}

}  // namespace tropidom
