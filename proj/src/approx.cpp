#include "tropidom/approx.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tropidom/error.hpp"

namespace tropidom {

double harmonic(int k) {
    double h = 0.0;
    for (int i = k; i >= 1; --i) h += 1.0 / i;
    return h;
}

namespace {

int generic_lower_bound(const ColouredGraph& g) {
    int max_cover = degree_profile(g).big_delta + 1;
    return std::max(g.colour_count(), (g.order() + max_cover - 1) / max_cover);
}

}  // namespace

ApproxResult greedy_setcover_tds(const ColouredGraph& g) {
    auto n = static_cast<std::size_t>(g.order());
    Bits covered(n);
    std::vector<char> colour_covered(static_cast<std::size_t>(g.colour_count()), 0);
    std::size_t colours_left = colour_covered.size();

    ApproxResult out;
    while (!covered.all() || colours_left > 0) {
        std::size_t best = n, best_gain = 0;
        for (std::size_t v = 0; v < n; ++v) {
            auto gain = g.closed_row(v).count_outside(covered);
            if (!colour_covered[static_cast<std::size_t>(g.colours()[v] - 1)]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        covered |= g.closed_row(best);
        auto& flag = colour_covered[static_cast<std::size_t>(g.colours()[best] - 1)];
        if (!flag) {
            flag = 1;
            --colours_left;
        }
        out.witness.insert(static_cast<Vertex>(best + 1));
    }
    out.size = static_cast<int>(out.witness.size());
    out.lower_bound = generic_lower_bound(g);
    out.ratio_bound = harmonic(degree_profile(g).big_delta + 2);
    return out;
}

ApproxResult mds_plus_colours(const ColouredGraph& g, const VertexSet& ds, double ds_ratio) {
    if (!is_dominating(g, ds)) fail(ErrorCode::NotDominating, "input set does not dominate the graph");
    std::vector<char> present(static_cast<std::size_t>(g.colour_count()), 0);
    for (auto v : ds) present[static_cast<std::size_t>(g.colour(v) - 1)] = 1;

    ApproxResult out;
    out.witness = ds;
    for (Colour k = 1; k <= g.colour_count(); ++k)
        if (!present[static_cast<std::size_t>(k - 1)]) out.witness.insert(g.colour_class(k).front());
    out.size = static_cast<int>(out.witness.size());
    out.lower_bound = generic_lower_bound(g);
    out.ratio_bound = ds_ratio + 1.0;
    return out;
}

int path_lower_bound(const ColouredGraph& g) {
    if (!is_path(g)) fail(ErrorCode::NotAPath, "graph is not a simple path");
    int n = g.order(), c = g.colour_count();
    return std::max({(n + 2) / 3, c, (n + 2 * c + 4) / 5});
}

PathApproxDetail path_five_thirds_detail(const ColouredGraph& g) {
    auto order = path_order(g);
    int n = g.order(), c = g.colour_count();
    auto at = [&](int pos) { return order[static_cast<std::size_t>(pos - 1)]; };

    // Representative of each colour: the earliest vertex along the path.
    std::vector<int> first_pos(static_cast<std::size_t>(c), 0);
    for (int pos = n; pos >= 1; --pos) first_pos[static_cast<std::size_t>(g.colour(at(pos)) - 1)] = pos;

    PathApproxDetail detail;
    int best_size = n + c + 1;
    for (int residue = 1; residue <= 3; ++residue) {
        std::vector<int> sigma;
        for (int pos = residue; pos <= n; pos += 3) sigma.push_back(pos);
        auto in_sigma = [&](int pos) { return pos >= 1 && pos <= n && (pos - residue) % 3 == 0 && pos >= residue; };

        bool need_first = !(in_sigma(1) || in_sigma(2));
        bool need_last = !(in_sigma(n) || in_sigma(n - 1));
        std::vector<int> first_options{0}, last_options{0};
        if (need_first) {
            first_options = {1};
            if (n >= 2) first_options.push_back(2);
        }
        if (need_last) {
            last_options = {n};
            if (n >= 2) last_options.push_back(n - 1);
        }

        // Among the endpoint repairs, keep the one whose colour completion is
        // smallest; a repair vertex of a missing colour costs nothing extra.
        std::vector<int> best_set;
        for (int fp : first_options)
            for (int lp : last_options) {
                std::vector<int> positions = sigma;
                if (fp) positions.push_back(fp);
                if (lp) positions.push_back(lp);
                std::sort(positions.begin(), positions.end());
                positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
                std::vector<char> present(static_cast<std::size_t>(c), 0);
                for (int pos : positions) present[static_cast<std::size_t>(g.colour(at(pos)) - 1)] = 1;
                for (int k = 0; k < c; ++k)
                    if (!present[static_cast<std::size_t>(k)]) positions.push_back(first_pos[static_cast<std::size_t>(k)]);
                if (best_set.empty() || positions.size() < best_set.size()) best_set = std::move(positions);
            }

        VertexSet s;
        for (int pos : best_set) s.insert(at(pos));
        if (!is_dominating(g, s) || !is_tropical(g, s))
            throw std::logic_error("path repair produced an invalid set for residue " + std::to_string(residue));
        int size = static_cast<int>(s.size());
        detail.candidate_sizes[residue - 1] = size;
        if (size < best_size) {
            best_size = size;
            detail.chosen = residue;
            detail.result.witness = std::move(s);
        }
    }
    detail.result.size = best_size;
    detail.result.lower_bound = path_lower_bound(g);
    detail.result.ratio_bound = 5.0 / 3.0;
    return detail;
}

ApproxResult path_five_thirds(const ColouredGraph& g) { return path_five_thirds_detail(g).result; }

}  // namespace tropidom
