#include "tropidom/tropidom.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "tropidom/approx.hpp"
#include "tropidom/error.hpp"
#include "tropidom/exact.hpp"
#include "tropidom/forge.hpp"
#include "tropidom/instance_io.hpp"
#include "tropidom/interval.hpp"
#include "tropidom/problab.hpp"

struct tropidom_graph {
    tropidom::Instance instance;
    std::optional<tropidom::ReductionArtifact> artifact;
};

struct tropidom_result {
    int algorithm = 0;
    int value = 0;
    bool has_witness = false;
    tropidom::VertexSet witness;
    int lower_bound = 0;
    double ratio_bound = 1.0;
    std::uint64_t explored = 0;
};

namespace {

using namespace tropidom;

thread_local std::string last_error;

constexpr int status_of(ErrorCode code) { return static_cast<int>(code) + 1; }
static_assert(status_of(ErrorCode::Io) == TROPIDOM_E_IO, "status codes must follow ErrorCode");

template <class F>
int guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return TROPIDOM_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return TROPIDOM_E_INTERNAL;
    } catch (...) {
        last_error = "internal error";
        return TROPIDOM_E_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidArgument, what);
}

char* duplicate(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tropidom_graph* wrap(ColouredGraph g) { return new tropidom_graph{Instance{std::move(g), std::nullopt, {}}, std::nullopt}; }

tropidom_graph* wrap(ReductionArtifact art) {
    auto inst = art.to_instance();
    return new tropidom_graph{std::move(inst), std::move(art)};
}

std::uint64_t pick_budget(std::uint64_t budget) { return budget ? budget : budget_from_environment(); }

VertexSet to_set(const int* vertices, std::size_t k) {
    require(vertices || k == 0, "vertex array is null");
    return VertexSet(std::vector<Vertex>(vertices, vertices + k));
}

void check_members(const ColouredGraph& g, const VertexSet& s) {
    for (auto v : s)
        if (v < 1 || v > g.order())
            fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
}

}  // namespace

extern "C" {

const char* tropidom_version(void) { return "1.0.0"; }

const char* tropidom_status_name(int status) {
    if (status == TROPIDOM_OK) return "Ok";
    if (status == TROPIDOM_E_INTERNAL) return "Internal";
    if (status > 0 && status < TROPIDOM_E_INTERNAL) return to_string(static_cast<ErrorCode>(status - 1));
    return "Unknown";
}

const char* tropidom_last_error(void) { return last_error.c_str(); }

void tropidom_string_free(char* s) { std::free(s); }

int tropidom_graph_create(int n, const int* edges, size_t m, const int* colours, tropidom_graph** out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        require(edges || m == 0, "edge array is null");
        require(colours || n <= 0, "colour array is null");
        std::vector<Edge> list;
        for (std::size_t i = 0; i < m; ++i) list.push_back(Edge{edges[2 * i], edges[2 * i + 1]});
        std::span<const Colour> cs(colours, n > 0 ? static_cast<std::size_t>(n) : 0);
        *out = wrap(ColouredGraph::build(n, list, cs));
    });
}

int tropidom_graph_parse(const char* text, tropidom_graph** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new tropidom_graph{parse_instance(text), std::nullopt};
    });
}

int tropidom_graph_load(const char* path, tropidom_graph** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new tropidom_graph{load_instance(path), std::nullopt};
    });
}

int tropidom_graph_save(const tropidom_graph* g, const char* path) {
    return guarded([&] {
        require(g && path, "null argument");
        save_instance(g->instance, path);
    });
}

int tropidom_graph_to_text(const tropidom_graph* g, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = duplicate(format_instance(g->instance));
    });
}

int tropidom_graph_info_get(const tropidom_graph* g, tropidom_graph_info* out) {
    return guarded([&] {
        require(g && out, "null argument");
        const auto& graph = g->instance.graph;
        auto profile = degree_profile(graph);
        out->n = graph.order();
        out->m = graph.size();
        out->c = graph.colour_count();
        out->min_degree = profile.delta;
        out->max_degree = profile.big_delta;
        out->connected = graph.is_connected() ? 1 : 0;
        out->has_intervals = g->instance.intervals ? 1 : 0;
        out->is_reduction = g->artifact ? 1 : 0;
    });
}

int tropidom_graph_colours(const tropidom_graph* g, int* out, size_t cap) {
    return guarded([&] {
        require(g && (out || cap == 0), "null argument");
        const auto& cs = g->instance.graph.colours();
        for (std::size_t i = 0; i < cs.size() && i < cap; ++i) out[i] = cs[i];
    });
}

void tropidom_graph_free(tropidom_graph* g) { delete g; }

int tropidom_check_set(const tropidom_graph* g, const int* vertices, size_t k, int* dominating, int* tropical,
                       int* rainbow) {
    return guarded([&] {
        require(g != nullptr, "graph handle is null");
        auto s = to_set(vertices, k);
        const auto& graph = g->instance.graph;
        check_members(graph, s);
        if (dominating) *dominating = is_dominating(graph, s) ? 1 : 0;
        if (tropical) *tropical = is_tropical(graph, s) ? 1 : 0;
        if (rainbow) *rainbow = is_rainbow(graph, s) ? 1 : 0;
    });
}

int tropidom_solve(const tropidom_graph* g, int algorithm, uint64_t budget, tropidom_result** out) {
    return guarded([&] {
        require(g && out, "null argument");
        const auto& graph = g->instance.graph;
        SearchOptions opts{pick_budget(budget)};
        auto r = std::make_unique<tropidom_result>();
        r->algorithm = algorithm;
        auto take_exact = [&](const SolveResult& s) {
            r->value = s.value;
            r->has_witness = true;
            r->witness = s.witness;
            r->lower_bound = s.value;
            r->explored = s.explored;
        };
        auto take_approx = [&](const ApproxResult& a) {
            r->value = a.size;
            r->has_witness = true;
            r->witness = a.witness;
            r->lower_bound = a.lower_bound;
            r->ratio_bound = a.ratio_bound;
        };
        switch (algorithm) {
            case TROPIDOM_ALGO_EXACT: take_exact(gamma_t(graph, opts)); break;
            case TROPIDOM_ALGO_EXACT_GAMMA: take_exact(gamma(graph, opts)); break;
            case TROPIDOM_ALGO_INTERVAL: take_exact(tdn_interval(g->instance)); break;
            case TROPIDOM_ALGO_GREEDY: take_approx(greedy_setcover_tds(graph)); break;
            case TROPIDOM_ALGO_PATH53: take_approx(path_five_thirds(graph)); break;
            case TROPIDOM_ALGO_EXACT_RAINBOW: {
                auto rb = rainbow_exists(graph, opts);
                r->value = rb.exists ? 1 : 0;
                r->lower_bound = r->value;
                r->has_witness = rb.witness.has_value();
                if (rb.witness) r->witness = *rb.witness;
                r->explored = rb.explored;
                break;
            }
            default: fail(ErrorCode::InvalidArgument, "unknown algorithm " + std::to_string(algorithm));
        }
        *out = r.release();
    });
}

int tropidom_result_info_get(const tropidom_result* r, tropidom_result_info* out) {
    return guarded([&] {
        require(r && out, "null argument");
        out->algorithm = r->algorithm;
        out->value = r->value;
        out->has_witness = r->has_witness ? 1 : 0;
        out->witness_size = r->witness.size();
        out->lower_bound = r->lower_bound;
        out->ratio_bound = r->ratio_bound;
        out->explored = r->explored;
    });
}

int tropidom_result_witness(const tropidom_result* r, int* out, size_t cap) {
    return guarded([&] {
        require(r && (out || cap == 0), "null argument");
        std::size_t i = 0;
        for (auto v : r->witness) {
            if (i == cap) break;
            out[i++] = v;
        }
    });
}

void tropidom_result_free(tropidom_result* r) { delete r; }

int tropidom_gen_gnpc(int n, double p, int c, uint64_t seed, tropidom_graph** out, int* colour_resamples) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        auto gen = gen_gnpc(n, p, c, seed);
        if (colour_resamples) *colour_resamples = gen.colour_resamples;
        *out = wrap(std::move(gen.graph));
    });
}

int tropidom_gen_extremal_gamma(int gamma_target, int c, tropidom_graph** out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = wrap(extremal_gamma_plus(gamma_target, c));
    });
}

int tropidom_gen_extremal_edges(int n, int k, int c, tropidom_graph** out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = wrap(extremal_edge_bound(n, k, c));
    });
}

int tropidom_gen_sat(const char* dimacs_cnf, tropidom_graph** out) {
    return guarded([&] {
        require(dimacs_cnf && out, "null argument");
        *out = wrap(sat_to_path(parse_dimacs_cnf(dimacs_cnf)));
    });
}

int tropidom_gen_vc(const char* dimacs_graph, tropidom_graph** out) {
    return guarded([&] {
        require(dimacs_graph && out, "null argument");
        *out = wrap(vc_to_path(parse_dimacs_graph(dimacs_graph)));
    });
}

int tropidom_gen_pad(const tropidom_graph* path, double epsilon, tropidom_graph** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = wrap(pad_colours(path->instance.graph, epsilon));
    });
}

int tropidom_graph_anchor(const tropidom_graph* g, const char* name, int* vertex) {
    return guarded([&] {
        require(g && name && vertex, "null argument");
        if (!g->artifact) fail(ErrorCode::WrongArtifact, "graph is not a reduction artifact");
        auto it = g->artifact->anchors.find(name);
        if (it == g->artifact->anchors.end()) fail(ErrorCode::InvalidArgument, std::string("no anchor named ") + name);
        *vertex = it->second;
    });
}

int tropidom_extract_vc(const tropidom_graph* g, const int* sigma, size_t k, int* cover, size_t cap,
                        size_t* cover_size) {
    return guarded([&] {
        require(g && (cover || cap == 0), "null argument");
        if (!g->artifact) fail(ErrorCode::WrongArtifact, "graph is not a reduction artifact");
        auto vc = extract_vc(*g->artifact, to_set(sigma, k));
        if (cover_size) *cover_size = vc.size();
        std::size_t i = 0;
        for (auto v : vc) {
            if (i == cap) break;
            cover[i++] = v;
        }
    });
}

int tropidom_expected_rainbow_count(int n, double p, int c, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = static_cast<double>(expected_rainbow_count(RandomModel{n, p, c, 0}));
    });
}

int tropidom_threshold_colours(int n, double p, int* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = threshold_colours(n, p);
    });
}

int tropidom_concentration_window(int n, double p, int* lower, int* upper) {
    return guarded([&] {
        require(lower && upper, "null argument");
        auto w = concentration_window(n, p);
        *lower = w.first;
        *upper = w.second;
    });
}

int tropidom_experiment(const char* kind, int n, double p, int c, const tropidom_experiment_options* opts, char** json,
                        char** csv) {
    return guarded([&] {
        require(kind && opts && json, "null argument");
        ExperimentOptions eo;
        eo.node_budget = pick_budget(opts->budget);
        eo.jobs = opts->jobs ? opts->jobs : 1;
        eo.count_rainbow = opts->count_rainbow != 0;
        eo.timing = opts->timing != 0;
        std::string k = kind;
        std::optional<ExperimentReport> report;
        if (k == "threshold")
            report = run_threshold_experiment(RandomModel{n, p, c, opts->seed}, opts->trials, eo);
        else if (k == "expectation")
            report = run_expectation_experiment(RandomModel{n, p, c, opts->seed}, opts->trials, eo);
        else if (k == "concentration")
            report = run_concentration_experiment(n, p, opts->trials, opts->seed, eo);
        else
            fail(ErrorCode::InvalidArgument, "unknown experiment '" + k + "'");
        auto j = report_json(*report);
        auto c_text = csv ? report_csv(*report) : std::string();
        *json = duplicate(j);
        if (csv) *csv = duplicate(c_text);
    });
}

int tropidom_audit(const tropidom_graph* g, uint64_t budget, char** json, int* violations) {
    return guarded([&] {
        require(g && json, "null argument");
        const auto& graph = g->instance.graph;
        SearchOptions opts{pick_budget(budget)};
        auto gt = gamma_t(graph, opts).value;
        auto gm = gamma(graph, opts).value;
        auto report = audit_bounds(graph, gt, gm);
        if (violations) *violations = static_cast<int>(report.violations().size());
        *json = duplicate(bounds_json(report));
    });
}

int tropidom_conjecture_search(const tropidom_conjecture_options* opts, char** json, uint64_t* unexplained) {
    return guarded([&] {
        require(opts && json, "null argument");
        ConjectureConfig cfg;
        cfg.max_n = opts->max_n;
        cfg.max_c = opts->max_c;
        cfg.random_samples = opts->random_samples;
        cfg.random_max_n = opts->random_max_n;
        cfg.random_p = opts->random_p;
        cfg.seed = opts->seed;
        cfg.node_budget = pick_budget(opts->budget);
        auto report = search_conjecture(cfg);
        if (unexplained) *unexplained = report.unexplained;
        *json = duplicate(conjecture_json(report, cfg));
    });
}

}  // extern "C"
