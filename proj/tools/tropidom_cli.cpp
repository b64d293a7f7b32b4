// tropidom command-line front end. Talks to the library only through the C
// interface in tropidom.h.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropidom/tropidom.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_budget = 2;

struct Failure {
    int exit_code;
    std::string message;
};

void check(int status) {
    if (status == TROPIDOM_OK) return;
    std::string msg = std::string(tropidom_status_name(status)) + ": " + tropidom_last_error();
    throw Failure{status == TROPIDOM_E_BUDGET_EXCEEDED ? exit_budget : exit_input, msg};
}

struct GraphDeleter {
    void operator()(tropidom_graph* g) const { tropidom_graph_free(g); }
};
struct ResultDeleter {
    void operator()(tropidom_result* r) const { tropidom_result_free(r); }
};
struct StringDeleter {
    void operator()(char* s) const { tropidom_string_free(s); }
};
using GraphPtr = std::unique_ptr<tropidom_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<tropidom_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{exit_input, "Io: cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{exit_input, "Io: cannot write " + path};
}

GraphPtr load(const std::string& path) {
    tropidom_graph* g = nullptr;
    check(tropidom_graph_load(path.c_str(), &g));
    return GraphPtr(g);
}

tropidom_graph_info info_of(const tropidom_graph* g) {
    tropidom_graph_info info{};
    check(tropidom_graph_info_get(g, &info));
    return info;
}

json digest(const tropidom_graph* g) {
    auto info = info_of(g);
    return json{{"n", info.n},
                {"m", info.m},
                {"c", info.c},
                {"delta", info.min_degree},
                {"Delta", info.max_degree},
                {"connected", info.connected != 0}};
}

json parse_owned(char* text) {
    StringPtr owned(text);
    return json::parse(owned.get());
}

struct Context {
    std::vector<std::string> argv;
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    json report(const std::string& command) const {
        json j;
        j["command"] = command;
        j["argv"] = argv;
        return j;
    }

    void emit(json& j) const {
        if (timing)
            j["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << j.dump(2) << '\n';
    }
};

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
    std::string algo;
    std::string input;
    std::uint64_t budget = 0;
};

const std::vector<std::pair<std::string, int>> algorithms = {
    {"exact", TROPIDOM_ALGO_EXACT},   {"exact-rainbow", TROPIDOM_ALGO_EXACT_RAINBOW},
    {"greedy", TROPIDOM_ALGO_GREEDY}, {"path53", TROPIDOM_ALGO_PATH53},
    {"interval", TROPIDOM_ALGO_INTERVAL}, {"exact-gamma", TROPIDOM_ALGO_EXACT_GAMMA},
};

int run_solve(const Context& ctx, const SolveArgs& args) {
    int algo = -1;
    for (const auto& [name, id] : algorithms)
        if (name == args.algo) algo = id;
    auto g = load(args.input);

    tropidom_result* raw = nullptr;
    check(tropidom_solve(g.get(), algo, args.budget, &raw));
    ResultPtr r(raw);
    tropidom_result_info info{};
    check(tropidom_result_info_get(r.get(), &info));
    std::vector<int> witness(info.witness_size);
    check(tropidom_result_witness(r.get(), witness.data(), witness.size()));

    // Self-check gate: nothing leaves the tool without re-validation.
    int dominating = 0, tropical = 0, rainbow = 0;
    check(tropidom_check_set(g.get(), witness.data(), witness.size(), &dominating, &tropical, &rainbow));
    bool valid = algo == TROPIDOM_ALGO_EXACT_GAMMA     ? dominating
                 : algo == TROPIDOM_ALGO_EXACT_RAINBOW ? (!info.has_witness || (dominating && rainbow))
                                                       : (dominating && tropical);
    if (!valid) throw Failure{exit_input, "Internal: witness failed re-validation"};

    json result;
    result["algorithm"] = args.algo;
    if (algo == TROPIDOM_ALGO_EXACT_RAINBOW) {
        result["exists"] = info.value != 0;
        result["witness"] = info.has_witness ? json(witness) : json(nullptr);
    } else {
        result["value"] = info.value;
        result["witness"] = witness;
    }
    if (algo == TROPIDOM_ALGO_GREEDY || algo == TROPIDOM_ALGO_PATH53) {
        result["lower_bound"] = info.lower_bound;
        result["ratio_bound"] = info.ratio_bound;
    }
    result["explored"] = info.explored;
    result["validated"] = true;

    auto j = ctx.report("solve");
    j["seed"] = nullptr;
    j["instance"] = digest(g.get());
    j["result"] = result;
    ctx.emit(j);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
    std::string kind;
    int n = 0, c = 1, k = 0, gamma = 1;
    double p = 0.5, epsilon = 1.0;
    std::optional<std::uint64_t> seed;
    std::string out, cnf, graph, input;
};

int run_gen(const Context& ctx, const GenArgs& args) {
    tropidom_graph* raw = nullptr;
    json details = json::object();
    if (args.kind == "gnpc") {
        if (!args.seed) throw Failure{exit_input, "gen gnpc requires --seed"};
        int resamples = 0;
        check(tropidom_gen_gnpc(args.n, args.p, args.c, *args.seed, &raw, &resamples));
        details["colour_resamples"] = resamples;
    } else if (args.kind == "extremal-gamma") {
        check(tropidom_gen_extremal_gamma(args.gamma, args.c, &raw));
    } else if (args.kind == "extremal-edges") {
        check(tropidom_gen_extremal_edges(args.n, args.k, args.c, &raw));
    } else if (args.kind == "sat") {
        check(tropidom_gen_sat(read_file(args.cnf).c_str(), &raw));
    } else if (args.kind == "vc") {
        check(tropidom_gen_vc(read_file(args.graph).c_str(), &raw));
    } else if (args.kind == "pad") {
        auto path = load(args.input);
        check(tropidom_gen_pad(path.get(), args.epsilon, &raw));
    }
    GraphPtr g(raw);
    check(tropidom_graph_save(g.get(), args.out.c_str()));

    auto j = ctx.report("gen");
    j["generator"] = args.kind;
    j["seed"] = args.seed ? json(*args.seed) : json(nullptr);
    j["output"] = args.out;
    j["instance"] = digest(g.get());
    j["details"] = details;
    ctx.emit(j);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// audit

struct AuditArgs {
    std::string input;
    std::string corpus;
    std::uint64_t budget = 0;
};

json audit_one(const tropidom_graph* g, std::uint64_t budget, int& violations) {
    char* text = nullptr;
    check(tropidom_audit(g, budget, &text, &violations));
    return parse_owned(text);
}

int run_audit(const Context& ctx, const AuditArgs& args) {
    auto j = ctx.report("audit");
    j["seed"] = nullptr;
    if (!args.input.empty()) {
        auto g = load(args.input);
        int violations = 0;
        j["instance"] = digest(g.get());
        j["report"] = audit_one(g.get(), args.budget, violations);
        j["violation_count"] = violations;
    } else {
        namespace fs = std::filesystem;
        std::vector<fs::path> files;
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(args.corpus, ec))
            if (entry.is_regular_file() && entry.path().extension() == ".tdg") files.push_back(entry.path());
        if (ec) throw Failure{exit_input, "Io: cannot list " + args.corpus + ": " + ec.message()};
        std::sort(files.begin(), files.end());
        json rows = json::array();
        int total = 0;
        for (const auto& path : files) {
            auto g = load(path.string());
            int violations = 0;
            json row;
            row["file"] = path.filename().string();
            row["instance"] = digest(g.get());
            row["report"] = audit_one(g.get(), args.budget, violations);
            row["violation_count"] = violations;
            total += violations;
            rows.push_back(row);
        }
        j["corpus"] = args.corpus;
        j["files"] = rows;
        j["violation_count"] = total;
    }
    ctx.emit(j);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// experiment

struct ExperimentArgs {
    std::string kind;
    int n = 0;
    double p = 0.5;
    std::optional<int> c;
    std::uint64_t trials = 0;
    std::optional<std::uint64_t> seed;
    std::string csv;
    unsigned jobs = 1;
    std::uint64_t budget = 0;
    bool count = false;
    int max_n = 7, max_c = 3, sample_max_n = 10;
    std::uint64_t samples = 0;
};

int run_experiment(const Context& ctx, const ExperimentArgs& args) {
    if (!args.seed) throw Failure{exit_input, "experiment requires --seed"};
    auto j = ctx.report("experiment");
    j["experiment"] = args.kind;
    j["seed"] = *args.seed;

    if (args.kind == "conjecture") {
        tropidom_conjecture_options o{args.max_n, args.max_c, args.samples, args.sample_max_n, args.p, *args.seed,
                                      args.budget};
        char* text = nullptr;
        std::uint64_t unexplained = 0;
        check(tropidom_conjecture_search(&o, &text, &unexplained));
        j["report"] = parse_owned(text);
        ctx.emit(j);
        return exit_ok;
    }

    if (args.trials == 0) throw Failure{exit_input, "experiment requires --trials >= 1"};
    int c = 1;
    json closed;
    if (args.kind == "threshold") {
        int threshold = 0;
        check(tropidom_threshold_colours(args.n, args.p, &threshold));
        c = args.c.value_or(threshold);
        closed["threshold_colours"] = threshold;
    } else if (args.kind == "expectation") {
        if (!args.c) throw Failure{exit_input, "experiment expectation requires -c"};
        c = *args.c;
    } else {
        int lo = 0, hi = 0;
        check(tropidom_concentration_window(args.n, args.p, &lo, &hi));
        closed["window"] = {lo, hi};
    }
    if (args.kind != "concentration") {
        double expected = 0;
        check(tropidom_expected_rainbow_count(args.n, args.p, c, &expected));
        closed["expected_rainbow_count"] = expected;
    }

    tropidom_experiment_options o{args.trials, *args.seed, args.budget, args.jobs, args.count ? 1 : 0,
                                  ctx.timing ? 1 : 0};
    char* json_text = nullptr;
    char* csv_text = nullptr;
    check(tropidom_experiment(args.kind.c_str(), args.n, args.p, c, &o, &json_text,
                              args.csv.empty() ? nullptr : &csv_text));
    StringPtr csv_owned(csv_text);
    if (!args.csv.empty()) write_file(args.csv, csv_owned.get());
    j["closed_form"] = closed;
    j["report"] = parse_owned(json_text);
    if (!args.csv.empty()) j["csv"] = args.csv;
    ctx.emit(j);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical domination toolkit: solve, generate, audit and experiment"};
    app.require_subcommand(1);
    Context ctx;
    ctx.argv.assign(argv + 1, argv + argc);
    app.add_flag("--timing", ctx.timing, "Add wall-clock fields to reports (breaks byte-identical output)");

    std::vector<std::string> algo_names;
    for (const auto& a : algorithms) algo_names.push_back(a.first);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve an instance file");
    s->add_option("--algo", solve.algo, "Algorithm")->required()->check(CLI::IsMember(algo_names));
    s->add_option("--input", solve.input, "Instance file")->required();
    s->add_option("--budget", solve.budget, "Search node budget (default: TROPIDOM_BUDGET or 1e8)");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate an instance file");
    g->add_option("kind", gen.kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"gnpc", "extremal-gamma", "extremal-edges", "sat", "vc", "pad"}));
    g->add_option("-n", gen.n, "Vertices (gnpc, extremal-edges)");
    g->add_option("-p", gen.p, "Edge probability (gnpc)");
    g->add_option("-c", gen.c, "Colours");
    g->add_option("-k", gen.k, "Target tropical domination number (extremal-edges)");
    g->add_option("--gamma", gen.gamma, "Domination number of the cycle (extremal-gamma)");
    g->add_option("--seed", gen.seed, "Random seed (required for gnpc)");
    g->add_option("--cnf", gen.cnf, "DIMACS CNF file (sat)");
    g->add_option("--graph", gen.graph, "DIMACS edge file (vc)");
    g->add_option("--input", gen.input, "Coloured path to pad (pad)");
    g->add_option("--epsilon", gen.epsilon, "Padding exponent 0 < e <= 1 (pad)");
    g->add_option("--out", gen.out, "Output instance file")->required();

    AuditArgs audit;
    auto* a = app.add_subcommand("audit", "Evaluate the upper bounds on an instance or a corpus of .tdg files");
    auto* a_in = a->add_option("--input", audit.input, "Instance file");
    auto* a_dir = a->add_option("--corpus", audit.corpus, "Directory of .tdg instance files");
    a_in->excludes(a_dir);
    a->add_option("--budget", audit.budget, "Search node budget");
    a->require_option(1);

    ExperimentArgs exp;
    auto* e = app.add_subcommand("experiment", "Run a seeded experiment");
    e->add_option("kind", exp.kind, "Experiment")
        ->required()
        ->check(CLI::IsMember({"threshold", "expectation", "concentration", "conjecture"}));
    e->add_option("-n", exp.n, "Vertices");
    e->add_option("-p", exp.p, "Edge probability");
    e->add_option("-c", exp.c, "Colours (threshold default: threshold_colours(n, p))");
    e->add_option("-T,--trials", exp.trials, "Number of trials");
    e->add_option("--seed", exp.seed, "Master seed")->required();
    e->add_option("--csv", exp.csv, "Write per-trial rows to this CSV file");
    e->add_option("--jobs", exp.jobs, "Worker threads")->check(CLI::PositiveNumber);
    e->add_option("--budget", exp.budget, "Search node budget per trial");
    e->add_flag("--count", exp.count, "Threshold: also count rainbow dominating sets");
    e->add_option("--max-n", exp.max_n, "Conjecture: largest exhaustive order");
    e->add_option("--max-c", exp.max_c, "Conjecture: most colours");
    e->add_option("--samples", exp.samples, "Conjecture: extra random instances");
    e->add_option("--sample-max-n", exp.sample_max_n, "Conjecture: largest random order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*s) return run_solve(ctx, solve);
        if (*g) return run_gen(ctx, gen);
        if (*a) return run_audit(ctx, audit);
        if (*e) return run_experiment(ctx, exp);
    } catch (const Failure& f) {
        std::cerr << "tropidom: " << f.message << '\n';
        return f.exit_code;
    } catch (const std::exception& ex) {
        std::cerr << "tropidom: " << ex.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
