// Acceptance run: one PASS/FAIL line per criterion. Criteria 8 and 9 are
// finite-size checks of asymptotic statements; their failure is printed but
// does not change the exit status.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/intervals.hpp"
#include "support/oracles.hpp"
#include "tropidom/approx.hpp"
#include "tropidom/error.hpp"
#include "tropidom/exact.hpp"
#include "tropidom/forge.hpp"
#include "tropidom/instance_io.hpp"
#include "tropidom/interval.hpp"
#include "tropidom/problab.hpp"

namespace fs = std::filesystem;
using namespace tropidom;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    bool soft;
    std::function<Outcome()> run;
};

std::string fmt(double x, int digits = 4) {
    std::ostringstream s;
    s.precision(digits);
    s << x;
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr std::uint64_t master_seed = 20240601;

// Shared corpora, built once.

std::vector<ColouredGraph>& interval_corpus() {
    static std::vector<ColouredGraph> corpus;
    return corpus;
}

std::vector<ColouredGraph>& path_corpus() {
    static std::vector<ColouredGraph> corpus;
    return corpus;
}

ColouredGraph coloured_path(const std::vector<Colour>& colours) {
    int n = static_cast<int>(colours.size());
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
    return ColouredGraph::build(n, edges, colours);
}

Outcome interval_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(derive_seed(master_seed, 1));
    int mismatches = 0, invalid = 0;
    const int instances = 500;
    for (int t = 0; t < instances; ++t) {
        int n = 1 + static_cast<int>(rng.below(14));
        int c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 4))));
        auto ri = oracle::random_intervals(rng, n, c);
        Instance inst{ri.graph, ri.intervals, {}};
        auto dp = tdn_interval(inst);
        auto ex = gamma_t(ri.graph);
        if (dp.value != ex.value) ++mismatches;
        if (!is_dominating(ri.graph, dp.witness) || !is_tropical(ri.graph, dp.witness) ||
            static_cast<int>(dp.witness.size()) != dp.value)
            ++invalid;
        interval_corpus().push_back(ri.graph);
    }
    double secs = seconds_since(t0);
    return {mismatches == 0 && invalid == 0 && secs < 60,
            std::to_string(instances) + " instances, " + std::to_string(mismatches) + " value mismatches, " +
                std::to_string(invalid) + " invalid witnesses, " + fmt(secs, 3) + " s (limit 60 s)"};
}

Outcome path_ratio() {
    const std::size_t cap = 10000;
    Rng rng(derive_seed(master_seed, 2));
    std::size_t checked = 0;
    int ratio_violations = 0, size_violations = 0, invalid = 0;
    double worst = 0;
    for (int n = 1; n <= 12; ++n) {
        std::vector<std::vector<Colour>> colourings;
        for (int c = 1; c <= std::min(3, n); ++c)
            for (auto& s : colourings_up_to_permutation(n, c)) colourings.push_back(std::move(s));
        if (colourings.size() > cap) {
            // Seeded partial Fisher-Yates: the first `cap` entries are a uniform sample.
            for (std::size_t i = 0; i < cap; ++i) {
                auto j = i + static_cast<std::size_t>(rng.below(colourings.size() - i));
                std::swap(colourings[i], colourings[j]);
            }
            colourings.resize(cap);
        }
        for (const auto& colours : colourings) {
            auto g = coloured_path(colours);
            auto approx = path_five_thirds(g);
            int opt = gamma_t(g).value;
            int c = g.colour_count();
            double ratio = static_cast<double>(approx.size) / opt;
            worst = std::max(worst, ratio);
            if (3 * approx.size > 5 * opt) ++ratio_violations;
            if (approx.size > (n + 2 * c) / 3 + 1) ++size_violations;
            if (!is_dominating(g, approx.witness) || !is_tropical(g, approx.witness)) ++invalid;
            path_corpus().push_back(std::move(g));
            ++checked;
        }
    }
    return {ratio_violations == 0 && size_violations == 0 && invalid == 0,
            std::to_string(checked) + " coloured paths, worst ratio " + fmt(worst) + ", " +
                std::to_string(ratio_violations) + " ratio violations, " + std::to_string(size_violations) +
                " size-bound violations, " + std::to_string(invalid) + " invalid witnesses"};
}

Outcome greedy_guarantee() {
    std::vector<ColouredGraph> corpus = interval_corpus();
    corpus.insert(corpus.end(), path_corpus().begin(), path_corpus().end());
    const int samples = 500;
    for (int t = 0; t < samples; ++t) corpus.push_back(gen_gnpc(12, 0.3, 3, derive_seed(master_seed ^ 3, static_cast<std::uint64_t>(t))).graph);
    int violations = 0, invalid = 0;
    double worst = 0;
    for (const auto& g : corpus) {
        auto r = greedy_setcover_tds(g);
        int opt = gamma_t(g).value;
        double bound = harmonic(degree_profile(g).big_delta + 2) * opt;
        worst = std::max(worst, static_cast<double>(r.size) / opt);
        if (r.size > bound + 1e-9) ++violations;
        if (!is_dominating(g, r.witness) || !is_tropical(g, r.witness)) ++invalid;
    }
    return {violations == 0 && invalid == 0 && !corpus.empty(),
            std::to_string(corpus.size()) + " instances (" + std::to_string(samples) + " from G(12,0.3,3)), worst ratio " +
                fmt(worst) + ", " + std::to_string(violations) + " violations, " + std::to_string(invalid) +
                " invalid witnesses"};
}

std::vector<std::vector<Literal>> all_clauses(int vars) {
    std::vector<Literal> lits;
    for (int v = 1; v <= vars; ++v) {
        lits.push_back({v, true});
        lits.push_back({v, false});
    }
    std::vector<std::vector<Literal>> out;
    for (const auto& a : lits)
        for (const auto& b : lits)
            for (const auto& c : lits) out.push_back({a, b, c});
    return out;
}

Outcome sat_equivalence() {
    auto clauses = all_clauses(3);
    std::size_t checked = 0, unsatisfiable = 0;
    int mismatches = 0;
    auto check = [&](const CnfFormula& f) {
        bool rainbow = rainbow_exists(sat_to_path(f).path).exists;
        bool sat = oracle::satisfiable(f);
        if (rainbow != sat) ++mismatches;
        unsatisfiable += sat ? 0 : 1;
        ++checked;
    };
    for (const auto& c : clauses) check(CnfFormula{3, {c}});
    std::size_t singles = checked;
    for (std::size_t i = 0; i < clauses.size(); ++i)
        for (std::size_t j = i; j < clauses.size(); ++j) check(CnfFormula{3, {clauses[i], clauses[j]}});
    std::size_t pairs = checked - singles, unsat_pairs = unsatisfiable;
    Rng rng(derive_seed(master_seed, 4));
    int satisfiable = 0;
    for (int t = 0; t < 100; ++t) {
        CnfFormula f;
        // Few variables so that unsatisfiable formulas actually occur.
        f.num_vars = 1 + static_cast<int>(rng.below(3));
        for (int k = 0; k < 3; ++k) {
            std::vector<Literal> clause;
            for (int l = 0; l < 3; ++l)
                clause.push_back({1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(f.num_vars))), rng.below(2) == 0});
            f.clauses.push_back(clause);
        }
        satisfiable += oracle::satisfiable(f) ? 1 : 0;
        check(f);
    }
    return {mismatches == 0,
            std::to_string(singles) + " single clauses, " + std::to_string(pairs) + " clause pairs (" +
                std::to_string(unsat_pairs) + " unsatisfiable), 100 random 3-clause formulas (" +
                std::to_string(satisfiable) + " satisfiable); " + std::to_string(mismatches) + " mismatches"};
}

Outcome vc_identity() {
    std::vector<SubcubicGraph> graphs;
    for (int n = 2; n <= 5; ++n)
        for (auto& g : oracle::connected_subcubic(n)) graphs.push_back(std::move(g));
    std::size_t exhaustive = graphs.size();
    Rng rng(derive_seed(master_seed, 5));
    for (int t = 0; t < 50; ++t) graphs.push_back(oracle::random_subcubic(rng, 2 + static_cast<int>(rng.below(5))));
    int identity = 0, cover_failures = 0;
    for (const auto& g : graphs) {
        auto art = vc_to_path(g);
        int opt = oracle::min_vertex_cover(g);
        auto best = gamma_t(art.path);
        if (best.value != opt + 1 + 3 * g.n) ++identity;
        // Recovery from the optimum and from a greedy (usually larger) set.
        for (const auto& sigma : {best.witness, greedy_setcover_tds(art.path).witness}) {
            auto cover = extract_vc(art, sigma);
            if (!oracle::is_vertex_cover(g, cover) ||
                static_cast<int>(cover.size()) > static_cast<int>(sigma.size()) - 1 - 3 * g.n)
                ++cover_failures;
        }
    }
    return {identity == 0 && cover_failures == 0,
            std::to_string(exhaustive) + " connected subcubic graphs (n <= 5) + 50 random (n <= 6); " +
                std::to_string(identity) + " identity failures, " + std::to_string(cover_failures) +
                " extraction failures"};
}

Outcome expectation_formula() {
    RandomModel m{12, 0.5, 2, derive_seed(master_seed, 6)};
    auto r = run_expectation_experiment(m, 10000);
    const double reference = 1.85835;
    double dev = std::abs(r.empirical_mean - reference);
    return {dev <= 3 * r.stderr_mean && r.budget_failures == 0,
            "mean " + fmt(r.empirical_mean, 6) + " +- " + fmt(r.stderr_mean, 3) + " over 10000 trials, |mean - 1.85835| = " +
                fmt(dev / r.stderr_mean, 3) + " standard errors (limit 3)"};
}

Outcome bounds_audit() {
    const double ps[] = {0.2, 0.5, 0.8};
    std::map<std::string, int> applicable;
    int violations = 0;
    for (int t = 0; t < 10000; ++t) {
        auto seed = derive_seed(master_seed ^ 7, static_cast<std::uint64_t>(t));
        Rng pick(seed);
        int n = 2 + static_cast<int>(pick.below(11));
        double p = ps[t % 3];
        int c = 1 + static_cast<int>(pick.below(static_cast<std::uint64_t>(std::min(n, 4))));
        auto g = gen_gnpc(n, p, c, seed).graph;
        auto report = audit_bounds(g, gamma_t(g).value, gamma(g).value);
        violations += static_cast<int>(report.violations().size());
        for (const auto& b : report.checks)
            if (b.applicable && !b.conjecture) ++applicable[b.id];
    }
    auto ext = extremal_gamma_plus(3, 3);
    auto er = audit_bounds(ext, gamma_t(ext).value, gamma(ext).value);
    bool tight = er.find("ii").tight && er.violations().empty();
    int edge_gt = gamma_t(extremal_edge_bound(8, 4, 2)).value;
    std::string counts;
    for (const auto& [id, k] : applicable) counts += (counts.empty() ? "" : " ") + id + ":" + std::to_string(k);
    return {violations == 0 && tight && edge_gt == 4,
            "10000 instances, " + std::to_string(violations) + " violations (applicable " + counts +
                "); extremal (ii) tight: " + (tight ? "yes" : "no") + "; extremal-edges(8,4,2) gamma_t = " +
                std::to_string(edge_gt)};
}

Outcome threshold_experiment() {
    auto t0 = std::chrono::steady_clock::now();
    int c = threshold_colours(200, 0.5);
    auto r = run_threshold_experiment(RandomModel{200, 0.5, c, derive_seed(master_seed, 8)}, 50);
    double secs = seconds_since(t0);
    return {c == 4 && r.success_fraction >= 0.9 && secs < 600,
            "c = " + std::to_string(c) + ", success fraction " + fmt(r.success_fraction) + " +- " +
                fmt(std::sqrt(r.success_fraction * (1 - r.success_fraction) / 50), 3) + " over 50 trials (bar 0.9), " +
                fmt(secs, 3) + " s"};
}

Outcome concentration() {
    auto r = run_concentration_experiment(100, 0.5, 30, derive_seed(master_seed, 9));
    std::map<int, int> hist;
    for (const auto& rec : r.records) ++hist[static_cast<int>(rec.statistic)];
    std::string h;
    for (const auto& [g, k] : hist) h += (h.empty() ? "" : ", ") + std::string("gamma=") + std::to_string(g) + ": " + std::to_string(k);
    return {r.success_fraction >= 0.8 && r.budget_failures == 0,
            "window {" + std::to_string(r.window->first) + "," + std::to_string(r.window->second) + "}, in-window fraction " +
                fmt(r.success_fraction) + " (bar 0.8); " + h};
}

Outcome conjecture_search() {
    ConjectureConfig cfg;
    cfg.max_n = 7;
    cfg.max_c = 3;
    auto report = search_conjecture(cfg);
    auto text = conjecture_json(report, cfg);
    auto path = fs::path(TROPIDOM_ACCEPTANCE_DIR) / "conjecture_report.json";
    std::ofstream(path) << text;
    auto j = nlohmann::json::parse(text);
    std::map<std::string, int> by_class;
    for (const auto& x : report.counterexamples) ++by_class[to_string(x.kind)];
    std::string classes;
    for (const auto& [k, v] : by_class) classes += (classes.empty() ? "" : ", ") + k + ": " + std::to_string(v);
    bool emitted = j["counterexamples"].size() == report.counterexamples.size() && report.instances > 0;
    return {emitted && fs::exists(path),
            std::to_string(report.instances) + " instances, " + std::to_string(report.counterexamples.size()) +
                " counterexamples emitted (" + (classes.empty() ? "none" : classes) + "), report " + path.string()};
}

// Runs the CLI from `dir` and captures stdout.
std::pair<int, std::string> run_cli(const fs::path& dir, const std::string& args) {
    std::string cmd = "cd '" + dir.string() + "' && env -u TROPIDOM_BUDGET '" + TROPIDOM_CLI + "' " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, out};
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome cli_determinism() {
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"gen gnpc -n 30 -p 0.3 -c 3 --seed 11 --out gnpc.tdg", "gnpc.tdg"},
        {"gen extremal-gamma --gamma 3 -c 3 --out ext_gamma.tdg", "ext_gamma.tdg"},
        {"gen extremal-edges -n 8 -k 4 -c 2 --out ext_edges.tdg", "ext_edges.tdg"},
        {"gen sat --cnf three_clauses.cnf --out sat.tdg", "sat.tdg"},
        {"gen vc --graph triangle.edges --out vc.tdg", "vc.tdg"},
        {"gen pad --input p3.tdg --epsilon 0.5 --out pad.tdg", "pad.tdg"},
        {"solve --algo exact --input gnpc.tdg", ""},
        {"solve --algo exact-gamma --input gnpc.tdg", ""},
        {"solve --algo exact-rainbow --input sat.tdg", ""},
        {"solve --algo greedy --input vc.tdg", ""},
        {"solve --algo path53 --input pad.tdg", ""},
        {"solve --algo interval --input interval.tdg", ""},
        {"audit --input gnpc.tdg", ""},
        {"audit --corpus .", ""},
        {"experiment threshold -n 60 -p 0.5 -T 10 --seed 3 --count --csv threshold.csv", "threshold.csv"},
        {"experiment expectation -n 12 -p 0.5 -c 2 -T 50 --seed 3 --jobs 2 --csv expectation.csv", "expectation.csv"},
        {"experiment concentration -n 30 -p 0.5 -T 10 --seed 3 --csv concentration.csv", "concentration.csv"},
        {"experiment conjecture --seed 3 --max-n 5 --samples 20", ""},
    };
    auto dir = fs::path(TROPIDOM_ACCEPTANCE_DIR) / "determinism";
    std::vector<std::vector<std::string>> rounds;
    int failures = 0;
    for (int round = 0; round < 2; ++round) {
        fs::remove_all(dir);
        fs::create_directories(dir);
        for (const auto& entry : fs::directory_iterator(TROPIDOM_TEST_DATA))
            fs::copy_file(entry.path(), dir / entry.path().filename());
        fs::remove(dir / "bad_header.tdg");  // would fail the corpus audit
        std::vector<std::string> outputs;
        for (const auto& [args, file] : commands) {
            auto [code, out] = run_cli(dir, args);
            if (code != 0) ++failures;
            outputs.push_back(out);
            if (!file.empty()) outputs.push_back(slurp(dir / file));
        }
        rounds.push_back(std::move(outputs));
    }
    std::size_t differing = 0;
    for (std::size_t i = 0; i < rounds[0].size(); ++i) differing += rounds[0][i] != rounds[1][i] ? 1 : 0;
    return {failures == 0 && differing == 0,
            std::to_string(commands.size()) + " commands, " + std::to_string(rounds[0].size()) +
                " outputs compared, " + std::to_string(differing) + " differ, " + std::to_string(failures) +
                " non-zero exits"};
}

}  // namespace

int main() {
    fs::create_directories(TROPIDOM_ACCEPTANCE_DIR);
    const std::vector<Criterion> criteria = {
        {1, "interval DP equals exact oracle", false, interval_equivalence},
        {2, "path 5/3 ratio", false, path_ratio},
        {3, "greedy H(Delta+2) guarantee", false, greedy_guarantee},
        {4, "SAT reduction equivalence", false, sat_equivalence},
        {5, "vertex cover reduction identity", false, vc_identity},
        {6, "expected rainbow count", false, expectation_formula},
        {7, "bounds audit", false, bounds_audit},
        {8, "threshold experiment (finite-size)", true, threshold_experiment},
        {9, "two-point concentration (finite-size)", true, concentration},
        {10, "conjecture search report", false, conjecture_search},
        {11, "CLI determinism", false, cli_determinism},
    };
    // ctest hides output of passing tests, so keep a copy of the lines.
    std::ofstream summary(fs::path(TROPIDOM_ACCEPTANCE_DIR) / "summary.txt");
    int hard_failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " [" << c.title << "]: " << o.detail << " ["
             << fmt(seconds_since(t0), 3) << " s]";
        if (!o.pass && c.soft) line << " (soft criterion; does not affect exit status)";
        std::cout << line.str() << std::endl;
        summary << line.str() << '\n';
        if (!o.pass && !c.soft) ++hard_failures;
    }
    return hard_failures == 0 ? 0 : 1;
}
