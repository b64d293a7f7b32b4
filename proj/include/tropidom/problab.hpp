#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropidom/exact.hpp"
#include "tropidom/graph.hpp"

namespace tropidom {

struct RandomModel {
    int n = 0;
    double p = 0.5;
    int c = 1;
    std::uint64_t seed = 0;

    double b() const { return 1.0 / (1.0 - p); }
    void validate() const;
};

// ---------------------------------------------------------------------------
// Closed forms

// C(n,c) (1 - (1-p)^c)^{n-c} c!/c^c, evaluated in log space.
long double expected_rainbow_count(const RandomModel& model);

// floor(log_b n - log_b[(log_b n)(ln n)]); "log" without a base is natural.
int threshold_floor(int n, double p);
int threshold_colours(int n, double p);                       // floor + 2
std::pair<int, int> concentration_window(int n, double p);    // {floor + 1, floor + 2}

// ---------------------------------------------------------------------------
// Experiments

enum class TrialOutcome { Success, Failure, BudgetExceeded };
const char* to_string(TrialOutcome outcome) noexcept;

struct TrialRecord {
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    TrialOutcome outcome = TrialOutcome::Failure;
    double statistic = 0.0;  // meaning depends on the experiment; -1 when not computed
    double runtime_ms = 0.0;
};

struct ExperimentReport {
    std::string experiment;
    int n = 0;
    double p = 0.0;
    int c = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t trials = 0;
    std::vector<TrialRecord> records;  // ordered by trial index

    double success_fraction = 0.0;
    double empirical_mean = 0.0;  // mean of the statistic over trials that computed it
    double stderr_mean = 0.0;
    std::uint64_t budget_failures = 0;
    std::optional<double> reference_value;
    std::string reference_label;
    bool asymptotic_regime = false;  // whether a soft assertion is meaningful at this n
    std::optional<std::pair<int, int>> window;  // concentration experiment only
    bool timed = false;                          // runtime_ms fields are meaningful

    // Recomputes the summary fields from `records`.
    void summarise();
};

struct ExperimentOptions {
    std::uint64_t node_budget = default_node_budget;
    unsigned jobs = 1;
    bool count_rainbow = false;  // threshold experiment: also count rainbow sets
    bool timing = false;         // record per-trial wall time
};

// Trial t samples G(n, p, c) with seed derive_seed(master, t) and asks
// whether a rainbow dominating set exists. Statistic: the count when
// requested, else -1.
ExperimentReport run_threshold_experiment(const RandomModel& model, std::uint64_t trials, ExperimentOptions opts = {});

// Trial t counts rainbow dominating sets of G(n, p, c); the mean is
// compared with expected_rainbow_count. A sample leaving some colour unused
// has no rainbow set and contributes 0.
ExperimentReport run_expectation_experiment(const RandomModel& model, std::uint64_t trials, ExperimentOptions opts = {});

// Trial t computes the exact domination number of G(n, p); success means it
// falls inside concentration_window(n, p).
ExperimentReport run_concentration_experiment(int n, double p, std::uint64_t trials, std::uint64_t seed,
                                              ExperimentOptions opts = {});

std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

// ---------------------------------------------------------------------------
// Bounds audit

struct BoundCheck {
    std::string id;
    std::string statement;
    bool applicable = false;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = true;  // vacuously true when not applicable
    bool tight = false;     // applicable and lhs == rhs
    bool conjecture = false;
};

struct BoundsReport {
    int n = 0, m = 0, c = 0, delta = 0, big_delta = 0;
    bool connected = false;
    int gamma = 0, gamma_t = 0;
    std::vector<BoundCheck> checks;

    // Violations of proved bounds; conjecture entries are excluded.
    std::vector<std::string> violations() const;
    const BoundCheck& find(const std::string& id) const;
};

// Evaluates every applicable upper bound for a graph with known γ and γ^t.
BoundsReport audit_bounds(const ColouredGraph& g, int gamma_t_value, int gamma_value);

std::string bounds_json(const BoundsReport& report);

// Right-hand side of the conjectured bound (n-c+1)δ/(3δ-1) + c - 1.
double conjecture_bound(int n, int c, int delta);

// ---------------------------------------------------------------------------
// Conjecture search

// Non-isomorphic simple graphs on n vertices (n <= 8), each in canonical
// labelling. `connected_only` filters disconnected graphs.
std::vector<ColouredGraph> enumerate_graphs(int n, bool connected_only);

// Colourings of n vertices with exactly c colours, one per colour
// permutation class (restricted growth strings).
std::vector<std::vector<Colour>> colourings_up_to_permutation(int n, int c);

struct ConjectureConfig {
    int max_n = 7;
    int max_c = 3;
    std::uint64_t random_samples = 0;  // extra random connected instances
    int random_max_n = 10;
    double random_p = 0.4;
    std::uint64_t seed = 1;
    std::uint64_t node_budget = default_node_budget;
};

struct DeltaStats {
    int delta = 0;
    std::uint64_t instances = 0;
    std::uint64_t tight = 0;      // γ^t equals the bound
    double max_ratio = 0.0;       // max γ^t / bound
    double min_slack = 0.0;       // min bound - γ^t
};

// Why an instance violating the inequality does not refute the statement
// as intended: graphs with δ >= n - c have γ^t = c and are set aside, and
// at c = 1 the inequality inherits the seven δ = 2 exceptions of the
// uncoloured bound γ <= δn/(3δ-1). Anything else is Unexplained.
enum class CounterexampleClass { MinDegreeAtLeastNMinusC, UncolouredDeltaTwoException, Unexplained };
const char* to_string(CounterexampleClass k) noexcept;

struct Counterexample {
    std::string instance;  // instance text, verbatim
    int n = 0, c = 0, delta = 0, gamma_t = 0;
    double bound = 0.0;
    CounterexampleClass kind = CounterexampleClass::Unexplained;
};

struct ConjectureReport {
    std::uint64_t instances = 0;
    std::uint64_t exhaustive_instances = 0;
    std::uint64_t random_instances = 0;
    std::vector<Counterexample> counterexamples;
    std::uint64_t unexplained = 0;
    std::vector<DeltaStats> per_delta;
};

ConjectureReport search_conjecture(const ConjectureConfig& config);
std::string conjecture_json(const ConjectureReport& report, const ConjectureConfig& config);

}  // namespace tropidom
