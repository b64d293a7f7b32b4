#include "tropidom/problab.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tropidom/error.hpp"
#include "tropidom/forge.hpp"
#include "tropidom/random.hpp"

namespace tropidom {

namespace {

// Below this order the a.a.s. statements say nothing useful about a sample.
constexpr int asymptotic_min_order = 100;

void check_probability(double p) {
    if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::BadParameters, "p must lie strictly between 0 and 1");
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, end);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

// Runs body(t) for t in [0, trials) on up to `jobs` threads. Records land at
// their own index so the result never depends on scheduling.
std::vector<TrialRecord> run_trials(std::uint64_t trials, std::uint64_t master, const ExperimentOptions& opts,
                                    const std::function<void(TrialRecord&)>& body) {
    std::vector<TrialRecord> records(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        records[t].index = t;
        records[t].seed = derive_seed(master, t);
    }
    auto one = [&](TrialRecord& rec) {
        auto start = std::chrono::steady_clock::now();
        try {
            body(rec);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            rec.outcome = TrialOutcome::BudgetExceeded;
            rec.statistic = -1;
        }
        rec.runtime_ms = opts.timing ? elapsed_ms(start) : 0.0;
    };

    unsigned jobs = std::max(1U, opts.jobs);
    if (jobs == 1 || trials < 2) {
        for (auto& rec : records) one(rec);
        return records;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < std::min<std::uint64_t>(jobs, trials); ++w)
        workers.emplace_back([&] {
            while (true) {
                auto t = next.fetch_add(1);
                if (t >= trials) return;
                try {
                    one(records[t]);
                } catch (...) {
                    std::lock_guard lock(failure_lock);
                    if (!failure) failure = std::current_exception();
                    next = trials;
                }
            }
        });
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
    return records;
}

ExperimentReport start_report(std::string name, int n, double p, int c, std::uint64_t seed, std::uint64_t trials,
                              const ExperimentOptions& opts) {
    ExperimentReport r;
    r.experiment = std::move(name);
    r.n = n;
    r.p = p;
    r.c = c;
    r.master_seed = seed;
    r.trials = trials;
    r.timed = opts.timing;
    return r;
}

}  // namespace

void RandomModel::validate() const {
    check_probability(p);
    if (n < 1) fail(ErrorCode::BadParameters, "n must be positive");
    if (c < 1) fail(ErrorCode::BadParameters, "c must be positive");
    if (c > n) fail(ErrorCode::BadParameters, "c must not exceed n");
}

long double expected_rainbow_count(const RandomModel& model) {
    model.validate();
    long double n = model.n, c = model.c;
    long double q = 1.0L - static_cast<long double>(model.p);
    // C(n,c) c!/c^c = n!/((n-c)! c^c)
    long double log_value = std::lgamma(n + 1) - std::lgamma(n - c + 1) - c * std::log(c);
    if (model.n > model.c) log_value += (n - c) * std::log1p(-std::pow(q, c));
    return std::exp(log_value);
}

int threshold_floor(int n, double p) {
    check_probability(p);
    if (n < 3) fail(ErrorCode::BadParameters, "the threshold formulas need n >= 3");
    long double log_b = -std::log1p(-static_cast<long double>(p));
    long double ln_n = std::log(static_cast<long double>(n));
    long double lb_n = ln_n / log_b;
    long double inner = lb_n * ln_n;
    if (!(inner > 0)) fail(ErrorCode::BadParameters, "argument of the outer logarithm is not positive");
    auto value = std::floor(lb_n - std::log(inner) / log_b);
    if (value + 2 < 1) fail(ErrorCode::BadParameters, "threshold formula yields no positive colour count for these parameters");
    return static_cast<int>(value);
}

int threshold_colours(int n, double p) { return threshold_floor(n, p) + 2; }

std::pair<int, int> concentration_window(int n, double p) {
    int l = threshold_floor(n, p);
    return {l + 1, l + 2};
}

const char* to_string(TrialOutcome outcome) noexcept {
    switch (outcome) {
        case TrialOutcome::Success: return "success";
        case TrialOutcome::Failure: return "failure";
        case TrialOutcome::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

void ExperimentReport::summarise() {
    trials = records.size();
    std::uint64_t successes = 0, measured = 0;
    budget_failures = 0;
    double sum = 0.0;
    for (const auto& r : records) {
        if (r.outcome == TrialOutcome::Success) ++successes;
        if (r.outcome == TrialOutcome::BudgetExceeded) ++budget_failures;
        if (r.statistic >= 0) {
            ++measured;
            sum += r.statistic;
        }
    }
    success_fraction = trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    empirical_mean = measured ? sum / static_cast<double>(measured) : 0.0;
    stderr_mean = 0.0;
    if (measured > 1) {
        double ss = 0.0;
        for (const auto& r : records)
            if (r.statistic >= 0) ss += (r.statistic - empirical_mean) * (r.statistic - empirical_mean);
        auto k = static_cast<double>(measured);
        stderr_mean = std::sqrt(ss / (k - 1) / k);
    }
}

ExperimentReport run_threshold_experiment(const RandomModel& model, std::uint64_t trials, ExperimentOptions opts) {
    model.validate();
    auto report = start_report("threshold", model.n, model.p, model.c, model.seed, trials, opts);
    report.records = run_trials(trials, model.seed, opts, [&](TrialRecord& rec) {
        Rng rng(rec.seed);
        auto raw = sample_gnpc(model.n, model.p, model.c, rng);
        if (!raw.all_colours_used()) {
            // No rainbow set can exist when a colour class is empty.
            rec.outcome = TrialOutcome::Failure;
            rec.statistic = opts.count_rainbow ? 0 : -1;
            return;
        }
        auto g = ColouredGraph::build(raw.n, raw.edges, raw.colours);
        SearchOptions so{opts.node_budget};
        auto found = rainbow_exists(g, so);
        rec.outcome = found.exists ? TrialOutcome::Success : TrialOutcome::Failure;
        rec.statistic = opts.count_rainbow ? static_cast<double>(count_rainbow_ds(g, so).count) : -1;
    });
    report.summarise();
    report.reference_label = "none";
    report.asymptotic_regime = model.n >= asymptotic_min_order;
    return report;
}

ExperimentReport run_expectation_experiment(const RandomModel& model, std::uint64_t trials, ExperimentOptions opts) {
    model.validate();
    auto report = start_report("expectation", model.n, model.p, model.c, model.seed, trials, opts);
    report.records = run_trials(trials, model.seed, opts, [&](TrialRecord& rec) {
        Rng rng(rec.seed);
        auto raw = sample_gnpc(model.n, model.p, model.c, rng);
        double count = 0;
        if (raw.all_colours_used()) {
            auto g = ColouredGraph::build(raw.n, raw.edges, raw.colours);
            count = static_cast<double>(count_rainbow_ds(g, SearchOptions{opts.node_budget}).count);
        }
        rec.statistic = count;
        rec.outcome = count > 0 ? TrialOutcome::Success : TrialOutcome::Failure;
    });
    report.summarise();
    report.reference_value = static_cast<double>(expected_rainbow_count(model));
    report.reference_label = "expected_rainbow_count";
    // The comparison is a law-of-large-numbers check, valid at any n.
    report.asymptotic_regime = true;
    return report;
}

ExperimentReport run_concentration_experiment(int n, double p, std::uint64_t trials, std::uint64_t seed,
                                              ExperimentOptions opts) {
    auto window = concentration_window(n, p);
    auto report = start_report("concentration", n, p, 1, seed, trials, opts);
    report.window = window;
    report.records = run_trials(trials, seed, opts, [&](TrialRecord& rec) {
        Rng rng(rec.seed);
        auto raw = sample_gnpc(n, p, 1, rng);
        auto g = ColouredGraph::build(raw.n, raw.edges, raw.colours);
        auto value = gamma(g, SearchOptions{opts.node_budget}).value;
        rec.statistic = value;
        rec.outcome = value >= window.first && value <= window.second ? TrialOutcome::Success : TrialOutcome::Failure;
    });
    report.summarise();
    report.reference_label = "window";
    report.asymptotic_regime = n >= asymptotic_min_order;
    return report;
}

std::string report_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "trial,seed,n,p,c,outcome,statistic,runtime_ms\n";
    for (const auto& r : report.records) {
        out << r.index << ',' << r.seed << ',' << report.n << ',' << format_double(report.p) << ',' << report.c << ','
            << to_string(r.outcome) << ',' << format_double(r.statistic) << ','
            << (report.timed ? format_double(r.runtime_ms) : "0") << '\n';
    }
    return out.str();
}

std::string report_json(const ExperimentReport& report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["experiment"] = report.experiment;
    j["parameters"] = {{"n", report.n},
                       {"p", report.p},
                       {"c", report.c},
                       {"seed", report.master_seed},
                       {"trials", report.trials}};
    ordered_json summary;
    summary["success_fraction"] = report.success_fraction;
    summary["empirical_mean"] = report.empirical_mean;
    summary["stderr"] = report.stderr_mean;
    summary["budget_failures"] = report.budget_failures;
    summary["reference_label"] = report.reference_label;
    summary["reference_value"] = report.reference_value ? ordered_json(*report.reference_value) : ordered_json(nullptr);
    if (report.window) summary["window"] = {report.window->first, report.window->second};
    summary["asymptotic_regime"] = report.asymptotic_regime;
    j["summary"] = summary;
    auto records = ordered_json::array();
    for (const auto& r : report.records) {
        ordered_json row;
        row["trial"] = r.index;
        row["seed"] = r.seed;
        row["outcome"] = to_string(r.outcome);
        row["statistic"] = r.statistic;
        if (report.timed) row["runtime_ms"] = r.runtime_ms;
        records.push_back(row);
    }
    j["records"] = records;
    return j.dump(2) + "\n";
}

}  // namespace tropidom
