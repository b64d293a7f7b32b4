#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "tropidom/problab.hpp"

namespace tropidom {

namespace {

constexpr double tolerance = 1e-9;

double choose2(long x) { return x < 2 ? 0.0 : static_cast<double>(x) * static_cast<double>(x - 1) / 2.0; }

BoundCheck at_most(std::string id, std::string statement, bool applicable, double lhs, double rhs) {
    BoundCheck b{std::move(id), std::move(statement), applicable, lhs, rhs};
    if (applicable) {
        b.satisfied = lhs <= rhs + tolerance;
        b.tight = std::abs(lhs - rhs) <= tolerance;
    }
    return b;
}

// δ > (n-1) - sqrt(n-1), decided in integers.
bool super_dense(int n, int delta) {
    long gap = static_cast<long>(n) - 1 - delta;
    return gap < 0 || gap * gap < static_cast<long>(n) - 1;
}

}  // namespace

double conjecture_bound(int n, int c, int delta) {
    return static_cast<double>(n - c + 1) * delta / (3.0 * delta - 1.0) + c - 1;
}

std::vector<std::string> BoundsReport::violations() const {
    std::vector<std::string> out;
    for (const auto& b : checks)
        if (!b.conjecture && b.applicable && !b.satisfied) out.push_back(b.id);
    return out;
}

const BoundCheck& BoundsReport::find(const std::string& id) const {
    for (const auto& b : checks)
        if (b.id == id) return b;
    throw std::out_of_range("no bound named " + id);
}

BoundsReport audit_bounds(const ColouredGraph& g, int gt, int gamma_value) {
    BoundsReport r;
    auto profile = degree_profile(g);
    int n = r.n = g.order();
    int c = r.c = g.colour_count();
    r.m = static_cast<int>(g.size());
    int delta = r.delta = profile.delta;
    r.big_delta = profile.big_delta;
    r.connected = g.is_connected();
    r.gamma = gamma_value;
    r.gamma_t = gt;
    double lhs = gt;

    {
        BoundCheck b{"i", "delta >= n-c implies gamma_t = c", delta >= n - c, lhs, static_cast<double>(c)};
        if (b.applicable) b.satisfied = b.tight = gt == c;
        r.checks.push_back(b);
    }

    r.checks.push_back(at_most("ii", "gamma_t <= gamma + c - 1", true, lhs, gamma_value + c - 1.0));

    {
        // Smallest k > 0 whose hypotheses hold.
        int k_min = 0;
        for (int k = 1; k <= n && k_min == 0; ++k)
            if (n > k + c - 2 && r.m >= choose2(n - k + c - 1) + (n - k)) k_min = k;
        r.checks.push_back(at_most("iii", "m >= C(n-k+c-1,2) + n-k and n > k+c-2 imply gamma_t <= k (minimal k)",
                                   k_min > 0, lhs, k_min));
    }

    r.checks.push_back(at_most("iv", "connected and n > c imply gamma_t <= (n+c-1)/2", r.connected && n > c, lhs,
                               (n + c - 1) / 2.0));

    {
        double rhs = (1.0 + std::log(delta + 1.0)) / (delta + 1.0) * (n - c + 1) + c - 1;
        BoundCheck b{"v", "connected implies gamma_t = c or gamma_t < (1+ln(delta+1))/(delta+1)(n-c+1) + c-1",
                     r.connected, lhs, rhs};
        if (b.applicable) {
            b.satisfied = gt == c || lhs < rhs - tolerance;
            b.tight = std::abs(lhs - rhs) <= tolerance;
        }
        r.checks.push_back(b);
    }

    {
        bool applicable = r.connected && delta >= 2 && delta <= 8 && c < n;
        double rhs = applicable ? static_cast<double>(n - c) * delta / (3.0 * delta - 1) + c +
                                      static_cast<double>(delta) * (delta - 2) / (3.0 * delta - 1)
                                : 0.0;
        r.checks.push_back(at_most(
            "vi", "connected, 2 <= delta <= 8, c < n imply gamma_t <= (n-c)delta/(3delta-1) + c + delta(delta-2)/(3delta-1)",
            applicable, lhs, rhs));
    }

    r.checks.push_back(
        at_most("vii", "delta > (n-1) - sqrt(n-1) implies gamma_t <= c + 1", super_dense(n, delta), lhs, c + 1.0));

    {
        bool applicable = r.connected && c < n;
        auto b = at_most("conjecture", "connected and c < n: gamma_t <= (n-c+1)delta/(3delta-1) + c-1", applicable, lhs,
                         applicable ? conjecture_bound(n, c, delta) : 0.0);
        b.conjecture = true;
        r.checks.push_back(b);
    }
    return r;
}

std::string bounds_json(const BoundsReport& report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["instance"] = {{"n", report.n},         {"m", report.m},
                     {"c", report.c},         {"delta", report.delta},
                     {"Delta", report.big_delta}, {"connected", report.connected}};
    j["gamma"] = report.gamma;
    j["gamma_t"] = report.gamma_t;
    auto rows = ordered_json::array();
    for (const auto& b : report.checks) {
        ordered_json row;
        row["id"] = b.id;
        row["statement"] = b.statement;
        row["applicable"] = b.applicable;
        row["lhs"] = b.lhs;
        row["rhs"] = b.rhs;
        row["satisfied"] = b.satisfied;
        row["tight"] = b.tight;
        row["conjecture"] = b.conjecture;
        rows.push_back(row);
    }
    j["bounds"] = rows;
    j["violations"] = report.violations();
    return j.dump(2) + "\n";
}

}  // namespace tropidom
