#include <charconv>
#include <sstream>
#include <string>

#include "tropidom/error.hpp"
#include "tropidom/forge.hpp"
#include "path_builder.hpp"

namespace tropidom {

namespace {

[[noreturn]] void cnf_error(std::size_t line, const std::string& what) {
    fail(ErrorCode::MalformedFormula, "line " + std::to_string(line) + ": " + what);
}

std::string pair_name(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

void CnfFormula::validate() const {
    if (num_vars < 1) fail(ErrorCode::MalformedFormula, "formula needs at least one variable");
    if (clauses.empty()) fail(ErrorCode::MalformedFormula, "formula needs at least one clause");
    for (std::size_t k = 0; k < clauses.size(); ++k) {
        if (clauses[k].size() != 3)
            fail(ErrorCode::MalformedFormula, "clause " + std::to_string(k + 1) + " does not have exactly 3 literals");
        for (const auto& lit : clauses[k])
            if (lit.variable < 1 || lit.variable > num_vars)
                fail(ErrorCode::MalformedFormula, "clause " + std::to_string(k + 1) + " uses variable " +
                                                      std::to_string(lit.variable) + " outside 1.." +
                                                      std::to_string(num_vars));
    }
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
    CnfFormula f;
    bool have_header = false;
    long declared_clauses = 0;
    std::vector<Literal> pending;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string tok;
        if (!(fields >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            std::string fmt;
            long vars = 0;
            if (have_header) cnf_error(lineno, "duplicate problem line");
            if (!(fields >> fmt >> vars >> declared_clauses) || fmt != "cnf")
                cnf_error(lineno, "expected 'p cnf <vars> <clauses>'");
            if (vars < 1 || declared_clauses < 1) cnf_error(lineno, "variable and clause counts must be positive");
            f.num_vars = static_cast<int>(vars);
            have_header = true;
            continue;
        }
        if (!have_header) cnf_error(lineno, "clause before problem line");
        do {
            long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) cnf_error(lineno, "invalid literal '" + tok + "'");
            if (value == 0) {
                if (pending.size() != 3)
                    cnf_error(lineno, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
                f.clauses.push_back(pending);
                pending.clear();
                continue;
            }
            auto var = value < 0 ? -value : value;
            if (var > f.num_vars) cnf_error(lineno, "variable " + std::to_string(var) + " exceeds declared count");
            pending.push_back(Literal{static_cast<int>(var), value > 0});
        } while (fields >> tok);
    }
    if (!have_header) cnf_error(lineno + 1, "missing problem line");
    if (!pending.empty()) cnf_error(lineno + 1, "last clause is not terminated by 0");
    if (static_cast<long>(f.clauses.size()) != declared_clauses)
        cnf_error(lineno + 1, "declared " + std::to_string(declared_clauses) + " clauses, found " +
                                  std::to_string(f.clauses.size()));
    f.validate();
    return f;
}

std::string format_dimacs_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (const auto& lit : clause) out << (lit.positive ? lit.variable : -lit.variable) << ' ';
        out << "0\n";
    }
    return out.str();
}

ReductionArtifact sat_to_path(const CnfFormula& f) {
    f.validate();
    int tau = f.tau();
    int literals = f.literal_count();

    auto antithetic = [&](int i, int j) {
        const auto& a = f.literal(i);
        const auto& b = f.literal(j);
        return a.variable == b.variable && a.positive != b.positive;
    };

    detail::PathBuilder path;
    path.add("B", "v");
    path.add("B", "v'");
    for (int k = 0; k <= 4 * tau; ++k) {
        auto name = "v" + std::to_string(k);
        if (k % 4 == 0) {
            path.add("U:" + name, name);
        } else {
            int literal = 3 * (k / 4) + k % 4;
            path.add("lit:" + std::to_string(literal) + "_0", name);
        }
    }
    for (int i = 1; i <= literals; ++i) {
        int f_index = 0;
        for (int j = 1; j <= literals; ++j) {
            if (!antithetic(i, j)) continue;
            ++f_index;
            auto gadget = "w" + pair_name(i, j) + ":";
            auto lit = "lit:" + std::to_string(i) + "_";
            path.add("U:A" + pair_name(i, j), gadget + "A");
            path.add(lit + std::to_string(f_index), gadget + "P");
            path.add("B", gadget + "M");
            path.add(lit + std::to_string(f_index - 1), gadget + "N");
            path.add("link:" + pair_name(std::min(i, j), std::max(i, j)), gadget + "L");
        }
    }
    path.add("U:F", "F");
    return path.finish(ArtifactKind::Sat, 0);
}

}  // namespace tropidom
