#include "tropidom/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tropidom/error.hpp"

namespace tropidom {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line, std::size_t lineno) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        auto sp = line.find(' ', pos);
        if (sp == std::string_view::npos) sp = line.size();
        if (sp == pos) parse_error(lineno, "empty field (stray space)");
        out.push_back(line.substr(pos, sp - pos));
        pos = sp + 1;
    }
    return out;
}

std::int64_t to_int(std::string_view tok, std::size_t lineno, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        parse_error(lineno, std::string("invalid integer for ") + what + ": '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::vector<std::string_view> lines;
    {
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            lines.push_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
    }

    bool have_header = false;
    std::size_t header_line = 0;
    std::int64_t n = 0, m = 0, c = 0;
    std::vector<Colour> colours;
    std::vector<char> vertex_seen;
    std::vector<Edge> edges;
    std::vector<Interval> intervals;
    std::vector<char> interval_seen;
    std::size_t vertex_lines = 0, interval_lines = 0;
    std::vector<std::pair<Colour, std::string>> legend;

    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto lineno = k + 1;
        auto line = lines[k];
        if (line.find('\r') != std::string_view::npos) parse_error(lineno, "carriage return (CRLF) not allowed");
        if (line.empty()) parse_error(lineno, "blank line");
        if (line.front() == '#') {
            constexpr std::string_view tag = "# legend ";
            if (line.substr(0, tag.size()) == tag) {
                auto rest = line.substr(tag.size());
                auto sp = rest.find(' ');
                if (sp == std::string_view::npos || sp + 1 >= rest.size())
                    parse_error(lineno, "legend comment needs '<colour> <label>'");
                legend.emplace_back(static_cast<Colour>(to_int(rest.substr(0, sp), lineno, "legend colour")),
                                    std::string(rest.substr(sp + 1)));
            }
            continue;
        }

        auto f = split_fields(line, lineno);
        if (!have_header) {
            if (f.size() != 5 || f[0] != "p" || f[1] != "tdgs")
                parse_error(lineno, "expected header 'p tdgs <n> <m> <c>'");
            n = to_int(f[2], lineno, "n");
            m = to_int(f[3], lineno, "m");
            c = to_int(f[4], lineno, "c");
            if (n < 1) parse_error(lineno, "n must be at least 1");
            if (m < 0) parse_error(lineno, "m must be non-negative");
            if (c < 1 || c > n) parse_error(lineno, "c must lie in 1..n");
            if (m > n * (n - 1) / 2) parse_error(lineno, "m exceeds n(n-1)/2");
            have_header = true;
            header_line = lineno;
            colours.assign(static_cast<std::size_t>(n), 0);
            vertex_seen.assign(static_cast<std::size_t>(n), 0);
            interval_seen.assign(static_cast<std::size_t>(n), 0);
            intervals.assign(static_cast<std::size_t>(n), Interval{0, 0});
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }

        if (f[0] == "p") parse_error(lineno, "duplicate header");
        if (f[0] == "v") {
            if (f.size() != 3) parse_error(lineno, "expected 'v <id> <colour>'");
            auto id = to_int(f[1], lineno, "vertex id");
            auto col = to_int(f[2], lineno, "colour");
            if (id < 1 || id > n) parse_error(lineno, "vertex id out of range 1.." + std::to_string(n));
            if (col < 1 || col > c) parse_error(lineno, "colour out of range 1.." + std::to_string(c));
            auto idx = static_cast<std::size_t>(id - 1);
            if (vertex_seen[idx]) parse_error(lineno, "vertex " + std::to_string(id) + " listed twice");
            vertex_seen[idx] = 1;
            colours[idx] = static_cast<Colour>(col);
            ++vertex_lines;
        } else if (f[0] == "e") {
            if (f.size() != 3) parse_error(lineno, "expected 'e <u> <v>'");
            auto u = to_int(f[1], lineno, "endpoint");
            auto v = to_int(f[2], lineno, "endpoint");
            if (u < 1 || u > n || v < 1 || v > n) parse_error(lineno, "edge endpoint out of range");
            if (u >= v) parse_error(lineno, "edge endpoints must satisfy u < v");
            if (static_cast<std::int64_t>(edges.size()) == m)
                parse_error(lineno, "more edge lines than the header's m = " + std::to_string(m));
            edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
        } else if (f[0] == "i") {
            if (f.size() != 4) parse_error(lineno, "expected 'i <id> <l> <r>'");
            auto id = to_int(f[1], lineno, "vertex id");
            auto l = to_int(f[2], lineno, "left endpoint");
            auto r = to_int(f[3], lineno, "right endpoint");
            if (id < 1 || id > n) parse_error(lineno, "vertex id out of range 1.." + std::to_string(n));
            if (l > r) parse_error(lineno, "interval has l > r");
            auto idx = static_cast<std::size_t>(id - 1);
            if (interval_seen[idx]) parse_error(lineno, "interval for vertex " + std::to_string(id) + " given twice");
            interval_seen[idx] = 1;
            intervals[idx] = Interval{l, r};
            ++interval_lines;
        } else {
            parse_error(lineno, "unknown line type '" + std::string(f[0]) + "'");
        }
    }

    auto end_line = lines.size() + 1;
    if (!have_header) parse_error(end_line, "missing header 'p tdgs <n> <m> <c>'");
    if (vertex_lines != static_cast<std::size_t>(n))
        parse_error(end_line, "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(vertex_lines));
    if (static_cast<std::int64_t>(edges.size()) != m)
        parse_error(end_line, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
    if (interval_lines != 0 && interval_lines != static_cast<std::size_t>(n))
        parse_error(end_line, "interval lines must cover all " + std::to_string(n) + " vertices or none");

    Instance inst{[&] {
        try {
            auto g = ColouredGraph::build(static_cast<int>(n), edges, colours);
            if (g.colour_count() != c) parse_error(header_line, "header c = " + std::to_string(c) +
                                                                   " but the largest colour used is " +
                                                                   std::to_string(g.colour_count()));
            return g;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Parse) throw;
            parse_error(header_line, e.what());
        }
    }(), std::nullopt, {}};
    if (interval_lines != 0) inst.intervals = std::move(intervals);
    inst.legend = std::move(legend);
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string format_instance(const Instance& inst) {
    const auto& g = inst.graph;
    std::ostringstream out;
    for (const auto& [colour, label] : inst.legend) out << "# legend " << colour << ' ' << label << '\n';
    out << "p tdgs " << g.order() << ' ' << g.size() << ' ' << g.colour_count() << '\n';
    for (Vertex v = 1; v <= g.order(); ++v) out << "v " << v << ' ' << g.colour(v) << '\n';
    for (auto e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    if (inst.intervals)
        for (std::size_t i = 0; i < inst.intervals->size(); ++i)
            out << "i " << i + 1 << ' ' << (*inst.intervals)[i].l << ' ' << (*inst.intervals)[i].r << '\n';
    return out.str();
}

std::string format_instance(const ColouredGraph& g) { return format_instance(Instance{g, std::nullopt, {}}); }

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::Io, "cannot write '" + path + "'");
    out << format_instance(inst);
    if (!out) fail(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace tropidom
