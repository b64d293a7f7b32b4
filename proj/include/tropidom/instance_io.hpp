#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropidom/graph.hpp"

namespace tropidom {

struct Interval {
    std::int64_t l;
    std::int64_t r;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// A graph as read from or written to the text instance format, together
// with the optional interval representation (`i` lines) and colour legend
// (`# legend <colour> <label>` comments).
struct Instance {
    ColouredGraph graph;
    std::optional<std::vector<Interval>> intervals;  // indexed by vertex - 1
    std::vector<std::pair<Colour, std::string>> legend;
};

// Strict line-oriented parser. Any deviation raises Error{Parse} whose
// message starts with "line <k>: ".
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

// Canonical serialisation: legend comments, header, vertices by id, edges
// in ascending (u, v) order, then interval lines if present.
std::string format_instance(const Instance& inst);
std::string format_instance(const ColouredGraph& g);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace tropidom
