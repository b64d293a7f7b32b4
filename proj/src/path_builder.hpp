#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropidom/forge.hpp"

namespace tropidom::detail {

// Builds a path one vertex at a time, numbering colours by first appearance.
class PathBuilder {
public:
    Vertex add(const std::string& colour_label, const std::string& anchor = {}) {
        auto [it, inserted] = ids_.try_emplace(colour_label, static_cast<Colour>(ids_.size() + 1));
        if (inserted) legend_.emplace_back(it->second, colour_label);
        colours_.push_back(it->second);
        auto v = static_cast<Vertex>(colours_.size());
        if (!anchor.empty()) anchors_[anchor] = v;
        return v;
    }

    ReductionArtifact finish(ArtifactKind kind, int source_vertices) {
        std::vector<Edge> edges;
        for (Vertex v = 1; v < static_cast<Vertex>(colours_.size()); ++v) edges.push_back(Edge{v, v + 1});
        return ReductionArtifact{kind, ColouredGraph::build(static_cast<int>(colours_.size()), edges, colours_),
                                 std::move(legend_), std::move(anchors_), source_vertices};
    }

private:
    std::map<std::string, Colour> ids_;
    std::vector<std::pair<Colour, std::string>> legend_;
    std::map<std::string, Vertex> anchors_;
    std::vector<Colour> colours_;
};

}  // namespace tropidom::detail
