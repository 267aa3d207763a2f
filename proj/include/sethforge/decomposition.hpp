#pragma once

#include <vector>

#include "sethforge/graph.hpp"

namespace sethforge {

struct PathDecomposition {
    std::vector<std::vector<int>> bags;

    int width() const;
    // The all-vertices single bag.
    static PathDecomposition trivial(const Graph& g);
    // Restriction to a vertex subset: intersect bags, drop empty and
    // consecutive-duplicate bags, remap vertices by `remap`.
    PathDecomposition restricted_to(const std::vector<int>& verts) const;
};

// Checks coverage, edge coverage and contiguity; returns the width.
// Errors carry categories "coverage", "edge-coverage", "contiguity".
int validate_path_decomposition(const Graph& g, const PathDecomposition& d);

// Sequence of single-vertex events over a validated decomposition. Edges are
// attached to the later-introduced endpoint.
struct NicePathDecomposition {
    struct Step {
        enum Kind { Introduce, Forget } kind;
        int vertex;
        // For Introduce: already-live neighbors of `vertex`, with edge weights.
        std::vector<std::pair<int, std::int64_t>> live_neighbors;
        // Index of the source bag this step belongs to (for stats grouping).
        int bag_index;
    };
    std::vector<Step> steps;
    int max_live = 0;
};

NicePathDecomposition nicify(const Graph& g, const PathDecomposition& d);

} // namespace sethforge
