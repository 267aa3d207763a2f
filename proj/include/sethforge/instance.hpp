#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sethforge/decomposition.hpp"
#include "sethforge/graph.hpp"

namespace sethforge {

enum class ProblemKind {
    IndependentSet,
    DominatingSet,
    MaxCut,
    QColoring,
    QListColoring,
    OddCycleTransversal,
    TrianglePacking,
    PartitionIntoTriangles,
};

enum class Sense { at_least, at_most, feasible };

std::string kind_name(ProblemKind k);
ProblemKind kind_from_name(const std::string& s);
std::string sense_name(Sense s);
Sense sense_from_name(const std::string& s);

struct ReductionMeta {
    int n = 0, m = 0;                       // formula dimensions the construction ran on
    std::optional<int> p, q, t, beta;
    std::vector<std::int64_t> budget_items; // OCT: the five budget components
    std::optional<std::int64_t> mu;         // OCT: satisfying group assignments over all clauses
    std::optional<std::int64_t> arrow_count;
    std::optional<std::int64_t> W;          // Max Cut: weighted total
};

// A disjoint lower/upper-bound certificate group for the solver. The solver
// derives each member's value from the instance itself (induced-subgraph
// optimum, memoized by shape_tag), so hints can speed up but never corrupt
// the search.
struct CostMember {
    std::vector<int> vertices;
    std::string shape_tag;
};

struct Instance {
    ProblemKind kind = ProblemKind::IndependentSet;
    Graph graph;
    Sense sense = Sense::feasible;
    std::optional<std::int64_t> target;
    PathDecomposition decomposition;
    int claimed_width_bound = 0;
    ReductionMeta meta;
    std::map<int, std::vector<int>> lists; // list coloring: vertex -> admissible colors
    bool experimental = false;             // PartitionIntoTriangles only

    // In-memory only (not serialized) solver acceleration certificates.
    std::vector<CostMember> cost_family;

    // Checks the Instance invariants; returns the actual decomposition width.
    int validate() const;
};

struct Solution {
    ProblemKind kind = ProblemKind::IndependentSet;
    std::vector<int> vertex_set;          // IS, DS, OCT
    std::vector<int> side_of;             // Max Cut: one of {0,1} per vertex
    std::vector<int> color_of;            // coloring: 1..q per vertex
    std::vector<std::array<int, 3>> triangles; // packing / partition
};

} // namespace sethforge
