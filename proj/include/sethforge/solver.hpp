#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sethforge/instance.hpp"

namespace sethforge {

std::int64_t default_state_cap();

struct SolveOptions {
    bool want_witness = false;
    // Decision mode: only establish whether the target is met. The run is
    // pruned against the target, so `optimum` may come back empty when the
    // verdict is negative.
    bool decision_only = false;
    std::int64_t state_cap = default_state_cap();
    bool use_hints = true;
    int max_iterations = 1000;
};

struct SolveStats {
    std::int64_t max_states = 0;   // max deduplicated states after any step
    std::int64_t transitions = 0;  // states emitted across all steps
    int iterations = 1;
    bool state_law_violated = false;  // any step exceeded alphabet^live
};

struct Answer {
    std::optional<std::int64_t> optimum;
    bool feasible = false;
    std::optional<bool> verdict;   // against the instance target, when present
    std::optional<Solution> solution;
    SolveStats stats;
};

// Exact dynamic program over the nice form of `d`. Supported kinds and state
// alphabets: IndependentSet {out,in}, DominatingSet {in,dominated,undominated},
// MaxCut {side0,side1}, Q(List)Coloring {colors}, OddCycleTransversal
// {in,left,right}, TrianglePacking / PartitionIntoTriangles {free,used} with
// triangles closed at their last-introduced vertex.
Answer solve(const Instance& inst, const SolveOptions& opts = {});

// Same engine without an Instance wrapper; used internally for cost-member
// evaluation and available to tests.
Answer solve_raw(const Graph& g, const PathDecomposition& d, ProblemKind kind, int q,
                 const std::map<int, std::vector<int>>& lists,
                 std::optional<std::int64_t> target, Sense sense,
                 const std::vector<CostMember>& cost_family, const SolveOptions& opts);

} // namespace sethforge
