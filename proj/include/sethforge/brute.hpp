#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sethforge/instance.hpp"
#include "sethforge/solver.hpp"

namespace sethforge {
namespace brute {

// Exhaustive oracles, all independent of any decomposition.
std::int64_t max_independent_set(const Graph& g);
std::int64_t min_dominating_set(const Graph& g, int cap = 24);
std::int64_t max_cut(const Graph& g, int cap = 24);  // weighted crossing total
bool colorable(const Graph& g, int q, const std::map<int, std::vector<int>>& lists, int cap = 24);
std::int64_t min_odd_cycle_transversal(const Graph& g, int cap = 24);
std::int64_t max_triangle_packing(const Graph& g);
bool partition_into_triangles(const Graph& g);

// Dispatch on instance kind; verdict compared against the instance target.
Answer brute_force(const Instance& inst);

} // namespace brute
} // namespace sethforge
