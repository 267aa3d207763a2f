#include <algorithm>
#include <unordered_set>

#include "sethforge/reductions.hpp"

namespace sethforge {

namespace {

bool meets(const Instance& inst, std::int64_t value) {
    if (!inst.target) return true;
    return inst.sense == Sense::at_least ? value >= *inst.target : value <= *inst.target;
}

bool vertices_in_range(const Instance& inst, const std::vector<int>& vs) {
    for (int v : vs)
        if (v < 0 || v >= inst.graph.num_vertices()) return false;
    return true;
}

bool two_colorable_without(const Graph& g, const std::unordered_set<int>& removed) {
    std::vector<int> side(g.num_vertices(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (removed.count(s) || side[s] != -1) continue;
        side[s] = 0;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto& [w, idx] : g.neighbors(v)) {
                if (removed.count(w)) continue;
                if (side[w] == -1) {
                    side[w] = side[v] ^ 1;
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

bool check_solution(const Instance& inst, const Solution& s) {
    if (s.kind != inst.kind) fail("shape-mismatch", "solution kind does not match instance kind");
    const Graph& g = inst.graph;
    switch (inst.kind) {
        case ProblemKind::IndependentSet: {
            if (!vertices_in_range(inst, s.vertex_set)) return false;
            std::unordered_set<int> in(s.vertex_set.begin(), s.vertex_set.end());
            if (in.size() != s.vertex_set.size()) return false;
            for (const auto& e : g.edges())
                if (in.count(e.u) && in.count(e.v)) return false;
            return meets(inst, static_cast<std::int64_t>(in.size()));
        }
        case ProblemKind::DominatingSet: {
            if (!vertices_in_range(inst, s.vertex_set)) return false;
            std::unordered_set<int> in(s.vertex_set.begin(), s.vertex_set.end());
            for (int v = 0; v < g.num_vertices(); ++v) {
                if (in.count(v)) continue;
                bool dom = false;
                for (auto& [w, idx] : g.neighbors(v))
                    if (in.count(w)) { dom = true; break; }
                if (!dom) return false;
            }
            return meets(inst, static_cast<std::int64_t>(in.size()));
        }
        case ProblemKind::MaxCut: {
            if (static_cast<int>(s.side_of.size()) != g.num_vertices()) return false;
            for (int v : s.side_of)
                if (v != 0 && v != 1) return false;
            std::int64_t w = 0;
            for (const auto& e : g.edges())
                if (s.side_of[e.u] != s.side_of[e.v]) w += e.weight;
            return meets(inst, w);
        }
        case ProblemKind::QColoring:
        case ProblemKind::QListColoring: {
            if (static_cast<int>(s.color_of.size()) != g.num_vertices()) return false;
            int q = inst.meta.q.value_or(3);
            for (int v = 0; v < g.num_vertices(); ++v) {
                int c = s.color_of[v];
                if (c < 1 || c > q) return false;
                auto it = inst.lists.find(v);
                if (it != inst.lists.end() &&
                    std::find(it->second.begin(), it->second.end(), c) == it->second.end())
                    return false;
            }
            for (const auto& e : g.edges())
                if (s.color_of[e.u] == s.color_of[e.v]) return false;
            return true;
        }
        case ProblemKind::OddCycleTransversal: {
            if (!vertices_in_range(inst, s.vertex_set)) return false;
            std::unordered_set<int> z(s.vertex_set.begin(), s.vertex_set.end());
            if (!two_colorable_without(g, z)) return false;
            return meets(inst, static_cast<std::int64_t>(z.size()));
        }
        case ProblemKind::TrianglePacking:
        case ProblemKind::PartitionIntoTriangles: {
            std::unordered_set<int> used;
            for (const auto& t : s.triangles) {
                if (!vertices_in_range(inst, {t[0], t[1], t[2]})) return false;
                if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2]))
                    return false;
                for (int v : t)
                    if (!used.insert(v).second) return false;
            }
            if (inst.kind == ProblemKind::PartitionIntoTriangles)
                return static_cast<int>(used.size()) == g.num_vertices();
            return meets(inst, static_cast<std::int64_t>(s.triangles.size()));
        }
    }
    fail("invalid-kind", "unknown kind enum");
}

Solution build_witness(const Instance& inst, const CnfFormula& f, const Assignment& tau) {
    if (!evaluate(f, tau)) fail("witness-unsatisfied", "assignment does not satisfy the formula");
    switch (inst.kind) {
        case ProblemKind::IndependentSet: return detail::witness_independent_set(inst, f, tau);
        case ProblemKind::DominatingSet: return detail::witness_dominating_set(inst, f, tau);
        case ProblemKind::MaxCut: return detail::witness_max_cut(inst, f, tau);
        case ProblemKind::QColoring:
        case ProblemKind::QListColoring: return detail::witness_coloring(inst, f, tau);
        case ProblemKind::OddCycleTransversal: return detail::witness_oct(inst, f, tau);
        case ProblemKind::TrianglePacking: return detail::witness_triangle_packing(inst, f, tau);
        case ProblemKind::PartitionIntoTriangles:
            fail("experimental-unsupported",
                 "partition witnesses are not constructible; the packing instance is the canonical one");
    }
    fail("invalid-kind", "unknown kind enum");
}

} // namespace sethforge
