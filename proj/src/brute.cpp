#include "sethforge/brute.hpp"

#include <algorithm>
#include <functional>

namespace sethforge {
namespace brute {

namespace {
using i64 = std::int64_t;

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.num_vertices() > cap)
        fail("cap-exceeded", std::string(what) + ": " + std::to_string(g.num_vertices()) +
                                 " vertices exceeds enumeration cap " + std::to_string(cap));
}
} // namespace

i64 max_independent_set(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 64) fail("cap-exceeded", "max_independent_set limited to 64 vertices");
    // Branch and bound on the highest-degree remaining vertex.
    std::vector<std::uint64_t> nb(n, 0);
    for (const auto& e : g.edges()) {
        nb[e.u] |= std::uint64_t{1} << e.v;
        nb[e.v] |= std::uint64_t{1} << e.u;
    }
    i64 best = 0;
    std::function<void(std::uint64_t, i64)> go = [&](std::uint64_t avail, i64 have) {
        if (have + static_cast<i64>(__builtin_popcountll(avail)) <= best) return;
        if (!avail) {
            best = std::max(best, have);
            return;
        }
        int pick = -1, deg = -1;
        for (std::uint64_t rest = avail; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            int d = __builtin_popcountll(nb[v] & avail);
            if (d > deg) { deg = d; pick = v; }
        }
        if (deg <= 1) {
            // Simple components: greedily resolvable exactly.
            i64 extra = 0;
            std::uint64_t rest = avail;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                ++extra;
                rest &= ~nb[v];
            }
            best = std::max(best, have + extra);
            return;
        }
        go(avail & ~(nb[pick] | (std::uint64_t{1} << pick)), have + 1);
        go(avail & ~(std::uint64_t{1} << pick), have);
    };
    go(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
    return best;
}

i64 min_dominating_set(const Graph& g, int cap) {
    check_cap(g, cap, "min_dominating_set");
    const int n = g.num_vertices();
    std::vector<std::uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = std::uint32_t{1} << v;
        for (auto& [w, idx] : g.neighbors(v)) closed[v] |= std::uint32_t{1} << w;
    }
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    i64 best = n;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) {
            if (mask == all) break;
            continue;
        }
        std::uint32_t dom = 0;
        for (std::uint32_t rest = mask; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            dom |= closed[v];
        }
        if (dom == all) best = size;
        if (mask == all) break;
    }
    return best;
}

i64 max_cut(const Graph& g, int cap) {
    check_cap(g, cap, "max_cut");
    const int n = g.num_vertices();
    if (n == 0) return 0;
    i64 best = 0;
    std::uint32_t lim = n == 1 ? 1 : (1u << (n - 1));
    for (std::uint32_t mask = 0; mask < lim; ++mask) {
        i64 w = 0;
        for (const auto& e : g.edges())
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) w += e.weight;
        best = std::max(best, w);
    }
    return best;
}

bool colorable(const Graph& g, int q, const std::map<int, std::vector<int>>& lists, int cap) {
    check_cap(g, cap, "colorable");
    const int n = g.num_vertices();
    std::vector<std::vector<int>> allowed(n);
    for (int v = 0; v < n; ++v) {
        auto it = lists.find(v);
        if (it != lists.end()) allowed[v] = it->second;
        else
            for (int c = 1; c <= q; ++c) allowed[v].push_back(c);
    }
    std::vector<int> color(n, 0);
    std::function<bool(int)> go = [&](int v) {
        if (v == n) return true;
        for (int c : allowed[v]) {
            bool ok = true;
            for (auto& [w, idx] : g.neighbors(v))
                if (w < v && color[w] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            if (go(v + 1)) return true;
        }
        color[v] = 0;
        return false;
    };
    return go(0);
}

namespace {
bool bipartite_without(const Graph& g, std::uint32_t removed) {
    const int n = g.num_vertices();
    std::vector<int> side(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if ((removed >> s) & 1) continue;
        if (side[s] != -1) continue;
        side[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (auto& [w, idx] : g.neighbors(v)) {
                if ((removed >> w) & 1) continue;
                if (side[w] == -1) {
                    side[w] = side[v] ^ 1;
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}
} // namespace

i64 min_odd_cycle_transversal(const Graph& g, int cap) {
    check_cap(g, cap, "min_odd_cycle_transversal");
    const int n = g.num_vertices();
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    i64 best = n;
    for (std::uint32_t mask = 0;; ++mask) {
        int size = __builtin_popcount(mask);
        if (size < best && bipartite_without(g, mask)) best = size;
        if (mask == all) break;
    }
    return best;
}

namespace {
std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> tris;
    const int n = g.num_vertices();
    for (int a = 0; a < n; ++a)
        for (auto& [b, i1] : g.neighbors(a)) {
            if (b <= a) continue;
            for (auto& [c, i2] : g.neighbors(b)) {
                if (c <= b) continue;
                if (g.has_edge(a, c)) tris.push_back({a, b, c});
            }
        }
    return tris;
}
} // namespace

i64 max_triangle_packing(const Graph& g) {
    const int n = g.num_vertices();
    auto tris = all_triangles(g);
    std::vector<std::vector<int>> at(n);
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
        for (int v : tris[t]) at[v].push_back(t);
    std::vector<char> used(n, 0);
    i64 best = 0;
    // Branch on the lowest undecided vertex: skip it or pack one of its triangles.
    std::function<void(int, i64, i64)> go = [&](int v, i64 have, i64 remaining_budget) {
        if (have + remaining_budget <= best) return;
        while (v < n && used[v]) ++v;
        if (v == n) {
            best = std::max(best, have);
            return;
        }
        for (int t : at[v]) {
            auto& tr = tris[t];
            if (used[tr[0]] || used[tr[1]] || used[tr[2]]) continue;
            used[tr[0]] = used[tr[1]] = used[tr[2]] = 1;
            go(v + 1, have + 1, remaining_budget - 1);
            used[tr[0]] = used[tr[1]] = used[tr[2]] = 0;
        }
        used[v] = 2;  // decided: not in any triangle
        go(v + 1, have, remaining_budget);
        used[v] = 0;
    };
    go(0, 0, static_cast<i64>(n) / 3);
    return best;
}

bool partition_into_triangles(const Graph& g) {
    const int n = g.num_vertices();
    if (n % 3 != 0) return false;
    auto tris = all_triangles(g);
    std::vector<std::vector<int>> at(n);
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
        for (int v : tris[t]) at[v].push_back(t);
    std::vector<char> used(n, 0);
    std::function<bool(int)> go = [&](int v) {
        while (v < n && used[v]) ++v;
        if (v == n) return true;
        for (int t : at[v]) {
            auto& tr = tris[t];
            if (used[tr[0]] || used[tr[1]] || used[tr[2]]) continue;
            used[tr[0]] = used[tr[1]] = used[tr[2]] = 1;
            if (go(v + 1)) return true;
            used[tr[0]] = used[tr[1]] = used[tr[2]] = 0;
        }
        return false;
    };
    return go(0);
}

Answer brute_force(const Instance& inst) {
    Answer a;
    const Graph& g = inst.graph;
    switch (inst.kind) {
        case ProblemKind::IndependentSet:
            if (g.num_vertices() > 44) fail("cap-exceeded", "independent set search capped at 44 vertices");
            a.optimum = max_independent_set(g);
            a.feasible = true;
            break;
        case ProblemKind::DominatingSet:
            a.optimum = min_dominating_set(g);
            a.feasible = true;
            break;
        case ProblemKind::MaxCut:
            a.optimum = max_cut(g);
            a.feasible = true;
            break;
        case ProblemKind::QColoring:
        case ProblemKind::QListColoring:
            a.feasible = colorable(g, inst.meta.q.value_or(3), inst.lists);
            a.optimum = a.feasible ? 1 : 0;
            a.verdict = a.feasible;
            return a;
        case ProblemKind::OddCycleTransversal:
            a.optimum = min_odd_cycle_transversal(g);
            a.feasible = true;
            break;
        case ProblemKind::TrianglePacking:
            if (g.num_vertices() > 44) fail("cap-exceeded", "triangle packing search capped at 44 vertices");
            a.optimum = max_triangle_packing(g);
            a.feasible = true;
            break;
        case ProblemKind::PartitionIntoTriangles:
            a.feasible = partition_into_triangles(g);
            a.optimum = a.feasible ? g.num_vertices() / 3 : 0;
            a.verdict = a.feasible;
            return a;
    }
    if (inst.target)
        a.verdict = inst.sense == Sense::at_least ? (*a.optimum >= *inst.target)
                                                  : (*a.optimum <= *inst.target);
    return a;
}

} // namespace brute
} // namespace sethforge
