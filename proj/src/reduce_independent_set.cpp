#include <algorithm>
#include <string>

#include "sethforge/reductions.hpp"

namespace sethforge {

namespace {

// Layout of the chained-copies construction: n+1 copies of G1, where G1 has
// one 2m-vertex path per variable and one ladder gadget per clause. Literal
// occurrences are attached rung by rung, negatives first, so the sweep can
// advance each path searcher exactly once per round.
struct IsLayout {
    CnfFormula padded;
    int n = 0, m = 0;
    std::vector<std::vector<std::pair<int, bool>>> occ;  // per clause: (var, positive), negatives first

    Graph g;
    // path[k][i-1][l-1], copies k = 0..n
    std::vector<std::vector<std::vector<int>>> path;
    struct GadgetIdx {
        std::vector<int> cp, cpp, lit;
        int start = -1, end = -1;
    };
    std::vector<std::vector<GadgetIdx>> gadget;  // [copy][clause]

    PathDecomposition d;
    std::vector<CostMember> family;
    std::int64_t target = 0;
};

IsLayout build_layout(const CnfFormula& input) {
    if (input.num_clauses() == 0) fail("degenerate-input", "independent set reduction needs m >= 1");
    IsLayout L;
    L.padded = pad_to_even(input);
    L.n = L.padded.num_vars;
    L.m = L.padded.num_clauses();
    const int n = L.n, m = L.m;

    L.occ.resize(m);
    for (int j = 0; j < m; ++j) {
        for (const Literal& lit : L.padded.clauses[j].literals)
            L.occ[j].push_back({lit.var, lit.positive});
        std::stable_sort(L.occ[j].begin(), L.occ[j].end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
    }

    L.path.assign(n + 1, std::vector<std::vector<int>>(n, std::vector<int>(2 * m, -1)));
    L.gadget.assign(n + 1, std::vector<IsLayout::GadgetIdx>(m));
    for (int k = 0; k <= n; ++k) {
        for (int i = 1; i <= n; ++i)
            for (int l = 1; l <= 2 * m; ++l)
                L.path[k][i - 1][l - 1] = L.g.add_vertex("IS:copy=" + std::to_string(k + 1) + ":path=" +
                                                         std::to_string(i) + ":pos=" + std::to_string(l));
        for (int j = 0; j < m; ++j) {
            auto& gd = L.gadget[k][j];
            int c = static_cast<int>(L.occ[j].size());
            std::string base = "IS:copy=" + std::to_string(k + 1) + ":clause=" + std::to_string(j + 1);
            for (int a = 1; a <= c; ++a) {
                gd.cp.push_back(L.g.add_vertex(base + ":cp=" + std::to_string(a)));
                gd.cpp.push_back(L.g.add_vertex(base + ":cpp=" + std::to_string(a)));
                gd.lit.push_back(L.g.add_vertex(base + ":lit=" + std::to_string(a)));
            }
            gd.start = L.g.add_vertex(base + ":start");
            gd.end = L.g.add_vertex(base + ":end");
        }
    }

    for (int k = 0; k <= n; ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int l = 1; l < 2 * m; ++l)
                L.g.add_edge(L.path[k][i - 1][l - 1], L.path[k][i - 1][l]);
            if (k < n) L.g.add_edge(L.path[k][i - 1][2 * m - 1], L.path[k + 1][i - 1][0]);
        }
        for (int j = 0; j < m; ++j) {
            auto& gd = L.gadget[k][j];
            int c = static_cast<int>(gd.cp.size());
            for (int a = 0; a < c; ++a) {
                if (a + 1 < c) {
                    L.g.add_edge(gd.cp[a], gd.cp[a + 1]);
                    L.g.add_edge(gd.cpp[a], gd.cpp[a + 1]);
                }
                L.g.add_edge(gd.cp[a], gd.cpp[a]);
                L.g.add_edge(gd.lit[a], gd.cp[a]);
                L.g.add_edge(gd.lit[a], gd.cpp[a]);
                auto [var, positive] = L.occ[j][a];
                int pos = positive ? 2 * (j + 1) : 2 * (j + 1) - 1;
                L.g.add_edge(gd.lit[a], L.path[k][var - 1][pos - 1]);
            }
            L.g.add_edge(gd.start, gd.cp[0]);
            L.g.add_edge(gd.end, gd.cp[c - 1]);
        }
    }

    // Sweep: n path searchers plus a three-wide ladder scan per gadget.
    std::vector<int> frontier(n);  // current position (1-based) per variable
    auto emit = [&](std::vector<int> extra, int copy) {
        std::vector<int>& bag = extra;
        for (int i = 1; i <= n; ++i) bag.push_back(L.path[copy][i - 1][frontier[i - 1] - 1]);
        L.d.bags.push_back(std::move(bag));
    };
    for (int k = 0; k <= n; ++k) {
        for (int i = 0; i < n; ++i) frontier[i] = 1;
        for (int j = 0; j < m; ++j) {
            auto& gd = L.gadget[k][j];
            int c = static_cast<int>(gd.cp.size());
            emit({gd.start, gd.cp[0], gd.cpp[0]}, k);
            for (int a = 0; a < c; ++a) {
                auto [var, positive] = L.occ[j][a];
                if (positive && frontier[var - 1] == 2 * (j + 1) - 1) {
                    // Slide this searcher forward; keep the rung alive.
                    std::vector<int> bag = {gd.cp[a], gd.cpp[a], L.path[k][var - 1][2 * (j + 1) - 1]};
                    emit(std::move(bag), k);
                    frontier[var - 1] = 2 * (j + 1);
                }
                emit({gd.cp[a], gd.cpp[a], gd.lit[a]}, k);
                if (a + 1 < c) emit({gd.cp[a], gd.cpp[a], gd.cp[a + 1], gd.cpp[a + 1]}, k);
            }
            emit({gd.cp[c - 1], gd.cpp[c - 1], gd.end}, k);
            // Advance every searcher to the next round's start position.
            for (int i = 1; i <= n; ++i) {
                if (frontier[i - 1] == 2 * (j + 1) - 1) {
                    emit({L.path[k][i - 1][2 * (j + 1) - 1]}, k);
                    frontier[i - 1] = 2 * (j + 1);
                }
                if (j + 1 < m) {
                    emit({L.path[k][i - 1][2 * (j + 1)]}, k);
                    frontier[i - 1] = 2 * (j + 1) + 1;
                }
            }
        }
        if (k < n) {
            // Slide onto the first vertices of the next copy.
            for (int i = 1; i <= n; ++i) {
                std::vector<int> bag;
                for (int i2 = 1; i2 <= n; ++i2)
                    bag.push_back(i2 < i ? L.path[k + 1][i2 - 1][0]
                                         : L.path[k][i2 - 1][frontier[i2 - 1] - 1]);
                bag.push_back(L.path[k + 1][i - 1][0]);
                L.d.bags.push_back(std::move(bag));
            }
        }
    }

    std::int64_t sum_c = 0;
    for (int j = 0; j < m; ++j) sum_c += static_cast<int>(L.occ[j].size());
    L.target = static_cast<std::int64_t>(n + 1) * (static_cast<std::int64_t>(m) * n + sum_c + 2 * m);

    for (int k = 0; k <= n; ++k) {
        for (int i = 1; i <= n; ++i)
            for (int l = 1; l <= 2 * m; l += 2)
                L.family.push_back({{L.path[k][i - 1][l - 1], L.path[k][i - 1][l]}, "is:pair"});
        for (int j = 0; j < m; ++j) {
            auto& gd = L.gadget[k][j];
            for (int a = 0; a < static_cast<int>(gd.cp.size()); ++a)
                L.family.push_back({{gd.cp[a], gd.cpp[a], gd.lit[a]}, "is:rung"});
        }
    }
    return L;
}

} // namespace

Instance reduce_independent_set(const CnfFormula& f) {
    IsLayout L = build_layout(f);
    Instance inst;
    inst.kind = ProblemKind::IndependentSet;
    inst.graph = std::move(L.g);
    inst.sense = Sense::at_least;
    inst.target = L.target;
    inst.decomposition = std::move(L.d);
    inst.claimed_width_bound = L.n + 4;
    inst.meta.n = L.n;
    inst.meta.m = L.m;
    inst.cost_family = std::move(L.family);
    inst.validate();
    return inst;
}

namespace detail {

Solution witness_independent_set(const Instance& inst, const CnfFormula& f, const Assignment& tau) {
    IsLayout L = build_layout(f);
    if (L.g.num_vertices() != inst.graph.num_vertices())
        fail("witness-mismatch", "instance was not produced from this formula");
    Assignment t = tau;
    if (L.n == f.num_vars + 1) t.values.push_back(false);  // padding variable forced false
    if (!evaluate(L.padded, t)) fail("witness-unsatisfied", "assignment does not satisfy the formula");

    Solution sol;
    sol.kind = ProblemKind::IndependentSet;
    for (int k = 0; k <= L.n; ++k) {
        for (int i = 1; i <= L.n; ++i) {
            int start = t.values[i - 1] ? 1 : 2;
            for (int l = start; l <= 2 * L.m; l += 2) sol.vertex_set.push_back(L.path[k][i - 1][l - 1]);
        }
        for (int j = 0; j < L.m; ++j) {
            auto& gd = L.gadget[k][j];
            int c = static_cast<int>(gd.cp.size());
            int astar = -1;
            for (int a = 0; a < c; ++a) {
                auto [var, positive] = L.occ[j][a];
                if (t.values[var - 1] == positive) { astar = a + 1; break; }
            }
            if (astar < 0) fail("witness-unsatisfied", "clause without true literal");
            sol.vertex_set.push_back(gd.lit[astar - 1]);
            sol.vertex_set.push_back(gd.start);
            sol.vertex_set.push_back(gd.end);
            for (int col = 1; col <= c; ++col) {
                if (col == astar) continue;
                bool use_cpp = col < astar ? (col % 2 == 1) : (col % 2 == 0);
                sol.vertex_set.push_back(use_cpp ? gd.cpp[col - 1] : gd.cp[col - 1]);
            }
        }
    }
    std::sort(sol.vertex_set.begin(), sol.vertex_set.end());
    return sol;
}

} // namespace detail

} // namespace sethforge
