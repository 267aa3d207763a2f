#include <algorithm>
#include <string>

#include "sethforge/reductions.hpp"

namespace sethforge {

namespace {

// Vertex layout is fully determined by (n, m): per variable a path on
// 2m(n+1)+1 vertices and a fan row of 2m(n+1) vertices, then one c/d pair per
// (clause, repetition) slot. to_partition relies on this determinism.
struct TpLayout {
    int n = 0, m = 0;
    int rounds = 0;  // m(n+1)

    int path(int i, int l) const { return (i - 1) * block() + (l - 1); }
    int fan(int i, int l) const { return (i - 1) * block() + 2 * rounds + 1 + (l - 1); }
    int c_vert(int j, int r) const { return n * block() + ((j - 1) * (n + 1) + r) * 2; }
    int d_vert(int j, int r) const { return c_vert(j, r) + 1; }
    int block() const { return 4 * rounds + 1; }
    int base_vertices() const { return n * block() + 2 * m * (n + 1); }
};

TpLayout layout_for(int n, int m) {
    TpLayout L;
    L.n = n;
    L.m = m;
    L.rounds = m * (n + 1);
    return L;
}

// Occurrence targets of clause j (1-based): fan positions per polarity,
// deduplicated so repeated literals do not create parallel edges.
std::vector<int> clause_fan_targets(const TpLayout& L, const CnfFormula& f, int j, int r) {
    std::vector<int> targets;
    for (const Literal& lit : f.clauses[j - 1].literals) {
        int l = lit.positive ? 2 * (L.m * r + j) : 2 * (L.m * r + j) - 1;
        int t = L.fan(lit.var, l);
        if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    return targets;
}

PathDecomposition packing_sweep(const TpLayout& L) {
    PathDecomposition d;
    std::vector<int> frontier(L.n);
    for (int i = 1; i <= L.n; ++i) frontier[i - 1] = L.path(i, 1);
    for (int l = 1; l <= L.rounds; ++l) {
        int j = (l - 1) % L.m + 1;
        int r = (l - 1) / L.m;
        for (int i = 1; i <= L.n; ++i) {
            std::vector<int> bag = frontier;
            bag.push_back(L.c_vert(j, r));
            bag.push_back(L.d_vert(j, r));
            bag.push_back(L.fan(i, 2 * l - 1));
            bag.push_back(L.fan(i, 2 * l));
            bag.push_back(L.path(i, 2 * l));
            bag.push_back(L.path(i, 2 * l + 1));
            d.bags.push_back(std::move(bag));
            frontier[i - 1] = L.path(i, 2 * l + 1);
        }
    }
    return d;
}

} // namespace

Instance reduce_triangle_packing(const CnfFormula& f) {
    if (f.num_clauses() == 0) fail("degenerate-input", "triangle packing reduction needs m >= 1");
    if (f.num_vars == 0) fail("degenerate-input", "triangle packing reduction needs n >= 1");
    const int n = f.num_vars, m = f.num_clauses();
    TpLayout L = layout_for(n, m);

    Graph g(L.base_vertices());
    for (int i = 1; i <= n; ++i) {
        for (int l = 1; l <= 2 * L.rounds + 1; ++l)
            g.set_label(L.path(i, l), "TP:path=" + std::to_string(i) + ":pos=" + std::to_string(l));
        for (int l = 1; l <= 2 * L.rounds; ++l) {
            g.set_label(L.fan(i, l), "TP:fan=" + std::to_string(i) + ":pos=" + std::to_string(l));
            g.add_edge(L.fan(i, l), L.path(i, l));
            g.add_edge(L.fan(i, l), L.path(i, l + 1));
        }
        for (int l = 1; l <= 2 * L.rounds; ++l) g.add_edge(L.path(i, l), L.path(i, l + 1));
    }
    for (int j = 1; j <= m; ++j)
        for (int r = 0; r <= n; ++r) {
            std::string base = "TP:clause=" + std::to_string(j) + ":r=" + std::to_string(r);
            g.set_label(L.c_vert(j, r), base + ":c");
            g.set_label(L.d_vert(j, r), base + ":d");
            g.add_edge(L.c_vert(j, r), L.d_vert(j, r));
            for (int t : clause_fan_targets(L, f, j, r)) {
                g.add_edge(L.c_vert(j, r), t);
                g.add_edge(L.d_vert(j, r), t);
            }
        }

    Instance inst;
    inst.kind = ProblemKind::TrianglePacking;
    inst.graph = std::move(g);
    inst.sense = Sense::at_least;
    inst.target = static_cast<std::int64_t>(m) * n * (n + 1) + static_cast<std::int64_t>(m) * (n + 1);
    inst.decomposition = packing_sweep(L);
    inst.claimed_width_bound = n + 10;
    inst.meta.n = n;
    inst.meta.m = m;
    inst.validate();
    return inst;
}

Instance to_partition(const Instance& packing) {
    if (packing.kind != ProblemKind::TrianglePacking)
        fail("shape-mismatch", "to_partition expects a TrianglePacking instance");
    const int n = packing.meta.n, m = packing.meta.m;
    TpLayout L = layout_for(n, m);
    if (packing.graph.num_vertices() != L.base_vertices())
        fail("shape-mismatch", "instance does not look like a reduce_triangle_packing output");

    Instance inst = packing;
    inst.kind = ProblemKind::PartitionIntoTriangles;
    inst.sense = Sense::feasible;
    inst.target.reset();
    inst.experimental = true;
    Graph& g = inst.graph;

    int removed = (2 * n + 2) % 3;
    // clique(i, l) vertices, 1-based i and l; the last variable's cliques shrink.
    std::vector<std::vector<std::vector<int>>> q(n + 1,
                                                 std::vector<std::vector<int>>(L.rounds + 1));
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= L.rounds; ++l) {
            int size = i == n ? 4 - removed : 4;
            for (int a = 0; a < size; ++a)
                q[i][l].push_back(g.add_vertex("TP:Q=" + std::to_string(i) + "." + std::to_string(l) +
                                               ":" + std::to_string(a + 1)));
            for (int a = 0; a < size; ++a)
                for (int b = a + 1; b < size; ++b) g.add_edge(q[i][l][a], q[i][l][b]);
            for (int a : q[i][l]) {
                g.add_edge(a, L.fan(i, 2 * l - 1));
                g.add_edge(a, L.fan(i, 2 * l));
            }
            if (i > 1)
                for (int a : q[i - 1][l])
                    for (int b : q[i][l]) g.add_edge(a, b);
        }

    PathDecomposition d;
    std::vector<int> frontier(n);
    for (int i = 1; i <= n; ++i) frontier[i - 1] = L.path(i, 1);
    for (int l = 1; l <= L.rounds; ++l) {
        int j = (l - 1) % m + 1;
        int r = (l - 1) / m;
        for (int i = 1; i <= n; ++i) {
            std::vector<int> stage = frontier;
            stage.push_back(L.c_vert(j, r));
            stage.push_back(L.d_vert(j, r));
            std::vector<int> b1 = stage;
            b1.push_back(L.fan(i, 2 * l - 1));
            b1.push_back(L.fan(i, 2 * l));
            b1.push_back(L.path(i, 2 * l));
            b1.push_back(L.path(i, 2 * l + 1));
            for (int a : q[i][l]) b1.push_back(a);
            frontier[i - 1] = L.path(i, 2 * l + 1);
            d.bags.push_back(std::move(b1));
            if (i < n) {
                std::vector<int> b2 = frontier;
                b2.push_back(L.c_vert(j, r));
                b2.push_back(L.d_vert(j, r));
                for (int a : q[i][l]) b2.push_back(a);
                for (int a : q[i + 1][l]) b2.push_back(a);
                d.bags.push_back(std::move(b2));
            }
        }
    }
    inst.decomposition = std::move(d);
    inst.claimed_width_bound = n + 10;
    inst.validate();
    return inst;
}

namespace detail {

Solution witness_triangle_packing(const Instance& inst, const CnfFormula& f, const Assignment& tau) {
    const int n = f.num_vars, m = f.num_clauses();
    TpLayout L = layout_for(n, m);
    if (inst.graph.num_vertices() != L.base_vertices() || inst.meta.n != n)
        fail("witness-mismatch", "instance was not produced from this formula");

    Solution sol;
    sol.kind = ProblemKind::TrianglePacking;
    for (int i = 1; i <= n; ++i) {
        bool val = tau.values[i - 1];
        for (int l = 1; l <= L.rounds; ++l) {
            if (val)
                sol.triangles.push_back({L.fan(i, 2 * l - 1), L.path(i, 2 * l - 1), L.path(i, 2 * l)});
            else
                sol.triangles.push_back({L.fan(i, 2 * l), L.path(i, 2 * l), L.path(i, 2 * l + 1)});
        }
    }
    for (int j = 1; j <= m; ++j) {
        const Literal* chosen = nullptr;
        for (const Literal& lit : f.clauses[j - 1].literals)
            if (tau.values[lit.var - 1] == lit.positive) { chosen = &lit; break; }
        if (!chosen) fail("witness-unsatisfied", "clause without true literal");
        for (int r = 0; r <= n; ++r) {
            int l = chosen->positive ? 2 * (m * r + j) : 2 * (m * r + j) - 1;
            sol.triangles.push_back({L.c_vert(j, r), L.d_vert(j, r), L.fan(chosen->var, l)});
        }
    }
    return sol;
}

} // namespace detail

} // namespace sethforge
