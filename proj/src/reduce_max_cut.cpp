#include <algorithm>
#include <string>

#include "sethforge/reductions.hpp"

namespace sethforge {

namespace {

// Weighted layout: x0, one vertex per variable, then per clause a path on
// 4|C_j| vertices tied to x0 as an odd cycle. Literal k of C_j (1-based,
// clause order) occupies path positions (4k-2, 4k-1) when positive and
// (4k-3, 4k-2) when negative, so slots never collide and never touch the
// last path vertex.
struct McLayout {
    int n = 0, m = 0;
    std::vector<int> clause_base;  // first path vertex index per clause
    std::vector<int> clause_size;

    int x0() const { return 0; }
    int var(int i) const { return i; }
    int path(int j, int pos) const { return clause_base[j - 1] + pos - 1; }
    int slot_start(int k, bool positive) const { return positive ? 4 * k - 2 : 4 * k - 3; }
};

McLayout layout_for(const CnfFormula& f) {
    McLayout L;
    L.n = f.num_vars;
    L.m = f.num_clauses();
    int next = 1 + L.n;
    for (const Clause& c : f.clauses) {
        L.clause_base.push_back(next);
        L.clause_size.push_back(c.size());
        next += 4 * c.size();
    }
    return L;
}

} // namespace

Instance reduce_max_cut_weighted(const CnfFormula& f) {
    if (f.num_clauses() == 0) fail("degenerate-input", "max cut reduction needs m >= 1");
    if (f.num_vars == 0) fail("degenerate-input", "max cut reduction needs n >= 1");
    const int n = f.num_vars, m = f.num_clauses();
    McLayout L = layout_for(f);

    Graph g(1 + n);
    g.set_label(0, "MC:x0");
    for (int i = 1; i <= n; ++i) g.set_label(i, "MC:var=" + std::to_string(i));
    std::int64_t heavy = 3 * static_cast<std::int64_t>(n);
    std::int64_t sum_c = 0;
    for (int j = 1; j <= m; ++j) {
        int c = L.clause_size[j - 1];
        sum_c += c;
        for (int pos = 1; pos <= 4 * c; ++pos) {
            int v = g.add_vertex("MC:clause=" + std::to_string(j) + ":pos=" + std::to_string(pos));
            if (v != L.path(j, pos)) fail("internal", "max cut layout mismatch");
        }
        for (int pos = 1; pos < 4 * c; ++pos) g.add_edge(L.path(j, pos), L.path(j, pos + 1), heavy);
        g.add_edge(L.x0(), L.path(j, 1), heavy);
        g.add_edge(L.x0(), L.path(j, 4 * c), heavy);
        int k = 0;
        for (const Literal& lit : f.clauses[j - 1].literals) {
            ++k;
            int s = L.slot_start(k, lit.positive);
            g.add_edge(L.var(lit.var), L.path(j, s), 1);
            g.add_edge(L.var(lit.var), L.path(j, s + 1), 1);
        }
    }

    Instance inst;
    inst.kind = ProblemKind::MaxCut;
    inst.sense = Sense::at_least;
    inst.target = m + (12 * static_cast<std::int64_t>(n) + 1) * sum_c;
    inst.meta.n = n;
    inst.meta.m = m;
    inst.meta.W = g.total_weight();
    inst.claimed_width_bound = n + 5;

    PathDecomposition d;
    std::vector<int> ctx(n + 1);
    for (int i = 0; i <= n; ++i) ctx[i] = i;
    for (int j = 1; j <= m; ++j) {
        int c = L.clause_size[j - 1];
        for (int pos = 1; pos < 4 * c; ++pos) {
            std::vector<int> bag = ctx;
            bag.push_back(L.path(j, pos));
            bag.push_back(L.path(j, pos + 1));
            d.bags.push_back(std::move(bag));
        }
    }
    inst.decomposition = std::move(d);
    inst.graph = std::move(g);
    inst.validate();
    return inst;
}

Instance expand_to_unweighted(const Instance& weighted) {
    if (weighted.kind != ProblemKind::MaxCut)
        fail("shape-mismatch", "expand_to_unweighted expects a MaxCut instance");
    const Graph& gw = weighted.graph;

    Instance inst;
    inst.kind = ProblemKind::MaxCut;
    inst.sense = Sense::at_least;
    inst.meta = weighted.meta;
    std::int64_t W = gw.total_weight();
    inst.meta.W = W;
    inst.target = 2 * W + weighted.target.value_or(0);

    Graph g(gw.num_vertices());
    for (int v = 0; v < gw.num_vertices(); ++v) g.set_label(v, gw.label(v));

    // Each weight-w edge becomes w three-edge paths; the two interior vertices
    // of every replacement path join a bag that already holds both endpoints.
    std::vector<std::vector<std::pair<int, int>>> inserts(weighted.decomposition.bags.size());
    std::vector<int> first_bag_with_both(gw.num_edges(), -1);
    {
        const auto& bags = weighted.decomposition.bags;
        for (int b = 0; b < static_cast<int>(bags.size()); ++b) {
            std::vector<char> in(gw.num_vertices(), 0);
            for (int v : bags[b]) in[v] = 1;
            for (int e = 0; e < gw.num_edges(); ++e)
                if (first_bag_with_both[e] < 0 && in[gw.edges()[e].u] && in[gw.edges()[e].v])
                    first_bag_with_both[e] = b;
        }
    }
    for (int e = 0; e < gw.num_edges(); ++e) {
        const auto& edge = gw.edges()[e];
        if (first_bag_with_both[e] < 0) fail("internal", "edge uncovered in weighted decomposition");
        std::string base = "MC:sub=" + std::to_string(edge.u + 1) + ":" + std::to_string(edge.v + 1) + ":";
        for (int r = 0; r < edge.weight; ++r) {
            int a = g.add_vertex(base + std::to_string(r + 1) + ":a");
            int b = g.add_vertex(base + std::to_string(r + 1) + ":b");
            g.add_edge(edge.u, a);
            g.add_edge(a, b);
            g.add_edge(b, edge.v);
            inserts[first_bag_with_both[e]].push_back({a, b});
        }
    }

    PathDecomposition d;
    for (int b = 0; b < static_cast<int>(weighted.decomposition.bags.size()); ++b) {
        d.bags.push_back(weighted.decomposition.bags[b]);
        for (auto& [a, bb] : inserts[b]) {
            std::vector<int> bag = weighted.decomposition.bags[b];
            bag.push_back(a);
            bag.push_back(bb);
            d.bags.push_back(std::move(bag));
        }
    }
    inst.decomposition = std::move(d);
    inst.claimed_width_bound = std::max(weighted.claimed_width_bound,
                                        validate_path_decomposition(g, inst.decomposition));
    inst.graph = std::move(g);
    inst.validate();
    return inst;
}

namespace detail {

namespace {

// Lemma 7 sides on the weighted layout: x0 on side 0, true variables on side
// 1, and each clause path alternating except across the chosen literal's slot.
std::vector<int> weighted_sides(const McLayout& L, const CnfFormula& f, const Assignment& tau) {
    std::vector<int> side(1 + L.n, 0);
    side[L.x0()] = 0;
    for (int i = 1; i <= L.n; ++i) side[L.var(i)] = tau.values[i - 1] ? 1 : 0;
    for (int j = 1; j <= L.m; ++j) {
        int c = L.clause_size[j - 1];
        int k = 0, chosen_start = -1;
        for (const Literal& lit : f.clauses[j - 1].literals) {
            ++k;
            if (tau.values[lit.var - 1] == lit.positive) {
                chosen_start = L.slot_start(k, lit.positive);
                break;
            }
        }
        if (chosen_start < 0) fail("witness-unsatisfied", "clause without true literal");
        for (int pos = 1; pos <= 4 * c; ++pos) {
            bool flipped = pos > chosen_start;
            int s = flipped ? (pos % 2 == 0 ? 1 : 0) : (pos % 2 == 1 ? 1 : 0);
            side.push_back(s);
        }
    }
    return side;
}

} // namespace

Solution witness_max_cut(const Instance& inst, const CnfFormula& f, const Assignment& tau) {
    McLayout L = layout_for(f);
    Instance weighted = reduce_max_cut_weighted(f);
    std::vector<int> side = weighted_sides(L, f, tau);

    Solution sol;
    sol.kind = ProblemKind::MaxCut;
    if (!inst.graph.is_unweighted()) {
        if (inst.graph.num_vertices() != weighted.graph.num_vertices())
            fail("witness-mismatch", "instance was not produced from this formula");
        sol.side_of = side;
        return sol;
    }
    // Expanded instance: interior vertices in construction order per edge.
    if (static_cast<std::int64_t>(inst.graph.num_vertices()) !=
        weighted.graph.num_vertices() + 2 * *weighted.meta.W)
        fail("witness-mismatch", "instance was not produced from this formula");
    sol.side_of = side;
    sol.side_of.resize(inst.graph.num_vertices());
    int next = weighted.graph.num_vertices();
    for (const auto& e : weighted.graph.edges())
        for (int r = 0; r < e.weight; ++r) {
            sol.side_of[next++] = 1 - side[e.u];  // a
            sol.side_of[next++] = side[e.u];      // b
        }
    return sol;
}

} // namespace detail

} // namespace sethforge
