#include <algorithm>
#include <array>
#include <string>

#include "sethforge/reductions.hpp"

namespace sethforge {

namespace {

std::vector<int> subset_offsets_ds(int s, int p) {
    std::vector<int> o(p);
    for (int j = p - 1; j >= 0; --j) {
        o[j] = s % 3 + 1;
        s /= 3;
    }
    return o;
}

struct DsLayout {
    int n = 0, m = 0, p = 0, t = 0, G = 0, pow3 = 0;  // G gadgets per group
    VariableGrouping grouping;
    Graph g;

    // pv[i][j][l][pos-1]: group i, gadget j, path l, position 1..3
    std::vector<std::vector<std::vector<std::array<int, 3>>>> pv;
    std::vector<std::vector<std::vector<int>>> guard1, guard2;  // [i][j][l]
    std::vector<std::vector<std::vector<int>>> xs, xps;         // [i][j][S]
    std::vector<std::vector<int>> guardx;                       // [i][j]
    int h = -1, hp = -1;
    std::vector<std::vector<int>> cvert;  // [clause-1][0..2pt]

    std::int64_t target = 0;
    PathDecomposition d;
    std::vector<CostMember> family;
};

DsLayout build_layout(const CnfFormula& f, int p) {
    if (f.num_clauses() == 0) fail("degenerate-input", "dominating set reduction needs m >= 1");
    if (f.num_vars == 0) fail("degenerate-input", "dominating set reduction needs n >= 1");
    if (p < 1) fail("invalid-parameters", "dominating set reduction needs p >= 1");
    if (p > 10) fail("cap-exceeded", "3^p exceeds the configured size cap");
    DsLayout L;
    L.n = f.num_vars;
    L.m = f.num_clauses();
    L.p = p;
    L.grouping = make_groups(f.num_vars, 3, p, Rounding::floor);
    L.t = L.grouping.num_groups();
    L.G = L.m * (2 * p * L.t + 1);
    L.pow3 = 1;
    for (int i = 0; i < p; ++i) L.pow3 *= 3;
    Graph& g = L.g;

    L.pv.assign(L.t, std::vector<std::vector<std::array<int, 3>>>(
                         L.G, std::vector<std::array<int, 3>>(p)));
    L.guard1.assign(L.t, std::vector<std::vector<int>>(L.G, std::vector<int>(p)));
    L.guard2 = L.guard1;
    L.xs.assign(L.t, std::vector<std::vector<int>>(L.G, std::vector<int>(L.pow3)));
    L.xps = L.xs;
    L.guardx.assign(L.t, std::vector<int>(L.G));

    for (int i = 0; i < L.t; ++i)
        for (int j = 0; j < L.G; ++j) {
            std::string base =
                "DS:group=" + std::to_string(i + 1) + ":gadget=" + std::to_string(j + 1);
            for (int l = 0; l < p; ++l) {
                for (int pos = 0; pos < 3; ++pos)
                    L.pv[i][j][l][pos] = g.add_vertex(base + ":path=" + std::to_string(l + 1) +
                                                      ":pos=" + std::to_string(pos + 1));
                L.guard1[i][j][l] = g.add_vertex(base + ":g=" + std::to_string(l + 1));
                L.guard2[i][j][l] = g.add_vertex(base + ":gp=" + std::to_string(l + 1));
                g.add_edge(L.pv[i][j][l][0], L.pv[i][j][l][1]);
                g.add_edge(L.pv[i][j][l][1], L.pv[i][j][l][2]);
                for (int pos = 0; pos < 3; ++pos) {
                    g.add_edge(L.guard1[i][j][l], L.pv[i][j][l][pos]);
                    g.add_edge(L.guard2[i][j][l], L.pv[i][j][l][pos]);
                }
                if (j > 0) g.add_edge(L.pv[i][j - 1][l][2], L.pv[i][j][l][0]);
            }
            for (int s = 0; s < L.pow3; ++s) {
                L.xs[i][j][s] = g.add_vertex(base + ":xs=" + std::to_string(s));
                L.xps[i][j][s] = g.add_vertex(base + ":xps=" + std::to_string(s));
                std::vector<int> offs = subset_offsets_ds(s, p);
                for (int l = 0; l < p; ++l)
                    for (int pos = 1; pos <= 3; ++pos)
                        if (pos != offs[l]) g.add_edge(L.xs[i][j][s], L.pv[i][j][l][pos - 1]);
                g.add_edge(L.xs[i][j][s], L.xps[i][j][s]);
                for (int s2 = 0; s2 < s; ++s2) g.add_edge(L.xps[i][j][s], L.xps[i][j][s2]);
            }
            L.guardx[i][j] = g.add_vertex(base + ":x");
            for (int s = 0; s < L.pow3; ++s) g.add_edge(L.guardx[i][j], L.xps[i][j][s]);
        }

    L.h = g.add_vertex("DS:h");
    L.hp = g.add_vertex("DS:hp");
    g.add_edge(L.h, L.hp);
    for (int i = 0; i < L.t; ++i)
        for (int l = 0; l < p; ++l) {
            g.add_edge(L.h, L.pv[i][0][l][0]);
            g.add_edge(L.h, L.pv[i][L.G - 1][l][2]);
        }

    L.cvert.assign(L.m, std::vector<int>(2 * p * L.t + 1));
    for (int a = 1; a <= L.m; ++a)
        for (int b = 0; b <= 2 * p * L.t; ++b)
            L.cvert[a - 1][b] =
                g.add_vertex("DS:clause=" + std::to_string(a) + ":l=" + std::to_string(b));
    for (int a = 1; a <= L.m; ++a)
        for (int i = 0; i < L.t; ++i)
            for (const GroupAssignment& ga : satisfying_group_assignments(f, L.grouping, i, a - 1)) {
                int s = static_cast<int>(ga.rank());
                for (int b = 0; b <= 2 * p * L.t; ++b)
                    g.add_edge(L.cvert[a - 1][b], L.xps[i][L.m * b + a - 1][s]);
            }

    L.target = static_cast<std::int64_t>(p + 1) * L.t * L.m * (2 * p * L.t + 1) + 1;

    // Sweep: per round one gadget per group is flooded and collapsed to its
    // exit vertices; h rides along in every bag, h' only in the first.
    std::vector<std::vector<int>> frontier(L.t);
    auto base_bag = [&]() {
        std::vector<int> bag = {L.h};
        for (const auto& fr : frontier)
            for (int v : fr) bag.push_back(v);
        return bag;
    };
    auto emit = [&](const std::vector<int>& extra) {
        std::vector<int> bag = base_bag();
        for (int v : extra)
            if (std::find(bag.begin(), bag.end(), v) == bag.end()) bag.push_back(v);
        L.d.bags.push_back(std::move(bag));
    };
    emit({L.hp});
    for (int j = 0; j < L.G; ++j) {
        int a = j % L.m, b = j / L.m;
        int cv = L.cvert[a][b];
        for (int i = 0; i < L.t; ++i) {
            // Flood the gadget paths and guards.
            std::vector<int> pverts;
            for (int l = 0; l < p; ++l)
                for (int pos = 0; pos < 3; ++pos) pverts.push_back(L.pv[i][j][l][pos]);
            frontier[i].clear();
            {
                std::vector<int> extra = pverts;
                extra.push_back(cv);
                for (int l = 0; l < p; ++l) {
                    extra.push_back(L.guard1[i][j][l]);
                    extra.push_back(L.guard2[i][j][l]);
                }
                emit(extra);
            }
            // x_S layer: the primed clique grows while each x_S visits once.
            std::vector<int> acc = pverts;
            acc.push_back(cv);
            for (int s = 0; s < L.pow3; ++s) {
                std::vector<int> extra = acc;
                extra.push_back(L.xs[i][j][s]);
                extra.push_back(L.xps[i][j][s]);
                emit(extra);
                acc.push_back(L.xps[i][j][s]);
            }
            {
                std::vector<int> extra = {cv, L.guardx[i][j]};
                for (int s = 0; s < L.pow3; ++s) extra.push_back(L.xps[i][j][s]);
                for (int l = 0; l < p; ++l) extra.push_back(L.pv[i][j][l][2]);
                emit(extra);
            }
            for (int l = 0; l < p; ++l) frontier[i].push_back(L.pv[i][j][l][2]);
            if (i + 1 < L.t) emit({cv});
        }
        if (j + 1 < L.G) {
            for (int i = 0; i < L.t; ++i)
                for (int l = 0; l < p; ++l) {
                    emit({L.pv[i][j + 1][l][0]});
                    frontier[i][l] = L.pv[i][j + 1][l][0];
                }
        }
    }

    for (int i = 0; i < L.t; ++i)
        for (int j = 0; j < L.G; ++j) {
            for (int l = 0; l < p; ++l) {
                CostMember mem;
                mem.vertices = {L.guard1[i][j][l], L.guard2[i][j][l], L.pv[i][j][l][0],
                                L.pv[i][j][l][1], L.pv[i][j][l][2]};
                mem.shape_tag = "ds:guard";
                L.family.push_back(std::move(mem));
            }
            CostMember mem;
            mem.vertices.push_back(L.guardx[i][j]);
            for (int s = 0; s < L.pow3; ++s) mem.vertices.push_back(L.xps[i][j][s]);
            mem.shape_tag = "ds:xclique";
            L.family.push_back(std::move(mem));
        }
    L.family.push_back({{L.h, L.hp}, "ds:h"});
    return L;
}

} // namespace

Instance reduce_dominating_set(const CnfFormula& f, int p) {
    DsLayout L = build_layout(f, p);
    Instance inst;
    inst.kind = ProblemKind::DominatingSet;
    inst.sense = Sense::at_most;
    inst.target = L.target;
    inst.decomposition = std::move(L.d);
    inst.claimed_width_bound = L.t * p + 2 * L.pow3 + 5 * p + 3;
    inst.meta.n = L.n;
    inst.meta.m = L.m;
    inst.meta.p = p;
    inst.meta.t = L.t;
    inst.meta.beta = L.grouping.group_size;
    inst.cost_family = std::move(L.family);
    inst.graph = std::move(L.g);
    inst.validate();
    return inst;
}

namespace detail {

Solution witness_dominating_set(const Instance& inst, const CnfFormula& f, const Assignment& tau) {
    DsLayout L = build_layout(f, inst.meta.p.value_or(1));
    if (inst.graph.num_vertices() != L.g.num_vertices())
        fail("witness-mismatch", "instance was not produced from this formula");

    Solution sol;
    sol.kind = ProblemKind::DominatingSet;
    sol.vertex_set.push_back(L.h);
    for (int i = 0; i < L.t; ++i) {
        std::uint64_t rank = 0;
        for (int var : L.grouping.groups[i]) rank = (rank << 1) | (tau.values[var - 1] ? 1 : 0);
        std::vector<int> offs = subset_offsets_ds(static_cast<int>(rank), L.p);
        for (int j = 0; j < L.G; ++j) {
            for (int l = 0; l < L.p; ++l)
                sol.vertex_set.push_back(L.pv[i][j][l][offs[l] - 1]);
            sol.vertex_set.push_back(L.xps[i][j][static_cast<int>(rank)]);
        }
    }
    std::sort(sol.vertex_set.begin(), sol.vertex_set.end());
    return sol;
}

} // namespace detail

} // namespace sethforge
