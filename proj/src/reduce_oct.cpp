#include <algorithm>
#include <array>
#include <string>

#include "sethforge/reductions.hpp"

namespace sethforge {

namespace {

// Good subsets of a block are selections of one position (1..3) per path;
// subset index s maps to per-path offsets via base-3 digits, path 1 most
// significant. Group assignments inject by rank, which needs 2^beta <= 3^p
// and therefore floor rounding in the grouping.
std::vector<int> subset_offsets(int s, int p) {
    std::vector<int> o(p);
    for (int j = p - 1; j >= 0; --j) {
        o[j] = s % 3 + 1;
        s /= 3;
    }
    return o;
}

struct OctLayout {
    int n = 0, m = 0, p = 0, t = 0, K = 0, path_len = 0, pow3 = 0;
    VariableGrouping grouping;
    Graph g;

    std::vector<std::vector<std::vector<int>>> path;  // [i][j][pos-1]
    // tri[i][j][pos-1] = {a, b, q}; pos ranges over 1..path_len-1
    std::vector<std::vector<std::vector<std::array<int, 3>>>> tri;
    std::vector<std::vector<std::vector<int>>> Lset, Rset;          // [i][l][idx], idx 0 special
    std::vector<std::vector<std::vector<std::vector<int>>>> X;      // [i][l][S][idx], idx 0 = x
    std::vector<std::vector<std::vector<int>>> Y;                   // [i][l][idx]

    struct CcVert {
        int vertex = -1;
        int group = -1;
        std::uint64_t rank = 0;
        bool dummy = false;
    };
    std::vector<std::vector<std::vector<CcVert>>> cc;  // [h-1][r]

    struct Arrow {
        int u = -1, v = -1;
        std::array<int, 7> inner{};  // a1 a2 a3 b1 b2 b3 b4
    };
    std::vector<Arrow> arrows;
    std::vector<std::vector<std::vector<std::vector<int>>>> in_arrows;  // [i][l][S] -> arrow ids
    std::vector<std::vector<std::vector<int>>> y_arrows;                // [i][l][S] -> arrow id
    // cc_arrows[i][l][S]: ids of arrows into the clause cycle of that block's round
    std::vector<std::vector<std::vector<std::vector<int>>>> cc_arrows;

    std::int64_t mu = 0;
    std::vector<std::int64_t> budget;
    std::int64_t alpha = 0;
    PathDecomposition d;
    std::vector<CostMember> family;
};

OctLayout build_layout(const CnfFormula& f, int p) {
    if (f.num_clauses() == 0) fail("degenerate-input", "oct reduction needs m >= 1");
    if (f.num_vars == 0) fail("degenerate-input", "oct reduction needs n >= 1");
    if (p < 1) fail("invalid-parameters", "oct reduction needs p >= 1");
    if (p > 8) fail("cap-exceeded", "3^p exceeds the configured size cap");
    OctLayout L;
    L.n = f.num_vars;
    L.m = f.num_clauses();
    L.p = p;
    L.grouping = make_groups(f.num_vars, 3, p, Rounding::floor);
    L.t = L.grouping.num_groups();
    L.K = L.m * (L.t * p + 1);
    L.path_len = 3 * L.K;
    L.pow3 = 1;
    for (int i = 0; i < p; ++i) L.pow3 *= 3;
    Graph& g = L.g;

    auto id2 = [](int a, int b) { return std::to_string(a) + "." + std::to_string(b); };

    L.path.assign(L.t, std::vector<std::vector<int>>(p, std::vector<int>(L.path_len, -1)));
    L.tri.assign(L.t, std::vector<std::vector<std::array<int, 3>>>(
                          p, std::vector<std::array<int, 3>>(L.path_len - 1)));
    for (int i = 0; i < L.t; ++i)
        for (int j = 0; j < p; ++j) {
            std::string pbase = "OCT:path=" + id2(i + 1, j + 1);
            for (int pos = 1; pos <= L.path_len; ++pos)
                L.path[i][j][pos - 1] = g.add_vertex(pbase + ":pos=" + std::to_string(pos));
            for (int pos = 1; pos < L.path_len; ++pos) {
                g.add_edge(L.path[i][j][pos - 1], L.path[i][j][pos]);
                std::string tbase = "OCT:tri=" + id2(i + 1, j + 1) + "." + std::to_string(pos);
                int a = g.add_vertex(tbase + ":a");
                int b = g.add_vertex(tbase + ":b");
                int qv = g.add_vertex(tbase + ":q");
                L.tri[i][j][pos - 1] = {a, b, qv};
                g.add_edge(a, b);
                g.add_edge(b, qv);
                g.add_edge(a, qv);
                g.add_edge(a, L.path[i][j][pos - 1]);
                g.add_edge(b, L.path[i][j][pos]);
            }
        }

    L.Lset.assign(L.t, std::vector<std::vector<int>>(L.K));
    L.Rset.assign(L.t, std::vector<std::vector<int>>(L.K));
    L.X.assign(L.t, std::vector<std::vector<std::vector<int>>>(L.K));
    L.Y.assign(L.t, std::vector<std::vector<int>>(L.K));
    for (int i = 0; i < L.t; ++i)
        for (int l = 0; l < L.K; ++l) {
            for (int idx = 0; idx < 5 * p; ++idx) {
                L.Lset[i][l].push_back(g.add_vertex("OCT:L=" + id2(i + 1, l) + ":" + std::to_string(idx)));
                L.Rset[i][l].push_back(g.add_vertex("OCT:R=" + id2(i + 1, l) + ":" + std::to_string(idx)));
            }
            for (int a : L.Lset[i][l])
                for (int b : L.Rset[i][l]) g.add_edge(a, b);
            for (int j = 0; j < p; ++j)
                for (int pos = 3 * l + 1; pos <= 3 * l + 3 && pos < L.path_len; ++pos) {
                    for (int b : L.Lset[i][l]) g.add_edge(L.tri[i][j][pos - 1][0], b);
                    for (int b : L.Rset[i][l]) g.add_edge(L.tri[i][j][pos - 1][1], b);
                }
            if (l > 0) g.add_edge(L.Lset[i][l - 1][0], L.Rset[i][l][0]);
            L.X[i][l].resize(L.pow3);
            for (int s = 0; s < L.pow3; ++s) {
                std::string xb = "OCT:X=" + id2(i + 1, l) + "." + std::to_string(s);
                for (int idx = 0; idx < 2 * p + 1; ++idx)
                    L.X[i][l][s].push_back(g.add_vertex(xb + ":" + std::to_string(idx)));
                for (int idx = 0; idx <= 2 * p; ++idx)
                    g.add_edge(L.X[i][l][s][idx], L.X[i][l][s][(idx + 1) % (2 * p + 1)]);
            }
            for (int idx = 0; idx < L.pow3; ++idx)
                L.Y[i][l].push_back(g.add_vertex("OCT:Y=" + id2(i + 1, l) + ":" + std::to_string(idx)));
            for (int idx = 0; idx < L.pow3; ++idx)
                g.add_edge(L.Y[i][l][idx], L.Y[i][l][(idx + 1) % L.pow3]);
        }

    auto add_arrow = [&](int u, int v) {
        int id = static_cast<int>(L.arrows.size());
        OctLayout::Arrow ar;
        ar.u = u;
        ar.v = v;
        std::string base = "OCT:arrow=" + std::to_string(id);
        static const char* names[7] = {":a1", ":a2", ":a3", ":b1", ":b2", ":b3", ":b4"};
        for (int w = 0; w < 7; ++w) ar.inner[w] = g.add_vertex(base + names[w]);
        auto [a1, a2, a3, b1, b2, b3, b4] = std::tuple{ar.inner[0], ar.inner[1], ar.inner[2],
                                                       ar.inner[3], ar.inner[4], ar.inner[5],
                                                       ar.inner[6]};
        g.add_edge(u, a1);
        g.add_edge(a1, a2);
        g.add_edge(a2, a3);
        g.add_edge(a3, v);
        g.add_edge(u, b1);
        g.add_edge(b1, a1);
        g.add_edge(a1, b2);
        g.add_edge(b2, a2);
        g.add_edge(a2, b3);
        g.add_edge(b3, a3);
        g.add_edge(a3, b4);
        g.add_edge(b4, v);
        L.arrows.push_back(ar);
        return id;
    };

    L.in_arrows.assign(L.t, std::vector<std::vector<std::vector<int>>>(
                                L.K, std::vector<std::vector<int>>(L.pow3)));
    L.y_arrows.assign(L.t, std::vector<std::vector<int>>(L.K, std::vector<int>(L.pow3, -1)));
    for (int i = 0; i < L.t; ++i)
        for (int l = 0; l < L.K; ++l)
            for (int s = 0; s < L.pow3; ++s) {
                std::vector<int> offs = subset_offsets(s, p);
                int e_idx = 1;
                for (int j = 0; j < p; ++j)
                    for (int o = 1; o <= 3; ++o) {
                        if (o == offs[j]) continue;
                        int u = L.path[i][j][3 * l + o - 1];
                        L.in_arrows[i][l][s].push_back(add_arrow(u, L.X[i][l][s][e_idx++]));
                    }
                L.y_arrows[i][l][s] = add_arrow(L.X[i][l][s][0], L.Y[i][l][s]);
            }

    // Clause cycles: one per (clause h, 0 <= r <= tp); one vertex per
    // (group, group assignment), plus a dummy when the count is even.
    L.cc.assign(L.m, std::vector<std::vector<OctLayout::CcVert>>(L.t * p + 1));
    L.cc_arrows.assign(L.t, std::vector<std::vector<std::vector<int>>>(
                                L.K, std::vector<std::vector<int>>(L.pow3)));
    std::vector<std::vector<std::vector<std::uint64_t>>> sat_ranks(
        L.m, std::vector<std::vector<std::uint64_t>>(L.t));
    for (int h = 1; h <= L.m; ++h)
        for (int i = 0; i < L.t; ++i)
            for (const GroupAssignment& ga : satisfying_group_assignments(f, L.grouping, i, h - 1)) {
                sat_ranks[h - 1][i].push_back(ga.rank());
                ++L.mu;
            }
    for (int h = 1; h <= L.m; ++h)
        for (int r = 0; r <= L.t * p; ++r) {
            auto& cyc = L.cc[h - 1][r];
            std::string cb = "OCT:C=" + id2(h, r);
            for (int i = 0; i < L.t; ++i) {
                std::uint64_t total = std::uint64_t{1} << L.grouping.groups[i].size();
                for (std::uint64_t rank = 0; rank < total; ++rank) {
                    OctLayout::CcVert v;
                    v.group = i;
                    v.rank = rank;
                    v.vertex = g.add_vertex(cb + ":" + id2(i + 1, static_cast<int>(rank)));
                    cyc.push_back(v);
                }
            }
            if (cyc.size() % 2 == 0) {
                OctLayout::CcVert v;
                v.dummy = true;
                v.vertex = g.add_vertex(cb + ":dummy");
                cyc.push_back(v);
            }
            for (std::size_t idx = 0; idx < cyc.size(); ++idx)
                g.add_edge(cyc[idx].vertex, cyc[(idx + 1) % cyc.size()].vertex);

            int block = r * L.m + h - 1;
            std::size_t ci = 0;
            for (int i = 0; i < L.t; ++i) {
                std::uint64_t total = std::uint64_t{1} << L.grouping.groups[i].size();
                for (std::uint64_t rank = 0; rank < total; ++rank, ++ci) {
                    if (!std::binary_search(sat_ranks[h - 1][i].begin(), sat_ranks[h - 1][i].end(), rank))
                        continue;
                    int s = static_cast<int>(rank);  // rank-indexed injection into good subsets
                    L.cc_arrows[i][block][s].push_back(add_arrow(L.X[i][block][s][0], cyc[ci].vertex));
                }
            }
        }

    // Budget, counted from what was actually constructed.
    std::int64_t n_tri = 0;
    for (int i = 0; i < L.t; ++i) n_tri += static_cast<std::int64_t>(p) * (L.path_len - 1);
    std::int64_t n_triples = static_cast<std::int64_t>(L.t) * p * L.K;
    std::int64_t xy_arrows = static_cast<std::int64_t>(L.t) * L.K * (2 * p * L.pow3 + L.pow3);
    std::int64_t clause_arrows = static_cast<std::int64_t>(L.arrows.size()) - xy_arrows;
    std::int64_t x_choices = static_cast<std::int64_t>(L.t) * L.K;
    L.budget = {n_tri, n_triples, 2 * xy_arrows, 2 * clause_arrows, x_choices};
    for (std::int64_t b : L.budget) L.alpha += b;

    // Certificate sweep: rounds over blocks, stages over groups.
    std::vector<std::vector<int>> frontier(L.t);  // live path vertices per group
    std::vector<int> sticky_r(L.t, -1);
    for (int k = 0; k < L.K; ++k) {
        int h = k % L.m + 1;
        int r = k / L.m;
        const auto& cyc = L.cc[h - 1][r];
        int first_cc = cyc.front().vertex;
        int boundary = -1;
        bool first_cc_live = false;
        auto base_bag = [&]() {
            std::vector<int> bag;
            for (int i2 = 0; i2 < L.t; ++i2) {
                for (int v : frontier[i2]) bag.push_back(v);
                if (sticky_r[i2] >= 0) bag.push_back(sticky_r[i2]);
            }
            if (first_cc_live) bag.push_back(first_cc);
            if (boundary >= 0 && boundary != first_cc) bag.push_back(boundary);
            return bag;
        };
        auto emit = [&](const std::vector<int>& extra) {
            std::vector<int> bag = base_bag();
            for (int v : extra) {
                if (std::find(bag.begin(), bag.end(), v) == bag.end()) bag.push_back(v);
            }
            L.d.bags.push_back(std::move(bag));
        };

        for (int i = 0; i < L.t; ++i) {
            std::vector<int> lr = L.Lset[i][k];
            lr.insert(lr.end(), L.Rset[i][k].begin(), L.Rset[i][k].end());
            int r_next = k + 1 < L.K ? L.Rset[i][k + 1][0] : -1;
            if (r_next >= 0) lr.push_back(r_next);
            emit(lr);
            // The whole block window of path vertices goes live at once; the
            // triangles are then scanned one at a time against it.
            frontier[i].clear();
            for (int j = 0; j < p; ++j)
                for (int pos = 3 * k + 1; pos <= std::min(3 * k + 4, L.path_len); ++pos)
                    frontier[i].push_back(L.path[i][j][pos - 1]);
            emit(lr);
            for (int j = 0; j < p; ++j)
                for (int pos = 3 * k + 1; pos <= 3 * k + 3 && pos < L.path_len; ++pos) {
                    std::vector<int> extra = lr;
                    const auto& T = L.tri[i][j][pos - 1];
                    extra.push_back(T[0]);
                    extra.push_back(T[1]);
                    extra.push_back(T[2]);
                    emit(extra);
                }
            sticky_r[i] = r_next;

            // Y cycle, clause-cycle segment, then the X cycles with their arrows.
            std::vector<int> stage = L.Y[i][k];
            emit(stage);
            for (std::size_t ci = 0; ci < cyc.size(); ++ci)
                if (cyc[ci].group == i) stage.push_back(cyc[ci].vertex);
            emit(stage);
            if (i == 0) first_cc_live = true;

            for (int s = 0; s < L.pow3; ++s) {
                std::vector<int> xs = stage;
                xs.insert(xs.end(), L.X[i][k][s].begin(), L.X[i][k][s].end());
                emit(xs);
                std::vector<int> arrow_ids = L.in_arrows[i][k][s];
                arrow_ids.push_back(L.y_arrows[i][k][s]);
                for (int id : L.cc_arrows[i][k][s]) arrow_ids.push_back(id);
                for (int id : arrow_ids) {
                    const auto& ar = L.arrows[id];
                    auto seg = [&](std::initializer_list<int> vs) {
                        std::vector<int> e = xs;
                        for (int v : vs) e.push_back(v);
                        emit(e);
                    };
                    seg({ar.u, ar.inner[0], ar.inner[3]});                // u a1 b1
                    seg({ar.inner[0], ar.inner[1], ar.inner[4]});         // a1 a2 b2
                    seg({ar.inner[1], ar.inner[2], ar.inner[5]});         // a2 a3 b3
                    seg({ar.inner[2], ar.inner[6], ar.v});                // a3 b4 v
                }
            }
            // Drop the block window down to the next frontier position.
            frontier[i].clear();
            if (k + 1 < L.K)
                for (int j = 0; j < p; ++j) frontier[i].push_back(L.path[i][j][3 * k + 3]);
            // Keep only the segment boundary of this group's clause vertices.
            for (auto it = cyc.rbegin(); it != cyc.rend(); ++it)
                if (it->group == i) { boundary = it->vertex; break; }
        }
        // Close the clause cycle (through the dummy when present).
        std::vector<int> closing = {first_cc, boundary};
        if (cyc.back().dummy) closing.push_back(cyc.back().vertex);
        emit(closing);
        boundary = -1;
        first_cc_live = false;
    }

    // Cost members: per block the closure of paths, triangles, L/R, X cycles
    // and incoming arrow interiors; per outgoing arrow its interior plus the
    // target vertex.
    for (int i = 0; i < L.t; ++i)
        for (int l = 0; l < L.K; ++l) {
            CostMember mem;
            bool last = l == L.K - 1;
            for (int j = 0; j < p; ++j)
                for (int pos = 3 * l + 1; pos <= 3 * l + 3; ++pos) {
                    mem.vertices.push_back(L.path[i][j][pos - 1]);
                    if (pos < L.path_len)
                        for (int v : L.tri[i][j][pos - 1]) mem.vertices.push_back(v);
                }
            for (int v : L.Lset[i][l]) mem.vertices.push_back(v);
            for (int v : L.Rset[i][l]) mem.vertices.push_back(v);
            for (int s = 0; s < L.pow3; ++s) {
                for (int v : L.X[i][l][s]) mem.vertices.push_back(v);
                for (int id : L.in_arrows[i][l][s])
                    for (int v : L.arrows[id].inner) mem.vertices.push_back(v);
            }
            mem.shape_tag = std::string("oct:block:p=") + std::to_string(p) + (last ? ":last" : ":mid");
            L.family.push_back(std::move(mem));
            for (int s = 0; s < L.pow3; ++s) {
                auto arrow_member = [&](int id) {
                    CostMember am;
                    for (int v : L.arrows[id].inner) am.vertices.push_back(v);
                    am.vertices.push_back(L.arrows[id].v);
                    am.shape_tag = "oct:arrow";
                    L.family.push_back(std::move(am));
                };
                arrow_member(L.y_arrows[i][l][s]);
                for (int id : L.cc_arrows[i][l][s]) arrow_member(id);
            }
        }
    return L;
}

} // namespace

Instance reduce_oct(const CnfFormula& f, int p) {
    OctLayout L = build_layout(f, p);
    Instance inst;
    inst.kind = ProblemKind::OddCycleTransversal;
    inst.sense = Sense::at_most;
    inst.target = L.alpha;
    inst.decomposition = std::move(L.d);
    inst.claimed_width_bound = L.t * (p + 1) + 10 * p * L.pow3;
    inst.meta.n = L.n;
    inst.meta.m = L.m;
    inst.meta.p = p;
    inst.meta.t = L.t;
    inst.meta.beta = L.grouping.group_size;
    inst.meta.budget_items = L.budget;
    inst.meta.mu = L.mu;
    inst.meta.arrow_count = static_cast<std::int64_t>(L.arrows.size());
    inst.cost_family = std::move(L.family);
    inst.graph = std::move(L.g);
    inst.validate();
    return inst;
}

namespace detail {

Solution witness_oct(const Instance& inst, const CnfFormula& f, const Assignment& tau) {
    OctLayout L = build_layout(f, inst.meta.p.value_or(1));
    if (inst.graph.num_vertices() != L.g.num_vertices())
        fail("witness-mismatch", "instance was not produced from this formula");
    const int p = L.p;

    std::vector<int> chosen_subset(L.t);
    for (int i = 0; i < L.t; ++i) {
        std::uint64_t r = 0;
        for (int var : L.grouping.groups[i]) r = (r << 1) | (tau.values[var - 1] ? 1 : 0);
        chosen_subset[i] = static_cast<int>(r);
    }

    std::vector<char> in_z(L.g.num_vertices(), 0);
    auto add = [&](int v) { in_z[v] = 1; };

    for (int i = 0; i < L.t; ++i) {
        std::vector<int> offs = subset_offsets(chosen_subset[i], p);
        for (int j = 0; j < p; ++j) {
            for (int l = 0; l < L.K; ++l) add(L.path[i][j][3 * l + offs[j] - 1]);
            for (int pos = 1; pos < L.path_len; ++pos) {
                const auto& T = L.tri[i][j][pos - 1];
                bool u_in = in_z[L.path[i][j][pos - 1]];
                bool w_in = in_z[L.path[i][j][pos]];
                if (u_in) add(T[1]);       // b
                else if (w_in) add(T[0]);  // a
                else add(T[2]);            // q
            }
        }
        for (int l = 0; l < L.K; ++l) add(L.X[i][l][chosen_subset[i]][0]);
    }
    for (const auto& ar : L.arrows) {
        if (in_z[ar.u]) {
            add(ar.inner[1]);  // a2
            add(ar.v);
        } else {
            add(ar.inner[0]);  // a1
            add(ar.inner[2]);  // a3
        }
    }

    Solution sol;
    sol.kind = ProblemKind::OddCycleTransversal;
    for (int v = 0; v < L.g.num_vertices(); ++v)
        if (in_z[v]) sol.vertex_set.push_back(v);
    return sol;
}

} // namespace detail

} // namespace sethforge
