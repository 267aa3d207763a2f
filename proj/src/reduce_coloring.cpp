#include <algorithm>
#include <string>

#include "sethforge/reductions.hpp"

namespace sethforge {

namespace {

constexpr int kRed = 1;
constexpr int kWhite = 2;
constexpr int kBlack = 3;

// Color tuple (one color per group vertex) encoding a group assignment:
// base-q digits of the assignment rank, most significant digit first,
// digit d mapped to color d+1.
std::vector<int> rank_coloring(std::uint64_t rank, int p, int q) {
    std::vector<int> colors(p);
    for (int l = p - 1; l >= 0; --l) {
        colors[l] = static_cast<int>(rank % q) + 1;
        rank /= q;
    }
    return colors;
}

struct Connector {
    // One block per (l, bad color x): the collector plus its chain vertices.
    struct Block {
        int l = 0, x = 0;
        int w = -1;
        std::vector<int> wy;   // per color y != red
        std::vector<int> wpy;  // x != red only
    };
    std::vector<Block> blocks;
};

struct PathVert {
    int vertex = -1;
    int group = 0;             // 0-based
    std::uint64_t rank = 0;    // satisfying group assignment
    Connector connector;
};

struct ColLayout {
    int n = 0, m = 0, p = 0, q = 0;
    VariableGrouping grouping;
    Graph g;
    std::map<int, std::vector<int>> lists;
    std::vector<std::vector<int>> vi;           // [group][l]
    std::vector<std::vector<PathVert>> clause;  // [clause] path vertices in order
    std::vector<int> start, end;                // per clause
    PathDecomposition d;
};

ColLayout build_layout(const CnfFormula& f, int q, int p) {
    if (f.num_clauses() == 0) fail("degenerate-input", "coloring reduction needs m >= 1");
    if (f.num_vars == 0) fail("degenerate-input", "coloring reduction needs n >= 1");
    if (q < 3) fail("invalid-parameters", "coloring reduction needs q >= 3");
    if (p < 1) fail("invalid-parameters", "coloring reduction needs p >= 1");
    ColLayout L;
    L.n = f.num_vars;
    L.m = f.num_clauses();
    L.p = p;
    L.q = q;
    L.grouping = make_groups(f.num_vars, q, p, Rounding::floor);
    const int t = L.grouping.num_groups();

    std::vector<int> full;
    for (int c = 1; c <= q; ++c) full.push_back(c);

    L.vi.assign(t, {});
    for (int i = 0; i < t; ++i)
        for (int l = 1; l <= p; ++l)
            L.vi[i].push_back(L.g.add_vertex("COL:group=" + std::to_string(i + 1) +
                                             ":v=" + std::to_string(l)));

    L.clause.resize(L.m);
    L.start.resize(L.m);
    L.end.resize(L.m);
    for (int j = 0; j < L.m; ++j) {
        std::string cbase = "COL:clause=" + std::to_string(j + 1);
        for (int i = 0; i < t; ++i)
            for (const GroupAssignment& ga : satisfying_group_assignments(f, L.grouping, i, j)) {
                PathVert pv;
                pv.group = i;
                pv.rank = ga.rank();
                pv.vertex = L.g.add_vertex(cbase + ":pv=" + std::to_string(L.clause[j].size() + 1) +
                                           ":g=" + std::to_string(i + 1) +
                                           ":r=" + std::to_string(pv.rank));
                L.lists[pv.vertex] = {kRed, kWhite, kBlack};
                L.clause[j].push_back(std::move(pv));
            }
        if (L.clause[j].empty()) fail("degenerate-input", "clause satisfiable by no group assignment");

        L.start[j] = L.g.add_vertex(cbase + ":start");
        L.lists[L.start[j]] = {kWhite};
        L.end[j] = L.g.add_vertex(cbase + ":end");
        // Chosen so that the alternating white/black coloring of the path is
        // improper: red must appear at least once.
        int path_len = static_cast<int>(L.clause[j].size());
        L.lists[L.end[j]] = {path_len % 2 == 0 ? kWhite : kBlack};

        for (std::size_t k = 0; k + 1 < L.clause[j].size(); ++k)
            L.g.add_edge(L.clause[j][k].vertex, L.clause[j][k + 1].vertex);
        L.g.add_edge(L.start[j], L.clause[j].front().vertex);
        L.g.add_edge(L.clause[j].back().vertex, L.end[j]);

        // Connectors: v can be red only if its group coloring appears on V_i.
        for (std::size_t k = 0; k < L.clause[j].size(); ++k) {
            PathVert& pv = L.clause[j][k];
            std::vector<int> mu = rank_coloring(pv.rank, p, q);
            std::string pbase = cbase + ":pv=" + std::to_string(k + 1);
            for (int l = 1; l <= p; ++l) {
                for (int x = 1; x <= q; ++x) {
                    if (x == mu[l - 1]) continue;
                    Connector::Block blk;
                    blk.l = l;
                    blk.x = x;
                    std::string bbase = pbase + ":l=" + std::to_string(l) + ":x=" + std::to_string(x);
                    blk.w = L.g.add_vertex(bbase + ":w");
                    L.lists[blk.w] = full;
                    for (int y = 1; y <= q; ++y) {
                        if (y == kRed) continue;
                        int wy = L.g.add_vertex(bbase + ":wy=" + std::to_string(y));
                        blk.wy.push_back(wy);
                        L.g.add_edge(wy, L.vi[pv.group][l - 1]);
                        if (x == kRed) {
                            L.lists[wy] = {kRed, y};
                            L.g.add_edge(blk.w, wy);
                        } else {
                            L.lists[wy] = {x, kRed};
                            int wpy = L.g.add_vertex(bbase + ":wpy=" + std::to_string(y));
                            L.lists[wpy] = {y, kRed};
                            blk.wpy.push_back(wpy);
                            L.g.add_edge(wy, wpy);
                            L.g.add_edge(blk.w, wpy);
                        }
                    }
                    L.g.add_edge(blk.w, pv.vertex);
                    pv.connector.blocks.push_back(std::move(blk));
                }
            }
        }
    }

    // Sweep: all group vertices in every bag, each clause tree four wide.
    std::vector<int> vstar;
    for (int i = 0; i < t; ++i)
        for (int v : L.vi[i]) vstar.push_back(v);
    auto emit = [&](std::initializer_list<int> extra) {
        std::vector<int> bag = vstar;
        for (int v : extra) bag.push_back(v);
        L.d.bags.push_back(std::move(bag));
    };
    for (int j = 0; j < L.m; ++j) {
        emit({L.start[j], L.clause[j][0].vertex});
        for (std::size_t k = 0; k < L.clause[j].size(); ++k) {
            const PathVert& pv = L.clause[j][k];
            for (const auto& blk : pv.connector.blocks) {
                for (std::size_t y = 0; y < blk.wy.size(); ++y) {
                    if (blk.wpy.empty())
                        emit({pv.vertex, blk.w, blk.wy[y]});
                    else
                        emit({pv.vertex, blk.w, blk.wy[y], blk.wpy[y]});
                }
            }
            if (k + 1 < L.clause[j].size())
                emit({pv.vertex, L.clause[j][k + 1].vertex});
        }
        emit({L.clause[j].back().vertex, L.end[j]});
    }
    return L;
}

} // namespace

Instance reduce_q_coloring(const CnfFormula& f, int q, int p) {
    ColLayout L = build_layout(f, q, p);
    Instance inst;
    inst.kind = ProblemKind::QListColoring;
    inst.sense = Sense::feasible;
    inst.decomposition = std::move(L.d);
    inst.claimed_width_bound = p * L.grouping.num_groups() + 4;
    inst.meta.n = L.n;
    inst.meta.m = L.m;
    inst.meta.p = p;
    inst.meta.q = q;
    inst.meta.t = L.grouping.num_groups();
    inst.meta.beta = L.grouping.group_size;
    inst.lists = std::move(L.lists);
    inst.graph = std::move(L.g);
    inst.validate();
    return inst;
}

Instance complete_lists_to_plain(const Instance& list_instance) {
    if (list_instance.kind != ProblemKind::QListColoring)
        fail("shape-mismatch", "complete_lists_to_plain expects a QListColoring instance");
    const int q = list_instance.meta.q.value_or(3);
    Instance inst = list_instance;
    inst.kind = ProblemKind::QColoring;
    Graph& g = inst.graph;
    std::vector<int> clique;
    for (int c = 1; c <= q; ++c) clique.push_back(g.add_vertex("COL:q=" + std::to_string(c)));
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) g.add_edge(clique[a], clique[b]);
    for (const auto& [v, list] : inst.lists)
        for (int c = 1; c <= q; ++c)
            if (std::find(list.begin(), list.end(), c) == list.end()) g.add_edge(clique[c - 1], v);
    inst.lists.clear();
    for (auto& bag : inst.decomposition.bags)
        for (int c : clique) bag.push_back(c);
    inst.claimed_width_bound = list_instance.claimed_width_bound + q;
    inst.validate();
    return inst;
}

namespace detail {

Solution witness_coloring(const Instance& inst, const CnfFormula& f, const Assignment& tau) {
    const int q = inst.meta.q.value_or(3);
    const int p = inst.meta.p.value_or(1);
    ColLayout L = build_layout(f, q, p);
    bool plain = inst.kind == ProblemKind::QColoring;
    if (inst.graph.num_vertices() != L.g.num_vertices() + (plain ? q : 0))
        fail("witness-mismatch", "instance was not produced from this formula");
    const int t = L.grouping.num_groups();

    Solution sol;
    sol.kind = inst.kind;
    sol.color_of.assign(inst.graph.num_vertices(), 0);

    // Group vertices carry the coloring of tau's group assignments.
    std::vector<std::uint64_t> group_rank(t, 0);
    std::vector<std::vector<int>> group_colors(t);
    for (int i = 0; i < t; ++i) {
        std::uint64_t r = 0;
        for (int var : L.grouping.groups[i]) r = (r << 1) | (tau.values[var - 1] ? 1 : 0);
        group_rank[i] = r;
        group_colors[i] = rank_coloring(r, p, q);
        for (int l = 0; l < p; ++l) sol.color_of[L.vi[i][l]] = group_colors[i][l];
    }

    for (int j = 0; j < L.m; ++j) {
        // The first true literal's group satisfies the clause; its path vertex
        // goes red.
        int chosen_group = -1;
        for (const Literal& lit : f.clauses[j].literals)
            if (tau.values[lit.var - 1] == lit.positive) {
                for (int i = 0; i < t; ++i) {
                    const auto& grp = L.grouping.groups[i];
                    if (std::binary_search(grp.begin(), grp.end(), lit.var)) { chosen_group = i; break; }
                }
                break;
            }
        if (chosen_group < 0) fail("witness-unsatisfied", "clause without true literal");
        int kstar = -1;
        const int N = static_cast<int>(L.clause[j].size());
        for (int k = 0; k < N; ++k)
            if (L.clause[j][k].group == chosen_group && L.clause[j][k].rank == group_rank[chosen_group]) {
                kstar = k;
                break;
            }
        if (kstar < 0) fail("witness-unsatisfied", "satisfying assignment has no path vertex");

        sol.color_of[L.start[j]] = kWhite;
        sol.color_of[L.end[j]] = N % 2 == 0 ? kWhite : kBlack;
        for (int k = 0; k < N; ++k) {
            int pos = k + 1;
            if (k == kstar) {
                sol.color_of[L.clause[j][k].vertex] = kRed;
            } else if (k < kstar) {
                sol.color_of[L.clause[j][k].vertex] = pos % 2 == 1 ? kBlack : kWhite;
            } else {
                sol.color_of[L.clause[j][k].vertex] = pos % 2 == 0 ? kBlack : kWhite;
            }
        }

        // Extend over every connector per the per-block rules.
        for (int k = 0; k < N; ++k) {
            const PathVert& pv = L.clause[j][k];
            int ucolor = sol.color_of[pv.vertex];
            for (const auto& blk : pv.connector.blocks) {
                int g_actual = group_colors[pv.group][blk.l - 1];
                int wcolor;
                if (g_actual == blk.x) {
                    // Bad color present: the collector is forced red, which is
                    // only consistent because u is not red here.
                    wcolor = kRed;
                    int yi = 0;
                    for (int y = 1; y <= q; ++y) {
                        if (y == kRed) continue;
                        if (blk.x == kRed) {
                            sol.color_of[blk.wy[yi]] = y;
                        } else {
                            sol.color_of[blk.wy[yi]] = kRed;
                            sol.color_of[blk.wpy[yi]] = y;
                        }
                        ++yi;
                    }
                } else {
                    wcolor = 0;
                    for (int c = 1; c <= q; ++c)
                        if (c != kRed && c != ucolor) { wcolor = c; break; }
                    int yi = 0;
                    for (int y = 1; y <= q; ++y) {
                        if (y == kRed) continue;
                        if (blk.x == kRed) {
                            sol.color_of[blk.wy[yi]] = kRed;
                        } else {
                            sol.color_of[blk.wy[yi]] = blk.x;
                            sol.color_of[blk.wpy[yi]] = kRed;
                        }
                        ++yi;
                    }
                }
                sol.color_of[blk.w] = wcolor;
            }
        }
    }

    if (plain)
        for (int c = 1; c <= q; ++c) sol.color_of[L.g.num_vertices() + c - 1] = c;
    return sol;
}

} // namespace detail

} // namespace sethforge
