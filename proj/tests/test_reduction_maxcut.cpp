#include "doctest.h"

#include <random>

#include "sethforge/brute.hpp"
#include "sethforge/reductions.hpp"
#include "sethforge/solver.hpp"

using namespace sethforge;

namespace {

CnfFormula make(int n, std::vector<std::vector<int>> clauses) {
    CnfFormula f;
    f.num_vars = n;
    for (auto& c : clauses) {
        Clause cl;
        for (int lit : c) cl.literals.push_back({lit > 0 ? lit : -lit, lit > 0});
        f.clauses.push_back(cl);
    }
    return f;
}

} // namespace

TEST_CASE("weighted counts for (x1 v ~x2)") {
    CnfFormula f = make(2, {{1, -2}});
    Instance inst = reduce_max_cut_weighted(f);
    CHECK(inst.graph.num_vertices() == 11);
    CHECK(inst.meta.W == 58);
    CHECK(inst.target == 51);
    CHECK(inst.claimed_width_bound == 2 + 5);
    CHECK(inst.validate() <= inst.claimed_width_bound);
    CHECK(brute::max_cut(inst.graph) == 51);
}

TEST_CASE("single clause gadget without literal edges: one heavy edge stays uncrossed") {
    // The 9-cycle formed by an x0-anchored path on 8 vertices, all weight 3n.
    int n = 2;
    Graph g(1);
    std::vector<int> path;
    for (int i = 0; i < 8; ++i) path.push_back(g.add_vertex());
    for (int i = 0; i + 1 < 8; ++i) g.add_edge(path[i], path[i + 1], 3 * n);
    g.add_edge(0, path[0], 3 * n);
    g.add_edge(0, path[7], 3 * n);
    CHECK(brute::max_cut(g) == 8 * 3 * n);
}

TEST_CASE("expansion: single edges") {
    Graph g1(2);
    g1.add_edge(0, 1, 1);
    Instance w1;
    w1.kind = ProblemKind::MaxCut;
    w1.sense = Sense::at_least;
    w1.target = 1;
    w1.decomposition = PathDecomposition::trivial(g1);
    w1.claimed_width_bound = 3;
    w1.graph = g1;
    Instance u1 = expand_to_unweighted(w1);
    CHECK(u1.graph.num_vertices() == 4);
    CHECK(brute::max_cut(u1.graph) == 3);
    CHECK(u1.target == 2 * 1 + 1);

    Graph g3(2);
    g3.add_edge(0, 1, 3);
    w1.graph = g3;
    w1.decomposition = PathDecomposition::trivial(g3);
    Instance u3 = expand_to_unweighted(w1);
    CHECK(u3.graph.num_vertices() == 8);
    CHECK(brute::max_cut(u3.graph) == 9);  // endpoints apart
    // Keeping both endpoints together loses one unit in every replacement
    // path, matching the identity 2W + 0.
    std::int64_t best_same = 0;
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        if (((mask >> 0) & 1) != ((mask >> 1) & 1)) continue;
        std::int64_t wsum = 0;
        for (const auto& e : u3.graph.edges())
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) wsum += e.weight;
        best_same = std::max(best_same, wsum);
    }
    CHECK(best_same == 6);
}

TEST_CASE("Lemma 9 identity on random weighted graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v, 1 + static_cast<int>(rng() % 3));
        if (g.num_edges() == 0) continue;
        Instance w;
        w.kind = ProblemKind::MaxCut;
        w.sense = Sense::at_least;
        w.target = 0;
        w.decomposition = PathDecomposition::trivial(g);
        w.claimed_width_bound = n;
        w.graph = g;
        Instance u = expand_to_unweighted(w);
        std::int64_t weighted_opt = brute::max_cut(g);
        std::int64_t unweighted_opt =
            u.graph.num_vertices() <= 24 ? brute::max_cut(u.graph) : *solve(u).optimum;
        CHECK(unweighted_opt == 2 * g.total_weight() + weighted_opt);
    }
}

TEST_CASE("reduction expansion solves to the target iff satisfiable") {
    for (auto& f : {make(2, {{1, -2}}), make(1, {{1, 1}, {-1, -1}}), make(2, {{1, 2}, {-1, -2}}),
                    make(2, {{1, -1}}), make(3, {{1, 2, 3}, {-2, -3}})}) {
        Instance w = reduce_max_cut_weighted(f);
        Instance u = expand_to_unweighted(w);
        CHECK(u.validate() <= u.claimed_width_bound);
        SolveOptions opts;
        opts.decision_only = true;
        CHECK(*solve(u, opts).verdict == brute_force_sat(f).has_value());
    }
}

TEST_CASE("Lemma 9 identity on reduction outputs small enough to enumerate") {
    for (auto& f : {make(1, {{1, 1}}), make(1, {{1, 1}, {-1, -1}})}) {
        Instance w = reduce_max_cut_weighted(f);
        Instance u = expand_to_unweighted(w);
        std::int64_t wopt = brute::max_cut(w.graph);
        std::int64_t uopt = *solve(u).optimum;
        CHECK(uopt == 2 * *w.meta.W + wopt);
    }
}

TEST_CASE("witness meets target exactly on weighted and unweighted") {
    for (auto& f : {make(2, {{1, -2}}), make(2, {{1, 2}, {-1, -2}}), make(1, {{1, 1}}),
                    make(3, {{1, 2, 3}, {-2, -3}})}) {
        auto tau = brute_force_sat(f);
        REQUIRE(tau.has_value());
        Instance w = reduce_max_cut_weighted(f);
        Solution sw = build_witness(w, f, *tau);
        CHECK(check_solution(w, sw));
        std::int64_t crossing = 0;
        for (const auto& e : w.graph.edges())
            if (sw.side_of[e.u] != sw.side_of[e.v]) crossing += e.weight;
        CHECK(crossing == *w.target);

        Instance u = expand_to_unweighted(w);
        Solution su = build_witness(u, f, *tau);
        CHECK(check_solution(u, su));
        std::int64_t ucross = 0;
        for (const auto& e : u.graph.edges())
            if (su.side_of[e.u] != su.side_of[e.v]) ucross += e.weight;
        CHECK(ucross == *u.target);
    }
}

TEST_CASE("degenerate input rejected") {
    CnfFormula f;
    f.num_vars = 1;
    CHECK_THROWS_AS(reduce_max_cut_weighted(f), Error);
    f.num_vars = 0;
    f.clauses.push_back(Clause{});
    CHECK_THROWS_AS(reduce_max_cut_weighted(f), Error);
}
