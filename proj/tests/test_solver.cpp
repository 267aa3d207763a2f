#include "doctest.h"

#include <random>

#include "sethforge/brute.hpp"
#include "sethforge/reductions.hpp"
#include "sethforge/solver.hpp"

using namespace sethforge;

namespace {

Graph k3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Instance wrap(Graph g, ProblemKind kind, std::optional<std::int64_t> target, Sense sense, int q = 3) {
    Instance inst;
    inst.kind = kind;
    inst.decomposition = PathDecomposition::trivial(g);
    inst.graph = std::move(g);
    inst.claimed_width_bound = inst.graph.num_vertices();
    inst.sense = sense;
    inst.target = target;
    inst.meta.q = q;
    return inst;
}

Graph random_graph(std::mt19937_64& rng, int max_n = 12) {
    int n = 1 + static_cast<int>(rng() % max_n);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("K3 basics across kinds") {
    CHECK(solve(wrap(k3(), ProblemKind::IndependentSet, 1, Sense::at_least)).optimum == 1);
    CHECK(solve(wrap(k3(), ProblemKind::DominatingSet, 1, Sense::at_most)).optimum == 1);
    CHECK(solve(wrap(k3(), ProblemKind::MaxCut, 2, Sense::at_least)).optimum == 2);
    CHECK(solve(wrap(k3(), ProblemKind::QColoring, std::nullopt, Sense::feasible)).feasible);
    CHECK(solve(wrap(k3(), ProblemKind::OddCycleTransversal, 1, Sense::at_most)).optimum == 1);
    CHECK(solve(wrap(k3(), ProblemKind::PartitionIntoTriangles, std::nullopt, Sense::feasible)).feasible);
    CHECK(solve(wrap(k3(), ProblemKind::TrianglePacking, 1, Sense::at_least)).optimum == 1);
}

TEST_CASE("5-cycle optima") {
    CHECK(solve(wrap(cycle(5), ProblemKind::MaxCut, 4, Sense::at_least)).optimum == 4);
    CHECK(solve(wrap(cycle(5), ProblemKind::OddCycleTransversal, 1, Sense::at_most)).optimum == 1);
    CHECK(solve(wrap(cycle(5), ProblemKind::IndependentSet, 2, Sense::at_least)).optimum == 2);
    CHECK(solve(wrap(cycle(5), ProblemKind::DominatingSet, 2, Sense::at_most)).optimum == 2);
    CHECK(solve(wrap(cycle(5), ProblemKind::QColoring, std::nullopt, Sense::feasible)).feasible);
    Instance two_col = wrap(cycle(5), ProblemKind::QColoring, std::nullopt, Sense::feasible, 2);
    CHECK_FALSE(solve(two_col).feasible);
}

TEST_CASE("empty and edgeless graphs") {
    Graph g0(0);
    Instance inst = wrap(std::move(g0), ProblemKind::IndependentSet, 0, Sense::at_least);
    inst.decomposition.bags = {{}};
    Answer a = solve(inst);
    CHECK(a.optimum == 0);
    CHECK(a.verdict == true);

    Graph g2(2);
    CHECK(solve(wrap(std::move(g2), ProblemKind::MaxCut, 0, Sense::at_least)).optimum == 0);
}

TEST_CASE("witness soundness on small graphs") {
    std::mt19937_64 rng(13);
    SolveOptions opts;
    opts.want_witness = true;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 9);
        for (ProblemKind kind : {ProblemKind::IndependentSet, ProblemKind::DominatingSet,
                                 ProblemKind::MaxCut, ProblemKind::OddCycleTransversal,
                                 ProblemKind::TrianglePacking}) {
            Sense sense = kind == ProblemKind::DominatingSet || kind == ProblemKind::OddCycleTransversal
                              ? Sense::at_most
                              : Sense::at_least;
            Instance inst = wrap(g, kind, 0, sense);
            inst.target = kind == ProblemKind::DominatingSet ? inst.graph.num_vertices() : 0;
            Answer a = solve(inst, opts);
            REQUIRE(a.optimum.has_value());
            REQUIRE(a.solution.has_value());
            INFO("kind ", kind_name(kind), " trial ", trial);
            // The witness is feasible and its objective equals the optimum:
            // it passes at the optimum and fails one step tighter.
            bool min_kind = sense == Sense::at_most;
            inst.target = a.optimum;
            CHECK(check_solution(inst, *a.solution));
            inst.target = *a.optimum + (min_kind ? -1 : 1);
            if (*inst.target >= 0) CHECK_FALSE(check_solution(inst, *a.solution));
        }
    }
}

TEST_CASE("oracle agreement on random graphs, all kinds") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng);
        for (ProblemKind kind : {ProblemKind::IndependentSet, ProblemKind::DominatingSet,
                                 ProblemKind::MaxCut, ProblemKind::QColoring,
                                 ProblemKind::OddCycleTransversal, ProblemKind::TrianglePacking,
                                 ProblemKind::PartitionIntoTriangles}) {
            Instance inst = wrap(g, kind,
                                 kind == ProblemKind::QColoring || kind == ProblemKind::PartitionIntoTriangles
                                     ? std::optional<std::int64_t>{}
                                     : std::optional<std::int64_t>{0},
                                 kind == ProblemKind::DominatingSet || kind == ProblemKind::OddCycleTransversal
                                     ? Sense::at_most
                                     : kind == ProblemKind::QColoring || kind == ProblemKind::PartitionIntoTriangles
                                           ? Sense::feasible
                                           : Sense::at_least);
            if (kind == ProblemKind::DominatingSet) inst.target = inst.graph.num_vertices();
            Answer dp = solve(inst);
            Answer bf = brute::brute_force(inst);
            INFO("kind ", kind_name(kind), " trial ", trial, " n ", g.num_vertices());
            if (kind == ProblemKind::QColoring || kind == ProblemKind::PartitionIntoTriangles) {
                CHECK(dp.feasible == bf.feasible);
            } else {
                CHECK(dp.optimum == bf.optimum);
            }
        }
    }
}

TEST_CASE("decomposition independence: trivial vs layered bags") {
    // A fixed path-structured graph solved over two different decompositions.
    Graph g(6);
    for (int i = 0; i + 1 < 6; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, 2);
    g.add_edge(3, 5);
    PathDecomposition layered;
    layered.bags = {{0, 1, 2}, {2, 3}, {3, 4, 5}};
    for (ProblemKind kind : {ProblemKind::IndependentSet, ProblemKind::DominatingSet,
                             ProblemKind::MaxCut, ProblemKind::OddCycleTransversal}) {
        Sense sense = kind == ProblemKind::DominatingSet || kind == ProblemKind::OddCycleTransversal
                          ? Sense::at_most
                          : Sense::at_least;
        Instance trivial_inst = wrap(g, kind, 6, sense);
        Instance layered_inst = trivial_inst;
        layered_inst.decomposition = layered;
        CHECK(solve(trivial_inst).optimum == solve(layered_inst).optimum);
    }
}

TEST_CASE("state count law holds on measured runs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 10);
        Instance inst = wrap(g, ProblemKind::DominatingSet, g.num_vertices(), Sense::at_most);
        Answer a = solve(inst);
        CHECK_FALSE(a.stats.state_law_violated);
    }
}

TEST_CASE("decision mode matches full solve verdicts") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 10);
        Instance inst = wrap(g, ProblemKind::OddCycleTransversal, 0, Sense::at_most);
        Answer full = solve(inst);
        for (std::int64_t t = 0; t <= *full.optimum + 1; ++t) {
            inst.target = t;
            SolveOptions opts;
            opts.decision_only = true;
            Answer dec = solve(inst, opts);
            CHECK(dec.verdict == (*full.optimum <= t));
        }
    }
}

TEST_CASE("state cap produces an error") {
    Graph g = cycle(20);
    Instance inst = wrap(std::move(g), ProblemKind::MaxCut, 1, Sense::at_least);
    SolveOptions opts;
    opts.state_cap = 4;
    CHECK_THROWS_AS(solve(inst, opts), Error);
}
