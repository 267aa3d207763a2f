#include "doctest.h"

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

// Stand-alone clause gadget on c literal occurrences: ladder + pendants.
Graph clause_gadget(int c) {
    Graph g;
    std::vector<int> cp(c), cpp(c), lit(c);
    for (int a = 0; a < c; ++a) {
        cp[a] = g.add_vertex();
        cpp[a] = g.add_vertex();
        lit[a] = g.add_vertex();
    }
    int start = g.add_vertex(), end = g.add_vertex();
    for (int a = 0; a < c; ++a) {
        if (a + 1 < c) {
            g.add_edge(cp[a], cp[a + 1]);
            g.add_edge(cpp[a], cpp[a + 1]);
        }
        g.add_edge(cp[a], cpp[a]);
        g.add_edge(lit[a], cp[a]);
        g.add_edge(lit[a], cpp[a]);
    }
    g.add_edge(start, cp[0]);
    g.add_edge(end, cp[c - 1]);
    return g;
}

} // namespace

TEST_CASE("clause gadget: max independent set is c + 2") {
    for (int c : {2, 4}) {
        Graph g = clause_gadget(c);
        CHECK(g.num_vertices() == 3 * c + 2);
        CHECK(brute::max_independent_set(g) == c + 2);
    }
}

TEST_CASE("clause gadget: every maximum IS uses a literal vertex, and each literal is usable alone") {
    for (int c : {2, 4}) {
        Graph g = clause_gadget(c);
        const int n = g.num_vertices();
        // Vertex layout from the builder: literal vertices sit at 3a+2.
        std::vector<int> lits;
        for (int a = 0; a < c; ++a) lits.push_back(3 * a + 2);
        std::vector<bool> lone_ok(c, false);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != c + 2) continue;
            bool independent = true;
            for (const auto& e : g.edges())
                if (((mask >> e.u) & 1) && ((mask >> e.v) & 1)) { independent = false; break; }
            if (!independent) continue;
            int used = 0;
            for (int a = 0; a < c; ++a)
                if ((mask >> lits[a]) & 1) ++used;
            CHECK(used >= 1);
            if (used == 1)
                for (int a = 0; a < c; ++a)
                    if ((mask >> lits[a]) & 1) lone_ok[a] = true;
        }
        for (int a = 0; a < c; ++a) CHECK(lone_ok[a]);
    }
}

TEST_CASE("reduce (x1 v x1): counts and brute-force optimum") {
    // n=1, m=1, clause of size 2 via a repeated literal.
    CnfFormula f = make(1, {{1, 1}});
    Instance inst = reduce_independent_set(f);
    CHECK(inst.graph.num_vertices() == 20);
    CHECK(inst.target == 10);
    CHECK(inst.claimed_width_bound == 1 + 4);
    CHECK(inst.validate() <= inst.claimed_width_bound);
    CHECK(brute::max_independent_set(inst.graph) == 10);

    Answer a = solve(inst);
    CHECK(a.optimum == 10);
    CHECK(a.verdict == true);
}

TEST_CASE("reduce UNSAT (x1 v x1) & (~x1 v ~x1): optimum below target") {
    CnfFormula f = make(1, {{1, 1}, {-1, -1}});
    Instance inst = reduce_independent_set(f);
    CHECK(inst.graph.num_vertices() == 40);
    CHECK(brute::max_independent_set(inst.graph) < *inst.target);
    SolveOptions opts;
    opts.decision_only = true;
    CHECK(solve(inst, opts).verdict == false);
}

TEST_CASE("padding is applied inside the reduction") {
    CnfFormula f = make(1, {{1}});  // odd clause forces padding to n=2, m=2
    Instance inst = reduce_independent_set(f);
    CHECK(inst.meta.n == 2);
    CHECK(inst.meta.m == 2);
    // |V| = (n+1) * (2mn + sum(3c+2)) with clauses of size 2 and 2.
    CHECK(inst.graph.num_vertices() == 3 * (2 * 2 * 2 + 8 + 8));
    CHECK(inst.validate() <= inst.claimed_width_bound);
}

TEST_CASE("witness meets the target exactly and validates") {
    for (auto& f : {make(1, {{1, 1}}), make(2, {{1, -2}}), make(2, {{1, 2}, {-1, -2}}),
                    make(2, {{1}, {2, -1}})}) {
        auto tau = brute_force_sat(f);
        REQUIRE(tau.has_value());
        Instance inst = reduce_independent_set(f);
        Solution w = build_witness(inst, f, *tau);
        CHECK(check_solution(inst, w));
        CHECK(static_cast<std::int64_t>(w.vertex_set.size()) == *inst.target);
    }
}

TEST_CASE("round trip on a small batch") {
    for (auto& f : {make(2, {{1, -2}}), make(2, {{1, 2}, {-1, -2}}), make(1, {{1}, {-1}}),
                    make(2, {{-1, -1}, {1, 1}, {2, 2}}), make(3, {{1, 2, 3}, {-1, -2}})}) {
        Instance inst = reduce_independent_set(f);
        SolveOptions opts;
        opts.decision_only = true;
        Answer a = solve(inst, opts);
        CHECK(*a.verdict == brute_force_sat(f).has_value());
    }
}

TEST_CASE("both-polarity clause keeps the certificate within the bound") {
    CnfFormula f = make(2, {{1, -1}, {2, -2}});
    Instance inst = reduce_independent_set(f);
    CHECK(inst.validate() <= 2 + 4);
    SolveOptions opts;
    opts.decision_only = true;
    CHECK(*solve(inst, opts).verdict == true);
}

TEST_CASE("degenerate input rejected") {
    CnfFormula f;
    f.num_vars = 3;
    CHECK_THROWS_AS(reduce_independent_set(f), Error);
}
