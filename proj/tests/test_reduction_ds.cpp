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

} // namespace

TEST_CASE("gadget size and instance counts for (x1 v ~x2), p=1") {
    CnfFormula f = make(2, {{1, -2}});
    Instance inst = reduce_dominating_set(f, 1);
    CHECK(inst.meta.beta == 1);
    CHECK(inst.meta.t == 2);
    // Per gadget: 3 path + 2 guards + 2*3 set vertices + guard x = 12;
    // 2 groups x 5 gadgets + h,h' + 5 clause vertices.
    CHECK(inst.graph.num_vertices() == 2 * 5 * 12 + 2 + 5);
    CHECK(inst.target == 21);
    CHECK(inst.claimed_width_bound == 2 * 1 + 2 * 3 + 5 * 1 + 3);
    CHECK(inst.validate() <= inst.claimed_width_bound);
}

TEST_CASE("dp verdict matches brute force domination number on the small instance") {
    CnfFormula f = make(2, {{1, -2}});
    Instance inst = reduce_dominating_set(f, 1);
    Answer a = solve(inst);
    CHECK(a.optimum == 21);
    CHECK(a.verdict == true);
}

TEST_CASE("UNSAT formula needs more than the target") {
    CnfFormula f = make(1, {{1}, {-1}});
    Instance inst = reduce_dominating_set(f, 1);
    SolveOptions opts;
    opts.decision_only = true;
    CHECK(solve(inst, opts).verdict == false);
    Answer full = solve(inst);
    CHECK(*full.optimum > *inst.target);
}

TEST_CASE("witness has the exact target size, contains h, and dominates") {
    for (auto& f : {make(2, {{1, -2}}), make(1, {{1}}), make(2, {{1, 2}, {-1, -2}}),
                    make(3, {{1, 2}, {-2, -3}})}) {
        auto tau = brute_force_sat(f);
        REQUIRE(tau.has_value());
        Instance inst = reduce_dominating_set(f, 1);
        Solution w = build_witness(inst, f, *tau);
        CHECK(check_solution(inst, w));
        CHECK(static_cast<std::int64_t>(w.vertex_set.size()) == *inst.target);
        bool has_h = false;
        for (int v : w.vertex_set)
            if (inst.graph.label(v) == "DS:h") has_h = true;
        CHECK(has_h);
    }
}

TEST_CASE("round trip small batch, p=1") {
    for (auto& f : {make(2, {{1, -2}}), make(1, {{1}, {-1}}), make(2, {{1, 2}, {-1, -2}, {-1, 2}}),
                    make(2, {{1, -1}}), make(3, {{1, 2, 3}, {-1, -2, -3}})}) {
        Instance inst = reduce_dominating_set(f, 1);
        SolveOptions opts;
        opts.decision_only = true;
        CHECK(*solve(inst, opts).verdict == brute_force_sat(f).has_value());
    }
}

TEST_CASE("p=2 instance validates and round trips") {
    CnfFormula f = make(3, {{1, -2}, {2, 3}});
    Instance inst = reduce_dominating_set(f, 2);
    CHECK(inst.meta.beta == 3);  // floor(2 log2 3)
    CHECK(inst.meta.t == 1);
    CHECK(inst.validate() <= inst.claimed_width_bound);
    SolveOptions opts;
    opts.decision_only = true;
    CHECK(*solve(inst, opts).verdict == true);

    CnfFormula g = make(2, {{1}, {-1}});
    Instance bad = reduce_dominating_set(g, 2);
    CHECK(*solve(bad, opts).verdict == false);
}

TEST_CASE("parameter validation") {
    CnfFormula f;
    f.num_vars = 2;
    CHECK_THROWS_AS(reduce_dominating_set(f, 1), Error);
    CHECK_THROWS_AS(reduce_dominating_set(make(1, {{1}}), 0), Error);
    CHECK_THROWS_AS(reduce_dominating_set(make(1, {{1}}), 11), Error);
}
