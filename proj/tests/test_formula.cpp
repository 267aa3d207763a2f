#include "doctest.h"

#include "sethforge/formula.hpp"

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

TEST_CASE("parse_dimacs basic") {
    CnfFormula f = parse_dimacs("p cnf 1 1\n1 0\n");
    CHECK(f.num_vars == 1);
    CHECK(f.num_clauses() == 1);
    CHECK(f.clauses[0].literals == std::vector<Literal>{{1, true}});

    f = parse_dimacs("c comment\np cnf 2 2\n1 -2 0\n-1 0\n");
    CHECK(f.num_vars == 2);
    CHECK(f.clauses[0].literals == std::vector<Literal>{{1, true}, {2, false}});
    CHECK(f.clauses[1].literals == std::vector<Literal>{{1, false}});
}

TEST_CASE("parse_dimacs errors are categorized") {
    auto category_of = [](const std::string& text) {
        try {
            parse_dimacs(text);
        } catch (const Error& e) {
            return e.category();
        }
        return std::string("no-error");
    };
    CHECK(category_of("p dnf 1 1\n1 0\n") == "malformed-header");
    CHECK(category_of("1 0\n") == "malformed-header");
    CHECK(category_of("p cnf 1 1\n2 0\n") == "variable-out-of-range");
    CHECK(category_of("p cnf 1 1\n0\n") == "empty-clause");
    CHECK(category_of("p cnf 1 2\n1 0\n") == "clause-count-mismatch");
    CHECK(category_of("p cnf 2 1\n1 -2 0\n") == "no-error");
}

TEST_CASE("dimacs round trip is byte exact") {
    std::string text = "p cnf 3 2\n1 -2 3 0\n-3 0\n";
    CHECK(write_dimacs(parse_dimacs(text)) == text);
}

TEST_CASE("evaluate") {
    CHECK(evaluate(make(1, {{1}}), Assignment{{true}}));
    CHECK_FALSE(evaluate(make(1, {{1}, {-1}}), Assignment{{true}}));
    CHECK_FALSE(evaluate(make(1, {{1}, {-1}}), Assignment{{false}}));
    CHECK(evaluate(make(2, {{1, -2}}), Assignment{{false, false}}));
    CHECK_THROWS_AS(evaluate(make(2, {{1}}), Assignment{{true}}), Error);
}

TEST_CASE("evaluate agrees with clause-by-clause definition exhaustively") {
    // All formulas with n <= 3, m <= 2 over single-literal picks per clause
    // position, checked against a direct per-clause evaluation.
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::vector<int>> lits;
        for (int v = 1; v <= n; ++v) {
            lits.push_back({v});
            lits.push_back({-v});
        }
        for (auto& c1 : lits)
            for (auto& c2 : lits) {
                CnfFormula f = make(n, {c1, c2});
                for (std::uint64_t r = 0; r < (1u << n); ++r) {
                    Assignment a = assignment_from_rank(n, r);
                    bool expect = true;
                    for (const Clause& c : f.clauses) {
                        bool sat = false;
                        for (const Literal& l : c.literals) sat |= a.values[l.var - 1] == l.positive;
                        expect &= sat;
                    }
                    CHECK(evaluate(f, a) == expect);
                }
            }
    }
}

TEST_CASE("brute_force_sat lowest rank first") {
    CHECK_FALSE(brute_force_sat(make(1, {{1}, {-1}})).has_value());
    auto a = brute_force_sat(make(2, {{1, 2}}));
    REQUIRE(a.has_value());
    CHECK(a->values == std::vector<bool>{false, true});
    CHECK(assignment_rank(*a) == 1);
    a = brute_force_sat(make(1, {{-1}}));
    REQUIRE(a.has_value());
    CHECK(a->values == std::vector<bool>{false});
    CHECK_THROWS_AS(brute_force_sat(make(30, {{1}})), Error);
}

TEST_CASE("pad_to_even") {
    CnfFormula even = make(2, {{1, -2}});
    CHECK(pad_to_even(even) == even);

    CnfFormula f = pad_to_even(make(1, {{1}}));
    CHECK(f.num_vars == 2);
    CHECK(f.num_clauses() == 2);
    CHECK(f.clauses[0].literals == std::vector<Literal>{{1, true}, {2, true}});
    CHECK(f.clauses[1].literals == std::vector<Literal>{{2, false}, {2, false}});

    f = pad_to_even(make(3, {{1}, {2, 3}}));
    CHECK(f.num_vars == 4);
    CHECK(f.num_clauses() == 3);
    CHECK(f.clauses[1].literals == std::vector<Literal>{{2, true}, {3, true}});
}

TEST_CASE("pad_to_even preserves satisfiability and evens sizes") {
    // Property over a deterministic batch of small formulas.
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    auto next = [&]() { return seed = seed * 6364136223846793005ull + 1442695040888963407ull; };
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(next() % 5);
        int m = 1 + static_cast<int>(next() % 4);
        CnfFormula f;
        f.num_vars = n;
        for (int j = 0; j < m; ++j) {
            Clause c;
            int len = 1 + static_cast<int>(next() % 3);
            for (int i = 0; i < len; ++i) {
                int var = 1 + static_cast<int>(next() % n);
                c.literals.push_back({var, (next() & 1) != 0});
            }
            f.clauses.push_back(c);
        }
        CnfFormula g = pad_to_even(f);
        for (const Clause& c : g.clauses) CHECK(c.size() % 2 == 0);
        CHECK(brute_force_sat(f).has_value() == brute_force_sat(g).has_value());
    }
}

TEST_CASE("make_groups") {
    VariableGrouping g = make_groups(5, 3, 1, Rounding::floor);
    CHECK(g.group_size == 1);
    CHECK(g.num_groups() == 5);

    g = make_groups(5, 3, 1, Rounding::ceil);
    CHECK(g.group_size == 2);
    CHECK(g.num_groups() == 3);
    CHECK(g.groups[0] == std::vector<int>{1, 2});
    CHECK(g.groups[1] == std::vector<int>{3, 4});
    CHECK(g.groups[2] == std::vector<int>{5});

    g = make_groups(4, 3, 2, Rounding::floor);
    CHECK(g.group_size == 3);
    CHECK(g.num_groups() == 2);

    // Exact powers of two: floor == ceil.
    CHECK(make_groups(8, 4, 1, Rounding::floor).group_size == 2);
    CHECK(make_groups(8, 4, 1, Rounding::ceil).group_size == 2);
}

TEST_CASE("make_groups partitions and t = ceil(n/beta)") {
    for (int n = 1; n <= 12; ++n)
        for (int base : {2, 3, 4, 5})
            for (int p : {1, 2})
                for (Rounding r : {Rounding::floor, Rounding::ceil}) {
                    VariableGrouping g = make_groups(n, base, p, r);
                    CHECK(g.num_groups() == (n + g.group_size - 1) / g.group_size);
                    std::vector<int> seen;
                    for (std::size_t i = 0; i < g.groups.size(); ++i) {
                        const auto& grp = g.groups[i];
                        CHECK(static_cast<int>(grp.size()) <= g.group_size);
                        if (i + 1 < g.groups.size())
                            CHECK(static_cast<int>(grp.size()) == g.group_size);
                        for (int v : grp) seen.push_back(v);
                    }
                    std::vector<int> expect(n);
                    for (int v = 1; v <= n; ++v) expect[v - 1] = v;
                    CHECK(seen == expect);
                }
}

TEST_CASE("group assignment rank round trips") {
    VariableGrouping g = make_groups(7, 3, 2, Rounding::floor);
    for (int gi = 0; gi < g.num_groups(); ++gi) {
        std::uint64_t total = 1ull << g.groups[gi].size();
        for (std::uint64_t r = 0; r < total; ++r)
            CHECK(group_assignment_from_rank(g, gi, r).rank() == r);
    }
}

TEST_CASE("satisfying_group_assignments") {
    CnfFormula f = make(3, {{1, -2}});
    VariableGrouping g1 = make_groups(3, 3, 1, Rounding::floor);  // singleton groups
    auto s = satisfying_group_assignments(f, g1, 0, 0);
    REQUIRE(s.size() == 1);
    CHECK(s[0].values == std::vector<bool>{true});
    CHECK(satisfying_group_assignments(f, g1, 2, 0).empty());

    VariableGrouping g2 = make_groups(3, 3, 1, Rounding::ceil);  // {1,2}, {3}
    s = satisfying_group_assignments(f, g2, 0, 0);
    REQUIRE(s.size() == 3);
    // Every assignment except x1=false, x2=true; ordered by rank.
    CHECK(s[0].rank() == 0);
    CHECK(s[1].rank() == 2);
    CHECK(s[2].rank() == 3);
}
