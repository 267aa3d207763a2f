#include "doctest.h"

#include <random>

#include "sethforge/decomposition.hpp"

using namespace sethforge;

namespace {

Graph k3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

std::string failing_category(const Graph& g, const PathDecomposition& d) {
    try {
        validate_path_decomposition(g, d);
    } catch (const Error& e) {
        return e.category();
    }
    return "ok";
}

} // namespace

TEST_CASE("graph invariants") {
    Graph g(3);
    g.add_edge(0, 1, 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.total_weight() == 2);
    CHECK_FALSE(g.is_unweighted());
    CHECK_THROWS_AS(g.add_edge(0, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    CHECK_THROWS_AS(g.add_edge(1, 2, 0), Error);
}

TEST_CASE("validate_path_decomposition") {
    CHECK(validate_path_decomposition(k3(), PathDecomposition{{{0, 1, 2}}}) == 2);

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(validate_path_decomposition(path, PathDecomposition{{{0, 1}, {1, 2}}}) == 1);

    CHECK(failing_category(k3(), PathDecomposition{{{0, 1}, {1, 2}}}) == "edge-coverage");
    CHECK(failing_category(path, PathDecomposition{{{0, 1}}}) == "coverage");
    CHECK(failing_category(path, PathDecomposition{{{0, 1}, {2}, {1}}}) == "contiguity");
}

TEST_CASE("trivial decomposition always validates") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        CHECK(validate_path_decomposition(g, PathDecomposition::trivial(g)) == n - 1);
    }
}

TEST_CASE("nicify emits forgets then introduces per bag") {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    NicePathDecomposition nd = nicify(path, PathDecomposition{{{0, 1}, {1, 2}}});
    using K = NicePathDecomposition::Step;
    REQUIRE(nd.steps.size() == 6);
    CHECK(nd.steps[0].kind == K::Introduce);
    CHECK(nd.steps[0].vertex == 0);
    CHECK(nd.steps[1].kind == K::Introduce);
    CHECK(nd.steps[1].vertex == 1);
    CHECK(nd.steps[2].kind == K::Forget);
    CHECK(nd.steps[2].vertex == 0);
    CHECK(nd.steps[3].kind == K::Introduce);
    CHECK(nd.steps[3].vertex == 2);
    CHECK(nd.steps[4].kind == K::Forget);
    CHECK(nd.steps[4].vertex == 1);
    CHECK(nd.steps[5].kind == K::Forget);
    CHECK(nd.steps[5].vertex == 2);
    CHECK(nd.max_live == 2);
}

TEST_CASE("nicify: single bag is introduces then forgets") {
    NicePathDecomposition nd = nicify(k3(), PathDecomposition::trivial(k3()));
    REQUIRE(nd.steps.size() == 6);
    for (int i = 0; i < 3; ++i) CHECK(nd.steps[i].kind == NicePathDecomposition::Step::Introduce);
    for (int i = 3; i < 6; ++i) CHECK(nd.steps[i].kind == NicePathDecomposition::Step::Forget);
}

TEST_CASE("nicify properties on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        // Random interval-structured decomposition: the trivial one plus a
        // randomized two-bag split when possible keeps this simple; use
        // trivial plus duplicated bags to stress dedup-free handling.
        PathDecomposition d = PathDecomposition::trivial(g);
        d.bags.push_back(d.bags[0]);
        NicePathDecomposition nd = nicify(g, d);
        CHECK(static_cast<int>(nd.steps.size()) == 2 * n);
        CHECK(nd.max_live - 1 == d.width());
        // Every edge appears exactly once as a live neighbor at introduction.
        std::size_t edge_count = 0;
        for (const auto& s : nd.steps)
            if (s.kind == NicePathDecomposition::Step::Introduce) edge_count += s.live_neighbors.size();
        CHECK(edge_count == static_cast<std::size_t>(g.num_edges()));
    }
}
