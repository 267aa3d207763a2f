#include "sethforge/decomposition.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace sethforge {

int PathDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

PathDecomposition PathDecomposition::trivial(const Graph& g) {
    PathDecomposition d;
    std::vector<int> all(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) all[i] = i;
    d.bags.push_back(std::move(all));
    return d;
}

PathDecomposition PathDecomposition::restricted_to(const std::vector<int>& verts) const {
    std::unordered_map<int, int> remap;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) remap[verts[i]] = i;
    PathDecomposition out;
    for (const auto& bag : bags) {
        std::vector<int> nb;
        for (int v : bag) {
            auto it = remap.find(v);
            if (it != remap.end()) nb.push_back(it->second);
        }
        std::sort(nb.begin(), nb.end());
        if (nb.empty()) continue;
        if (!out.bags.empty() && out.bags.back() == nb) continue;
        out.bags.push_back(std::move(nb));
    }
    return out;
}

int validate_path_decomposition(const Graph& g, const PathDecomposition& d) {
    const int n = g.num_vertices();
    if (d.bags.empty()) fail("coverage", "decomposition has no bags");
    std::vector<int> first(n, -1), last(n, -1);
    for (int i = 0; i < static_cast<int>(d.bags.size()); ++i) {
        std::unordered_set<int> seen;
        for (int v : d.bags[i]) {
            if (v < 0 || v >= n)
                fail("vertex-out-of-range", "bag " + std::to_string(i) + " contains " + std::to_string(v));
            if (!seen.insert(v).second)
                fail("duplicate-vertex", "bag " + std::to_string(i) + " repeats " + std::to_string(v));
            if (first[v] < 0) first[v] = i;
            last[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (first[v] < 0) fail("coverage", "vertex " + std::to_string(v) + " appears in no bag");
    // Contiguity: v must be in every bag between first[v] and last[v].
    std::vector<std::unordered_set<int>> sets;
    sets.reserve(d.bags.size());
    for (const auto& b : d.bags) sets.emplace_back(b.begin(), b.end());
    for (int v = 0; v < n; ++v)
        for (int i = first[v]; i <= last[v]; ++i)
            if (!sets[i].count(v))
                fail("contiguity", "vertex " + std::to_string(v) + " missing from bag " + std::to_string(i) +
                                       " inside its interval [" + std::to_string(first[v]) + "," +
                                       std::to_string(last[v]) + "]");
    for (const Graph::Edge& e : g.edges()) {
        // Intervals of u and v must overlap, and any bag in the overlap holds both.
        int lo = std::max(first[e.u], first[e.v]);
        int hi = std::min(last[e.u], last[e.v]);
        if (lo > hi)
            fail("edge-coverage", "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} uncovered");
    }
    return d.width();
}

NicePathDecomposition nicify(const Graph& g, const PathDecomposition& d) {
    validate_path_decomposition(g, d);
    NicePathDecomposition nd;
    std::unordered_set<int> live;
    auto introduce = [&](int v, int bag_index) {
        NicePathDecomposition::Step s{NicePathDecomposition::Step::Introduce, v, {}, bag_index};
        for (const auto& [w, eidx] : g.neighbors(v))
            if (live.count(w)) s.live_neighbors.push_back({w, g.edges()[eidx].weight});
        std::sort(s.live_neighbors.begin(), s.live_neighbors.end());
        live.insert(v);
        nd.max_live = std::max(nd.max_live, static_cast<int>(live.size()));
        nd.steps.push_back(std::move(s));
    };
    auto forget = [&](int v, int bag_index) {
        live.erase(v);
        nd.steps.push_back({NicePathDecomposition::Step::Forget, v, {}, bag_index});
    };

    std::vector<int> prev;
    for (int i = 0; i < static_cast<int>(d.bags.size()); ++i) {
        std::vector<int> cur = d.bags[i];
        std::sort(cur.begin(), cur.end());
        std::vector<int> gone, fresh;
        std::set_difference(prev.begin(), prev.end(), cur.begin(), cur.end(), std::back_inserter(gone));
        std::set_difference(cur.begin(), cur.end(), prev.begin(), prev.end(), std::back_inserter(fresh));
        for (int v : gone) forget(v, i);
        for (int v : fresh) introduce(v, i);
        prev = std::move(cur);
    }
    for (int v : prev) forget(v, static_cast<int>(d.bags.size()) - 1);
    return nd;
}

} // namespace sethforge
