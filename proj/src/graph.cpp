#include "sethforge/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace sethforge {

void Graph::add_edge(int u, int v, std::int64_t weight) {
    if (u == v) fail("self-loop", "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        fail("vertex-out-of-range", "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (weight < 1) fail("invalid-weight", "edge weight must be >= 1");
    if (has_edge(u, v))
        fail("parallel-edge", "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
    if (u > v) std::swap(u, v);
    int idx = num_edges();
    edges_.push_back({u, v, weight});
    adj_[u].push_back({v, idx});
    adj_[v].push_back({u, idx});
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_.at(u);
    const auto& b = adj_.at(v);
    const auto& shorter = a.size() <= b.size() ? a : b;
    int other = a.size() <= b.size() ? v : u;
    for (const auto& [w, idx] : shorter)
        if (w == other) return true;
    return false;
}

std::int64_t Graph::total_weight() const {
    std::int64_t w = 0;
    for (const Edge& e : edges_) w += e.weight;
    return w;
}

bool Graph::is_unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1; });
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::unordered_map<int, int> remap;
    remap.reserve(verts.size());
    Graph g(static_cast<int>(verts.size()));
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        remap[verts[i]] = i;
        g.set_label(i, label(verts[i]));
    }
    for (const Edge& e : edges_) {
        auto iu = remap.find(e.u), iv = remap.find(e.v);
        if (iu != remap.end() && iv != remap.end()) g.add_edge(iu->second, iv->second, e.weight);
    }
    return g;
}

} // namespace sethforge
