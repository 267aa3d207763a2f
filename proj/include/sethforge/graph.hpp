#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sethforge/error.hpp"

namespace sethforge {

// Undirected simple graph. Vertices are 0-based internally; serialization is
// 1-based. Edge weights default to 1; provenance labels name the gadget and
// role each vertex plays in a reduction.
class Graph {
public:
    struct Edge {
        int u = 0, v = 0;  // u < v
        std::int64_t weight = 1;
    };

    Graph() = default;
    explicit Graph(int num_vertices) { resize(num_vertices); }

    void resize(int n) {
        adj_.resize(n);
        labels_.resize(n);
    }

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    int add_vertex(const std::string& label = {}) {
        adj_.emplace_back();
        labels_.push_back(label);
        return num_vertices() - 1;
    }

    void add_edge(int u, int v, std::int64_t weight = 1);
    bool has_edge(int u, int v) const;

    const std::vector<Edge>& edges() const { return edges_; }
    // Neighbor list as (other endpoint, edge index) pairs.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    void set_label(int v, const std::string& s) { labels_.at(v) = s; }
    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::int64_t total_weight() const;
    bool is_unweighted() const;

    // Induced subgraph on `verts` (in the given order); indices remap to 0..k-1.
    Graph induced(const std::vector<int>& verts) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::string> labels_;
};

} // namespace sethforge
