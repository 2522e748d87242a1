#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gridbtw/errors.hpp"

namespace gridbtw {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

// Canonical undirected edge, u < v.
struct EdgeKey {
    NodeId u;
    NodeId v;
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Immutable undirected unweighted graph in compressed adjacency (CSR) form.
///
/// Neighbor lists are sorted ascending; edge ids index the canonical edge
/// list sorted by (u, v). Safe to read from any number of threads once built.
class Graph {
public:
    Graph() = default;

    NodeId node_count() const { return node_count_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    // Edge ids of the adjacency slots of v, parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(NodeId v) const {
        check_node(v);
        return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
    }

    NodeId degree(NodeId v) const {
        check_node(v);
        return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]);
    }

    /// Stable index of the canonical edge {u, v}; order of u and v is irrelevant.
    EdgeId edge_index(NodeId u, NodeId v) const;

    const EdgeKey& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const EdgeKey> edges() const { return edges_; }

    friend Graph build_graph(std::span<const std::pair<NodeId, NodeId>> edge_pairs,
                             NodeId node_count);

private:
    void check_node(NodeId v) const {
        if (v < 0 || v >= node_count_) throw IndexOutOfRange(v, node_count_);
    }

    NodeId node_count_ = 0;
    std::vector<std::int64_t> offsets_;  // size node_count_ + 1
    std::vector<NodeId> adj_;            // size 2 * edge_count, sorted per row
    std::vector<EdgeId> adj_edge_;       // edge id per adjacency slot
    std::vector<EdgeKey> edges_;         // canonical, sorted by (u, v)
};

/// Builds a Graph from raw node-index pairs. Malformed input is rejected,
/// not repaired: self-loops throw SelfLoop, repeated pairs (in either
/// orientation) throw DuplicateEdge, bad indices throw IndexOutOfRange.
Graph build_graph(std::span<const std::pair<NodeId, NodeId>> edge_pairs, NodeId node_count);

inline Graph build_graph(const std::vector<std::pair<NodeId, NodeId>>& edge_pairs,
                         NodeId node_count) {
    return build_graph(std::span<const std::pair<NodeId, NodeId>>(edge_pairs), node_count);
}

}  // namespace gridbtw
