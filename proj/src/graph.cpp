#include "gridbtw/graph.hpp"

#include <algorithm>

namespace gridbtw {

Graph build_graph(std::span<const std::pair<NodeId, NodeId>> edge_pairs, NodeId node_count) {
    if (node_count < 0) throw IndexOutOfRange(node_count, 0);

    std::vector<EdgeKey> edges;
    edges.reserve(edge_pairs.size());
    for (const auto& [a, b] : edge_pairs) {
        if (a < 0 || a >= node_count) throw IndexOutOfRange(a, node_count);
        if (b < 0 || b >= node_count) throw IndexOutOfRange(b, node_count);
        if (a == b) throw SelfLoop(a);
        edges.push_back(a < b ? EdgeKey{a, b} : EdgeKey{b, a});
    }

    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) throw DuplicateEdge(edges[i].u, edges[i].v);
    }

    Graph g;
    g.node_count_ = node_count;
    g.edges_ = std::move(edges);

    g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (const EdgeKey& e : g.edges_) {
        ++g.offsets_[static_cast<std::size_t>(e.u) + 1];
        ++g.offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (NodeId v = 0; v < node_count; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.adj_.resize(g.edges_.size() * 2);
    g.adj_edge_.resize(g.edges_.size() * 2);
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeKey& k = g.edges_[static_cast<std::size_t>(e)];
        g.adj_[cursor[k.u]] = k.v;
        g.adj_edge_[cursor[k.u]++] = e;
        g.adj_[cursor[k.v]] = k.u;
        g.adj_edge_[cursor[k.v]++] = e;
    }

    // Edges were inserted in canonical order, which leaves each row sorted by
    // neighbor except where a node mixes first- and second-endpoint roles.
    for (NodeId v = 0; v < node_count; ++v) {
        auto first = g.offsets_[v];
        auto last = g.offsets_[v + 1];
        std::vector<std::pair<NodeId, EdgeId>> row;
        row.reserve(static_cast<std::size_t>(last - first));
        for (auto i = first; i < last; ++i) row.emplace_back(g.adj_[i], g.adj_edge_[i]);
        std::sort(row.begin(), row.end());
        for (auto i = first; i < last; ++i) {
            g.adj_[i] = row[static_cast<std::size_t>(i - first)].first;
            g.adj_edge_[i] = row[static_cast<std::size_t>(i - first)].second;
        }
    }
    return g;
}

EdgeId Graph::edge_index(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    if (u > v) std::swap(u, v);
    auto row = neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v) throw NoSuchEdge(u, v);
    return incident_edges(u)[static_cast<std::size_t>(it - row.begin())];
}

}  // namespace gridbtw
