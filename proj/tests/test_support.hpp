#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridbtw/graph.hpp"
#include "gridbtw/ingest.hpp"

namespace testsupport {

using gridbtw::Graph;
using gridbtw::NodeId;

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline Graph path_graph(NodeId n) {
    EdgeList edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return gridbtw::build_graph(edges, n);
}

// Center 0, leaves 1..n-1.
inline Graph star_graph(NodeId n) {
    EdgeList edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(0, v);
    return gridbtw::build_graph(edges, n);
}

inline Graph complete_graph(NodeId n) {
    EdgeList edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return gridbtw::build_graph(edges, n);
}

// 0-1, 0-2, 1-3, 2-3: two equal-length routes between 0 and 3.
inline Graph diamond_graph() {
    return gridbtw::build_graph(EdgeList{{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 4);
}

inline EdgeList random_connected_edges(NodeId n, std::size_t target_edges, std::mt19937& rng) {
    EdgeList edges;
    std::set<std::pair<NodeId, NodeId>> used;
    for (NodeId v = 1; v < n; ++v) {
        std::uniform_int_distribution<NodeId> pick(0, v - 1);
        const NodeId u = pick(rng);
        edges.emplace_back(std::min(u, v), std::max(u, v));
        used.insert(edges.back());
    }
    const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
    target_edges = std::min(std::max(target_edges, edges.size()), max_edges);
    std::uniform_int_distribution<NodeId> pick(0, n - 1);
    while (used.size() < target_edges) {
        NodeId u = pick(rng);
        NodeId v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (used.insert({u, v}).second) edges.emplace_back(u, v);
    }
    return edges;
}

inline Graph random_connected_graph(NodeId n, std::size_t target_edges, std::mt19937& rng) {
    return gridbtw::build_graph(random_connected_edges(n, target_edges, rng), n);
}

inline std::vector<std::int32_t> bfs_dist(const Graph& g, NodeId s) {
    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<NodeId> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (NodeId w : g.neighbors(queue[head])) {
            if (dist[w] < 0) {
                dist[w] = dist[queue[head]] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline bool rel_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = std::abs(a[i] - b[i]);
        if (diff > tol * std::max(std::abs(a[i]), std::abs(b[i])) && diff > 1e-12) return false;
    }
    return true;
}

inline gridbtw::GridModel load_ieee118() {
    const std::string path = std::string(GRIDBTW_DATA_DIR) + "/ieee118.edges";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return gridbtw::preprocess(gridbtw::read_edgelist(in));
}

}  // namespace testsupport
