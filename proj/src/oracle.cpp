#include "gridbtw/oracle.hpp"

#include <cstdint>

#include "gridbtw/errors.hpp"

namespace gridbtw {
namespace oracle {

namespace {

constexpr std::int64_t kMaxPaths = 1'000'000;

std::vector<std::int32_t> bfs_distances(const Graph& g, NodeId s) {
    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<NodeId> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        for (NodeId w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

void extend_path(const Graph& g, NodeId t, const std::vector<std::int32_t>& dist_s,
                 const std::vector<std::int32_t>& dist_t, std::int32_t length,
                 std::vector<NodeId>& path, std::vector<std::vector<NodeId>>& out) {
    const NodeId u = path.back();
    if (u == t) {
        if (static_cast<std::int64_t>(out.size()) >= kMaxPaths) {
            throw TooLarge("more than 10^6 shortest paths between one pair");
        }
        out.push_back(path);
        return;
    }
    for (NodeId v : g.neighbors(u)) {
        // Stay on nodes that lie on some shortest s-t path, one level deeper.
        if (dist_s[v] != dist_s[u] + 1) continue;
        if (dist_t[v] < 0 || dist_s[v] + dist_t[v] != length) continue;
        path.push_back(v);
        extend_path(g, t, dist_s, dist_t, length, path, out);
        path.pop_back();
    }
}

}  // namespace

PathSet enumerate_shortest_paths(const Graph& g, NodeId s, NodeId t) {
    const NodeId n = g.node_count();
    if (s < 0 || s >= n) throw IndexOutOfRange(s, n);
    if (t < 0 || t >= n) throw IndexOutOfRange(t, n);

    PathSet ps;
    ps.s = s;
    ps.t = t;
    if (s == t) {
        ps.paths.push_back({s});
        ps.length = 0;
        return ps;
    }

    const auto dist_s = bfs_distances(g, s);
    if (dist_s[t] < 0) throw Unreachable(s, t);
    const auto dist_t = bfs_distances(g, t);

    ps.length = dist_s[t];
    std::vector<NodeId> path{s};
    extend_path(g, t, dist_s, dist_t, ps.length, path, ps.paths);
    return ps;
}

namespace {

ScoreTable betweenness_by_enumeration(const Graph& g, Convention convention, bool edges) {
    const NodeId n = g.node_count();
    ScoreTable table;
    table.convention = convention;
    if (edges) {
        table.edge_scores.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
    } else {
        table.node_scores.assign(static_cast<std::size_t>(n), 0.0);
    }

    std::vector<std::int64_t> hits(edges ? g.edge_count() : n, 0);
    for (NodeId s = 0; s < n; ++s) {
        const auto dist_s = bfs_distances(g, s);
        for (NodeId t = s + 1; t < n; ++t) {
            if (dist_s[t] < 0) continue;
            const PathSet ps = enumerate_shortest_paths(g, s, t);
            std::fill(hits.begin(), hits.end(), 0);
            for (const auto& path : ps.paths) {
                if (edges) {
                    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                        ++hits[g.edge_index(path[i], path[i + 1])];
                    }
                } else {
                    for (std::size_t i = 1; i + 1 < path.size(); ++i) ++hits[path[i]];
                }
            }
            auto& scores = edges ? table.edge_scores : table.node_scores;
            const double sigma = static_cast<double>(ps.paths.size());
            for (std::size_t k = 0; k < hits.size(); ++k) {
                if (hits[k] != 0) scores[k] += static_cast<double>(hits[k]) / sigma;
            }
        }
    }

    if (convention == Convention::DirectedSum) {
        for (double& x : table.node_scores) x *= 2.0;
        for (double& x : table.edge_scores) x *= 2.0;
    }
    return table;
}

}  // namespace

ScoreTable node_betweenness(const Graph& g, Convention convention) {
    return betweenness_by_enumeration(g, convention, /*edges=*/false);
}

ScoreTable edge_betweenness(const Graph& g, Convention convention) {
    return betweenness_by_enumeration(g, convention, /*edges=*/true);
}

}  // namespace oracle
}  // namespace gridbtw
