#pragma once

#include <vector>

#include "gridbtw/brandes.hpp"
#include "gridbtw/graph.hpp"

namespace gridbtw {
namespace oracle {

/// Every shortest s-t path, spelled out node by node.
struct PathSet {
    NodeId s = 0;
    NodeId t = 0;
    std::vector<std::vector<NodeId>> paths;
    std::int32_t length = 0;  // common hop count
};

/// Exhaustive, duplicate-free enumeration of the shortest s-t paths by DFS
/// over the BFS distance structure. Throws Unreachable when no path exists
/// (s == t yields the single zero-length path) and TooLarge past 10^6 paths.
PathSet enumerate_shortest_paths(const Graph& g, NodeId s, NodeId t);

/// Betweenness computed literally from enumerated paths: for every connected
/// unordered pair, each interior node of each shortest path collects
/// 1/sigma_st. Ground truth for the fast kernels; intended for small graphs.
ScoreTable node_betweenness(const Graph& g, Convention convention);

/// Same, accumulating onto the edges of each path.
ScoreTable edge_betweenness(const Graph& g, Convention convention);

}  // namespace oracle
}  // namespace gridbtw
