#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gridbtw/graph.hpp"

namespace gridbtw {

/// Level-synchronous working set for one source: explicit BFS frontiers plus
/// the node properties (dist, sp_num, pd) the sweeps evolve.
struct LevelState {
    NodeId source = 0;
    std::vector<std::vector<NodeId>> frontiers;  // frontiers[k] = nodes at distance k
    std::int32_t curr_dist = 0;                  // deepest nonempty level
    std::vector<std::int32_t> dist;
    std::vector<std::uint64_t> sp_num;
    std::vector<double> pd;
};

/// What one source adds to the global scores.
struct SourceContribution {
    NodeId source = 0;
    std::vector<double> node_add;
    std::vector<double> edge_add;  // empty unless edges were requested
};

/// Forward while-loop: discovers frontiers level by level. Distances of a
/// new frontier are assigned before its path counts are accumulated, so
/// sp_num[t] sums sp_num[v] over every edge (v, t) one level apart.
/// If trace is non-null, one line per superstep (level, frontier size).
LevelState forward_sweep(const Graph& g, NodeId s, std::ostream* trace = nullptr);

/// Backward while-loop: walks cross-level edges from the deepest frontier
/// toward the source, accumulating pair-dependencies (and, on request, the
/// per-edge terms). Results do not depend on intra-frontier order.
SourceContribution backward_sweep(const Graph& g, LevelState& state, bool accumulate_edges);

}  // namespace gridbtw
