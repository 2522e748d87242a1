#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridbtw/graph.hpp"

namespace gridbtw {

/// How unordered node pairs of the undirected graph are counted.
///
/// DirectedSum runs the textbook accumulation with every node as a source,
/// so each unordered pair {s, t} contributes twice. PairOnce is exactly half
/// of that and is what the published 118-bus reference values use; it is the
/// default everywhere.
enum class Convention { DirectedSum, PairOnce };

std::string to_string(Convention c);
Convention convention_from_string(const std::string& s);

/// Per-source Brandes working set: BFS distances, shortest-path counts,
/// predecessor lists, traversal order, and pair-dependencies.
struct SourceState {
    NodeId source = 0;
    std::vector<std::int32_t> dist;       // -1 = unreached
    std::vector<std::uint64_t> sp_num;    // sigma: number of shortest paths from source
    std::vector<std::vector<NodeId>> preds;
    std::vector<NodeId> order;            // reached nodes, nonincreasing distance
    std::vector<double> pd;               // delta: pair-dependency of each node
};

/// Betweenness accumulator plus the convention it was produced under.
struct ScoreTable {
    std::vector<double> node_scores;
    std::vector<double> edge_scores;  // empty for node-only runs
    Convention convention = Convention::PairOnce;
    bool normalized = false;
};

/// Forward BFS plus backward dependency accumulation for one source.
/// pd[source] is computed like any other entry but never enters any score.
SourceState single_source_state(const Graph& g, NodeId s);

/// Node betweenness by the serial stack algorithm. Deterministic.
/// With normalize, node scores are divided by (N-1)(N-2)/2 (requires N >= 3).
ScoreTable node_betweenness_serial(const Graph& g, Convention convention, bool normalize);

/// Edge betweenness by the serial stack algorithm; node scores are kept too.
ScoreTable edge_betweenness_serial(const Graph& g, Convention convention);

namespace detail {

// Reusable per-worker buffers so an n-source sweep does not allocate per source.
struct Workspace {
    std::vector<std::int32_t> dist;
    std::vector<std::uint64_t> sp_num;
    std::vector<NodeId> order;  // BFS dequeue order (nondecreasing distance)
    std::vector<double> pd;

    void reset(NodeId n);
};

// One full Brandes pass for source s using ws buffers. Predecessors are not
// stored; the backward pass scans each popped node's neighbors one BFS level
// up, which visits exactly the predecessor set in the same accumulation
// order. If edge_add is non-null (length = edge_count, zeroed by caller of a
// fresh pass or accumulated across sources), each cross-level edge receives
// the Brandes edge term for this source.
void source_pass(const Graph& g, NodeId s, Workspace& ws, double* edge_add);

void scale_scores(ScoreTable& t, Convention convention, bool normalize, NodeId n);

}  // namespace detail

}  // namespace gridbtw
