#pragma once

#include <span>
#include <string>

#include "gridbtw/brandes.hpp"
#include "gridbtw/graph.hpp"

namespace gridbtw {

/// Which per-source kernel the parallel driver dispatches.
enum class Kernel { Stack, Superstep };

std::string to_string(Kernel k);
Kernel kernel_from_string(const std::string& s);

struct ParallelConfig {
    int threads = 8;
    bool deterministic = false;  // bit-identical output at any thread count
    Kernel kernel = Kernel::Stack;
    int chunk_size = 16;  // sources per work unit
};

/// Source-parallel node betweenness. Value-equivalent to the serial result up
/// to floating-point summation order; in deterministic mode the output is
/// bit-identical across runs and thread counts, and equal to the serial
/// result bit for bit.
ScoreTable node_betweenness_parallel(const Graph& g, const ParallelConfig& cfg,
                                     Convention convention, bool normalize);

/// Source-parallel edge betweenness (node scores are populated as well).
ScoreTable edge_betweenness_parallel(const Graph& g, const ParallelConfig& cfg,
                                     Convention convention);

/// Elementwise sum of per-worker score fragments, in fragment index order.
/// All fragments must be shaped for the same graph.
ScoreTable reduce_contributions(std::span<const ScoreTable> partials, bool deterministic);

}  // namespace gridbtw
