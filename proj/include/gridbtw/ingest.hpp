#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridbtw/graph.hpp"

namespace gridbtw {

/// Raw branch records as read from disk, before any cleaning. The JSON form
/// also fixes the node universe (isolated buses are kept); edge lists derive
/// the universe from the records themselves.
struct EdgeRecords {
    std::vector<std::pair<std::string, std::string>> records;
    std::optional<std::vector<std::string>> node_universe;
};

/// Ingested power network: the graph plus the external-id mapping and the
/// provenance of every cleaning step applied.
struct GridModel {
    Graph graph;
    std::vector<std::string> index_to_id;
    std::unordered_map<std::string, NodeId> id_to_index;

    std::int64_t dropped_self_loops = 0;
    struct CollapsedBranch {
        std::string from;
        std::string to;
        std::int64_t multiplicity;  // >= 2
    };
    std::vector<CollapsedBranch> collapsed_parallel_branches;
    int component_count = 0;
    bool lcc_applied = false;

    NodeId index_of(const std::string& id) const;
    const std::string& id_of(NodeId v) const { return index_to_id[static_cast<std::size_t>(v)]; }
};

struct PreprocessOptions {
    bool drop_self_loops = true;
    bool collapse_parallel = true;
    bool largest_component_only = false;
};

/// One branch per line, two whitespace- or comma-separated bus ids.
/// '#' lines and blank lines are ignored. Duplicates and self-loops are
/// passed through untouched; cleaning belongs to preprocess.
EdgeRecords read_edgelist(std::istream& in);

/// {"buses": [{"id": ...}, ...], "branches": [{"from": ..., "to": ...}, ...]}
/// Unknown fields are ignored; a branch naming a bus that is not listed
/// throws UnknownBus with the branch's position.
EdgeRecords read_grid_json(std::istream& in);

/// Cleans the records (self-loop removal, parallel-branch collapse, optional
/// restriction to the largest connected component) and builds the Graph.
/// External ids are ordered numerically when they all look like integers,
/// lexicographically otherwise; dense indices follow that order.
GridModel preprocess(const EdgeRecords& input, const PreprocessOptions& options = {});

/// Ordering used for external ids everywhere (dense index assignment,
/// ranking tie-breaks): numeric when both sides parse as integers, else
/// lexicographic.
bool id_less(const std::string& a, const std::string& b);

}  // namespace gridbtw
