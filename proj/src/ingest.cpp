#include "gridbtw/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gridbtw/errors.hpp"

namespace gridbtw {

namespace {

std::optional<long long> as_integer(const std::string& s) {
    if (s.empty()) return std::nullopt;
    long long value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

std::string json_id_to_string(const nlohmann::json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError(std::string(what) + " must be an integer or a string, got " + j.dump());
}

}  // namespace

bool id_less(const std::string& a, const std::string& b) {
    const auto na = as_integer(a);
    const auto nb = as_integer(b);
    if (na && nb && *na != *nb) return *na < *nb;
    if (na && !nb) return true;  // numeric ids sort before symbolic ones
    if (!na && nb) return false;
    return a < b;
}

NodeId GridModel::index_of(const std::string& id) const {
    auto it = id_to_index.find(id);
    if (it == id_to_index.end()) throw UnknownBus(-1, id);
    return it->second;
}

EdgeRecords read_edgelist(std::istream& in) {
    EdgeRecords out;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line;
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream fields(body);
        std::string a, b, extra;
        if (!(fields >> a)) continue;      // blank line
        if (a.front() == '#') continue;    // comment
        if (!(fields >> b) || (fields >> extra)) {
            throw ParseError(line_no, "expected two bus ids, got '" + line + "'");
        }
        out.records.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

EdgeRecords read_grid_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object() || !doc.contains("buses") || !doc.contains("branches")) {
        throw ParseError("document must have top-level 'buses' and 'branches' arrays");
    }

    EdgeRecords out;
    std::vector<std::string> universe;
    std::set<std::string> known;
    for (const auto& bus : doc.at("buses")) {
        if (!bus.is_object() || !bus.contains("id")) {
            throw ParseError("every bus needs an 'id' field");
        }
        std::string id = json_id_to_string(bus.at("id"), "bus id");
        if (known.insert(id).second) universe.push_back(std::move(id));
    }

    std::int64_t branch_index = 0;
    for (const auto& branch : doc.at("branches")) {
        if (!branch.is_object() || !branch.contains("from") || !branch.contains("to")) {
            throw ParseError("every branch needs 'from' and 'to' fields");
        }
        std::string from = json_id_to_string(branch.at("from"), "branch endpoint");
        std::string to = json_id_to_string(branch.at("to"), "branch endpoint");
        if (!known.contains(from)) throw UnknownBus(branch_index, from);
        if (!known.contains(to)) throw UnknownBus(branch_index, to);
        out.records.emplace_back(std::move(from), std::move(to));
        ++branch_index;
    }
    out.node_universe = std::move(universe);
    return out;
}

GridModel preprocess(const EdgeRecords& input, const PreprocessOptions& options) {
    // Node universe: explicit if given, otherwise every id seen in a record.
    std::vector<std::string> ids;
    if (input.node_universe) {
        ids = *input.node_universe;
    } else {
        std::set<std::string> seen;
        for (const auto& [a, b] : input.records) {
            if (seen.insert(a).second) ids.push_back(a);
            if (seen.insert(b).second) ids.push_back(b);
        }
    }
    if (ids.empty()) throw EmptyGraph();
    std::sort(ids.begin(), ids.end(), id_less);

    GridModel model;
    model.index_to_id = std::move(ids);
    for (NodeId i = 0; i < static_cast<NodeId>(model.index_to_id.size()); ++i) {
        model.id_to_index.emplace(model.index_to_id[static_cast<std::size_t>(i)], i);
    }

    // Clean in order: self-loops out, duplicates collapsed with multiplicity.
    std::map<std::pair<NodeId, NodeId>, std::int64_t> multiplicity;
    std::vector<std::pair<NodeId, NodeId>> dense_edges;
    std::int64_t branch_index = 0;
    for (const auto& [a, b] : input.records) {
        const auto ia = model.id_to_index.find(a);
        const auto ib = model.id_to_index.find(b);
        if (ia == model.id_to_index.end()) throw UnknownBus(branch_index, a);
        if (ib == model.id_to_index.end()) throw UnknownBus(branch_index, b);
        ++branch_index;

        NodeId u = ia->second;
        NodeId v = ib->second;
        if (u == v) {
            if (!options.drop_self_loops) {
                dense_edges.emplace_back(u, v);  // graph-core will reject it
            } else {
                ++model.dropped_self_loops;
            }
            continue;
        }
        if (u > v) std::swap(u, v);
        if (options.collapse_parallel) {
            if (++multiplicity[{u, v}] == 1) dense_edges.emplace_back(u, v);
        } else {
            dense_edges.emplace_back(u, v);
        }
    }
    for (const auto& [key, count] : multiplicity) {
        if (count >= 2) {
            model.collapsed_parallel_branches.push_back(
                {model.id_of(key.first), model.id_of(key.second), count});
        }
    }

    // Connected components over the cleaned edges (isolated nodes count).
    const NodeId n = static_cast<NodeId>(model.index_to_id.size());
    std::vector<NodeId> component(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : dense_edges) {
        if (u != v) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    NodeId component_count = 0;
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (component[start] >= 0) continue;
        component[start] = component_count;
        stack.push_back(start);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : adj[v]) {
                if (component[w] < 0) {
                    component[w] = component_count;
                    stack.push_back(w);
                }
            }
        }
        ++component_count;
    }
    model.component_count = component_count;

    if (options.largest_component_only && component_count > 1) {
        std::vector<std::int64_t> size(static_cast<std::size_t>(component_count), 0);
        for (NodeId v = 0; v < n; ++v) ++size[component[v]];
        // Largest component wins; ties go to the one seen first.
        NodeId keep = 0;
        for (NodeId c = 1; c < component_count; ++c) {
            if (size[c] > size[keep]) keep = c;
        }

        std::vector<std::string> kept_ids;
        for (NodeId v = 0; v < n; ++v) {
            if (component[v] == keep) kept_ids.push_back(model.index_to_id[v]);
        }
        std::vector<std::pair<NodeId, NodeId>> kept_edges;
        std::unordered_map<std::string, NodeId> new_index;
        for (NodeId i = 0; i < static_cast<NodeId>(kept_ids.size()); ++i) {
            new_index.emplace(kept_ids[static_cast<std::size_t>(i)], i);
        }
        for (const auto& [u, v] : dense_edges) {
            if (component[u] == keep) {
                kept_edges.emplace_back(new_index.at(model.id_of(u)),
                                        new_index.at(model.id_of(v)));
            }
        }
        model.index_to_id = std::move(kept_ids);
        model.id_to_index = std::move(new_index);
        model.lcc_applied = true;
        dense_edges = std::move(kept_edges);
    }

    model.graph = build_graph(dense_edges, static_cast<NodeId>(model.index_to_id.size()));
    return model;
}

}  // namespace gridbtw
