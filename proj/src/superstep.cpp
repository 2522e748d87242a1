#include "gridbtw/superstep.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "gridbtw/errors.hpp"

namespace gridbtw {

namespace {

inline void add_path_count(std::uint64_t& into, std::uint64_t from, NodeId at) {
    if (into > std::numeric_limits<std::uint64_t>::max() - from) throw PathCountOverflow(at);
    into += from;
}

}  // namespace

LevelState forward_sweep(const Graph& g, NodeId s, std::ostream* trace) {
    const NodeId n = g.node_count();
    if (s < 0 || s >= n) throw IndexOutOfRange(s, n);

    LevelState st;
    st.source = s;
    st.dist.assign(static_cast<std::size_t>(n), -1);
    st.sp_num.assign(static_cast<std::size_t>(n), 0);
    st.pd.assign(static_cast<std::size_t>(n), 0.0);
    st.dist[s] = 0;
    st.sp_num[s] = 1;
    st.frontiers.push_back({s});
    if (trace != nullptr) *trace << "level 0: frontier size 1\n";

    while (true) {
        const auto& start = st.frontiers.back();
        std::vector<NodeId> next;
        for (NodeId v : start) {
            for (NodeId t : g.neighbors(v)) {
                if (st.dist[t] < 0) {
                    st.dist[t] = st.dist[v] + 1;
                    next.push_back(t);
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());

        // Path counts for the fresh frontier; the previous level's counts are
        // final, so any processing order of t gives the same sums.
        for (NodeId t : next) {
            for (NodeId v : g.neighbors(t)) {
                if (st.dist[v] + 1 == st.dist[t]) add_path_count(st.sp_num[t], st.sp_num[v], t);
            }
        }
        if (trace != nullptr) {
            *trace << "level " << st.frontiers.size() << ": frontier size " << next.size()
                   << "\n";
        }
        st.frontiers.push_back(std::move(next));
    }

    st.curr_dist = static_cast<std::int32_t>(st.frontiers.size()) - 1;
    return st;
}

SourceContribution backward_sweep(const Graph& g, LevelState& state, bool accumulate_edges) {
    const NodeId n = g.node_count();
    if (static_cast<NodeId>(state.dist.size()) != n ||
        static_cast<NodeId>(state.sp_num.size()) != n ||
        static_cast<NodeId>(state.pd.size()) != n) {
        throw StateMismatch("level state does not match the graph's node count");
    }
    if (state.frontiers.empty() ||
        state.curr_dist != static_cast<std::int32_t>(state.frontiers.size()) - 1) {
        throw StateMismatch("level state was not produced by a forward sweep");
    }

    SourceContribution out;
    out.source = state.source;
    out.node_add.assign(static_cast<std::size_t>(n), 0.0);
    if (accumulate_edges) {
        out.edge_add.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
    }
    std::fill(state.pd.begin(), state.pd.end(), 0.0);

    // Walk levels deepest-first. Processing level L updates pd of the nodes
    // one level shallower via the cross edges into L; pd of level L itself
    // was finalized while processing L + 1. Each shallow node reads its own
    // adjacency, so intra-frontier order cannot change any value.
    for (std::int32_t level = state.curr_dist; level >= 1; --level) {
        for (NodeId v : state.frontiers[static_cast<std::size_t>(level) - 1]) {
            const auto nbrs = g.neighbors(v);
            const auto eids = g.incident_edges(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const NodeId t = nbrs[i];
                if (state.dist[t] != level) continue;
                const double temp = static_cast<double>(state.sp_num[v]) /
                                    static_cast<double>(state.sp_num[t]) *
                                    (1.0 + state.pd[t]);
                state.pd[v] += temp;
                if (accumulate_edges) out.edge_add[eids[i]] += temp;
            }
        }
    }

    for (NodeId v = 0; v < n; ++v) {
        if (v != state.source) out.node_add[v] = state.pd[v];
    }
    return out;
}

}  // namespace gridbtw
