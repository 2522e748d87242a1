#include "gridbtw/brandes.hpp"

#include <algorithm>
#include <limits>

#include "gridbtw/errors.hpp"

namespace gridbtw {

std::string to_string(Convention c) {
    return c == Convention::DirectedSum ? "directed-sum" : "pair-once";
}

Convention convention_from_string(const std::string& s) {
    if (s == "directed-sum") return Convention::DirectedSum;
    if (s == "pair-once") return Convention::PairOnce;
    throw InvalidArgument("unknown convention '" + s + "'");
}

namespace {

inline void add_path_count(std::uint64_t& into, std::uint64_t from, NodeId at) {
    if (into > std::numeric_limits<std::uint64_t>::max() - from) throw PathCountOverflow(at);
    into += from;
}

}  // namespace

SourceState single_source_state(const Graph& g, NodeId s) {
    const NodeId n = g.node_count();
    if (s < 0 || s >= n) throw IndexOutOfRange(s, n);

    SourceState st;
    st.source = s;
    st.dist.assign(static_cast<std::size_t>(n), -1);
    st.sp_num.assign(static_cast<std::size_t>(n), 0);
    st.preds.assign(static_cast<std::size_t>(n), {});
    st.pd.assign(static_cast<std::size_t>(n), 0.0);
    st.order.reserve(static_cast<std::size_t>(n));

    st.dist[s] = 0;
    st.sp_num[s] = 1;

    // Forward BFS; neighbors come back sorted, so traversal is deterministic.
    std::vector<NodeId> queue;
    queue.reserve(static_cast<std::size_t>(n));
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        st.order.push_back(v);
        for (NodeId w : g.neighbors(v)) {
            if (st.dist[w] < 0) {
                st.dist[w] = st.dist[v] + 1;
                queue.push_back(w);
            }
            if (st.dist[w] == st.dist[v] + 1) {
                add_path_count(st.sp_num[w], st.sp_num[v], w);
                st.preds[w].push_back(v);
            }
        }
    }

    // Backward accumulation over the stack (reverse BFS order).
    for (auto it = st.order.rbegin(); it != st.order.rend(); ++it) {
        const NodeId w = *it;
        for (NodeId v : st.preds[w]) {
            st.pd[v] += (1.0 + st.pd[w]) * static_cast<double>(st.sp_num[v]) /
                        static_cast<double>(st.sp_num[w]);
        }
    }

    std::reverse(st.order.begin(), st.order.end());
    return st;
}

namespace detail {

void Workspace::reset(NodeId n) {
    dist.assign(static_cast<std::size_t>(n), -1);
    sp_num.assign(static_cast<std::size_t>(n), 0);
    pd.assign(static_cast<std::size_t>(n), 0.0);
    order.clear();
    order.reserve(static_cast<std::size_t>(n));
}

void source_pass(const Graph& g, NodeId s, Workspace& ws, double* edge_add) {
    ws.reset(g.node_count());
    ws.dist[s] = 0;
    ws.sp_num[s] = 1;
    ws.order.push_back(s);

    for (std::size_t head = 0; head < ws.order.size(); ++head) {
        const NodeId v = ws.order[head];
        for (NodeId w : g.neighbors(v)) {
            if (ws.dist[w] < 0) {
                ws.dist[w] = ws.dist[v] + 1;
                ws.order.push_back(w);
            }
            if (ws.dist[w] == ws.dist[v] + 1) add_path_count(ws.sp_num[w], ws.sp_num[v], w);
        }
    }

    // Pop in reverse BFS order; the neighbors of w one level up are exactly
    // its predecessors, in the same per-entry accumulation order as the
    // stored-predecessor route.
    for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
        const NodeId w = *it;
        const auto nbrs = g.neighbors(w);
        const auto eids = g.incident_edges(w);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const NodeId v = nbrs[i];
            if (ws.dist[v] + 1 != ws.dist[w]) continue;
            const double temp = (1.0 + ws.pd[w]) * static_cast<double>(ws.sp_num[v]) /
                                static_cast<double>(ws.sp_num[w]);
            ws.pd[v] += temp;
            if (edge_add != nullptr) edge_add[eids[i]] += temp;
        }
    }
}

void scale_scores(ScoreTable& t, Convention convention, bool normalize, NodeId n) {
    if (convention == Convention::PairOnce) {
        for (double& x : t.node_scores) x *= 0.5;
        for (double& x : t.edge_scores) x *= 0.5;
    }
    if (normalize) {
        const double factor =
            (static_cast<double>(n) - 1.0) * (static_cast<double>(n) - 2.0) / 2.0;
        for (double& x : t.node_scores) x /= factor;
        t.normalized = true;
    }
}

}  // namespace detail

namespace {

ScoreTable betweenness_serial(const Graph& g, Convention convention, bool normalize,
                              bool want_edges) {
    const NodeId n = g.node_count();
    if (normalize && n < 3) throw NormalizeTooSmall(n);

    ScoreTable t;
    t.convention = convention;
    t.node_scores.assign(static_cast<std::size_t>(n), 0.0);
    if (want_edges) t.edge_scores.assign(static_cast<std::size_t>(g.edge_count()), 0.0);

    detail::Workspace ws;
    double* edge_acc = want_edges ? t.edge_scores.data() : nullptr;
    for (NodeId s = 0; s < n; ++s) {
        detail::source_pass(g, s, ws, edge_acc);
        for (NodeId w = 0; w < n; ++w) {
            if (w != s) t.node_scores[w] += ws.pd[w];
        }
    }

    detail::scale_scores(t, convention, normalize, n);
    return t;
}

}  // namespace

ScoreTable node_betweenness_serial(const Graph& g, Convention convention, bool normalize) {
    return betweenness_serial(g, convention, normalize, /*want_edges=*/false);
}

ScoreTable edge_betweenness_serial(const Graph& g, Convention convention) {
    return betweenness_serial(g, convention, /*normalize=*/false, /*want_edges=*/true);
}

}  // namespace gridbtw
