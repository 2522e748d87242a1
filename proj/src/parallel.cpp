#include "gridbtw/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "gridbtw/errors.hpp"
#include "gridbtw/superstep.hpp"

namespace gridbtw {

std::string to_string(Kernel k) {
    return k == Kernel::Stack ? "stack" : "superstep";
}

Kernel kernel_from_string(const std::string& s) {
    if (s == "stack") return Kernel::Stack;
    if (s == "superstep") return Kernel::Superstep;
    throw InvalidArgument("unknown kernel '" + s + "'");
}

namespace {

struct SourceResult {
    std::vector<double> node_add;  // node_add[source] == 0
    std::vector<double> edge_add;
};

// Contribution of one source under the configured kernel. The stack route
// reuses ws; the superstep route carries its own level state.
SourceResult compute_contribution(const Graph& g, NodeId s, Kernel kernel, bool want_edges,
                                  detail::Workspace& ws) {
    if (kernel == Kernel::Superstep) {
        LevelState lst = forward_sweep(g, s);
        SourceContribution c = backward_sweep(g, lst, want_edges);
        return {std::move(c.node_add), std::move(c.edge_add)};
    }
    SourceResult r;
    if (want_edges) r.edge_add.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
    detail::source_pass(g, s, ws, want_edges ? r.edge_add.data() : nullptr);
    r.node_add = ws.pd;
    r.node_add[static_cast<std::size_t>(s)] = 0.0;
    return r;
}

struct ChunkGrid {
    NodeId n;
    int chunk_size;
    int total;
    NodeId begin(int c) const { return static_cast<NodeId>(c) * chunk_size; }
    NodeId end(int c) const {
        return std::min<NodeId>(n, (static_cast<NodeId>(c) + 1) * chunk_size);
    }
};

struct Failure {
    std::atomic<bool> failed{false};
    std::mutex m;
    std::int64_t source = -1;
    std::string what;

    void record(NodeId s, const char* msg) {
        std::lock_guard lk(m);
        if (!failed.load()) {
            source = s;
            what = msg;
            failed.store(true);
        }
    }
};

void warn_if_oversubscribed(int threads) {
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && threads > static_cast<int>(hw)) {
        std::fprintf(stderr,
                     "warning: %d threads requested but only %u hardware threads available\n",
                     threads, hw);
    }
}

// Default mode: every worker folds its sources into a private fragment;
// fragments are reduced at the end. No shared accumulators on the hot path.
ScoreTable run_fragmented(const Graph& g, const ParallelConfig& cfg, bool want_edges,
                          const ChunkGrid& grid, int workers) {
    const NodeId n = g.node_count();
    std::vector<ScoreTable> fragments(static_cast<std::size_t>(workers));
    for (auto& f : fragments) {
        f.node_scores.assign(static_cast<std::size_t>(n), 0.0);
        if (want_edges) f.edge_scores.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
    }

    std::atomic<int> next_chunk{0};
    Failure failure;

    auto work = [&](int worker_index) {
        detail::Workspace ws;
        ScoreTable& frag = fragments[static_cast<std::size_t>(worker_index)];
        for (;;) {
            const int c = next_chunk.fetch_add(1);
            if (c >= grid.total || failure.failed.load()) return;
            for (NodeId s = grid.begin(c); s < grid.end(c); ++s) {
                try {
                    if (cfg.kernel == Kernel::Stack) {
                        detail::source_pass(g, s, ws,
                                            want_edges ? frag.edge_scores.data() : nullptr);
                        for (NodeId v = 0; v < n; ++v) {
                            if (v != s) frag.node_scores[v] += ws.pd[v];
                        }
                    } else {
                        SourceResult r = compute_contribution(g, s, cfg.kernel, want_edges, ws);
                        for (NodeId v = 0; v < n; ++v) frag.node_scores[v] += r.node_add[v];
                        for (std::size_t e = 0; e < r.edge_add.size(); ++e) {
                            frag.edge_scores[e] += r.edge_add[e];
                        }
                    }
                } catch (const std::exception& ex) {
                    failure.record(s, ex.what());
                    return;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
    if (failure.failed.load()) throw ComputeError(failure.source, failure.what);

    return reduce_contributions(fragments, cfg.deterministic);
}

// Deterministic mode: per-source contributions are folded into one global
// accumulator in strictly ascending source order, whichever worker produced
// them. This reproduces the serial accumulation chain exactly, so the output
// is bit-identical for any thread count. A bounded reorder buffer keeps
// memory at O(buffer * (n + m)); the holder of the next chunk to merge is
// always admitted, so the buffer cannot deadlock.
ScoreTable run_ordered(const Graph& g, const ParallelConfig& cfg, bool want_edges,
                       const ChunkGrid& grid, int workers) {
    const NodeId n = g.node_count();
    ScoreTable total;
    total.node_scores.assign(static_cast<std::size_t>(n), 0.0);
    if (want_edges) total.edge_scores.assign(static_cast<std::size_t>(g.edge_count()), 0.0);

    using ChunkResult = std::vector<SourceResult>;
    std::mutex m;
    std::condition_variable cv;
    std::map<int, ChunkResult> ready;
    int next_dispatch = 0;
    int next_merge = 0;
    Failure failure;
    const std::size_t buffer_cap = static_cast<std::size_t>(workers) * 2 + 2;

    auto work = [&] {
        detail::Workspace ws;
        for (;;) {
            int c = -1;
            {
                std::lock_guard lk(m);
                if (failure.failed.load() || next_dispatch >= grid.total) return;
                c = next_dispatch++;
            }

            ChunkResult result;
            result.reserve(static_cast<std::size_t>(grid.end(c) - grid.begin(c)));
            for (NodeId s = grid.begin(c); s < grid.end(c); ++s) {
                try {
                    result.push_back(compute_contribution(g, s, cfg.kernel, want_edges, ws));
                } catch (const std::exception& ex) {
                    failure.record(s, ex.what());
                    cv.notify_all();
                    return;
                }
            }

            std::unique_lock lk(m);
            cv.wait(lk, [&] {
                return failure.failed.load() || c == next_merge || ready.size() < buffer_cap;
            });
            if (failure.failed.load()) return;
            ready.emplace(c, std::move(result));
            while (true) {
                auto it = ready.find(next_merge);
                if (it == ready.end()) break;
                for (const SourceResult& r : it->second) {
                    for (NodeId v = 0; v < n; ++v) total.node_scores[v] += r.node_add[v];
                    for (std::size_t e = 0; e < r.edge_add.size(); ++e) {
                        total.edge_scores[e] += r.edge_add[e];
                    }
                }
                ready.erase(it);
                ++next_merge;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure.failed.load()) throw ComputeError(failure.source, failure.what);

    return total;
}

ScoreTable betweenness_parallel(const Graph& g, const ParallelConfig& cfg, Convention convention,
                                bool normalize, bool want_edges) {
    if (cfg.threads < 1) throw InvalidArgument("threads must be >= 1");
    if (cfg.chunk_size < 1) throw InvalidArgument("chunk_size must be >= 1");

    const NodeId n = g.node_count();
    if (normalize && n < 3) throw NormalizeTooSmall(n);

    ScoreTable t;
    t.convention = convention;
    if (n == 0) {
        if (want_edges) t.edge_scores.clear();
        return t;
    }

    warn_if_oversubscribed(cfg.threads);
    const ChunkGrid grid{n, cfg.chunk_size,
                         static_cast<int>((static_cast<std::int64_t>(n) + cfg.chunk_size - 1) /
                                          cfg.chunk_size)};
    const int workers = std::min(cfg.threads, grid.total);

    t = cfg.deterministic ? run_ordered(g, cfg, want_edges, grid, workers)
                          : run_fragmented(g, cfg, want_edges, grid, workers);
    t.convention = convention;
    detail::scale_scores(t, convention, normalize, n);
    return t;
}

}  // namespace

ScoreTable node_betweenness_parallel(const Graph& g, const ParallelConfig& cfg,
                                     Convention convention, bool normalize) {
    return betweenness_parallel(g, cfg, convention, normalize, /*want_edges=*/false);
}

ScoreTable edge_betweenness_parallel(const Graph& g, const ParallelConfig& cfg,
                                     Convention convention) {
    return betweenness_parallel(g, cfg, convention, /*normalize=*/false, /*want_edges=*/true);
}

ScoreTable reduce_contributions(std::span<const ScoreTable> partials, bool deterministic) {
    (void)deterministic;  // both modes fold in fragment index order
    if (partials.empty()) return {};

    const ScoreTable& first = partials.front();
    ScoreTable out;
    out.convention = first.convention;
    out.normalized = first.normalized;
    out.node_scores.assign(first.node_scores.size(), 0.0);
    out.edge_scores.assign(first.edge_scores.size(), 0.0);

    for (const ScoreTable& p : partials) {
        if (p.node_scores.size() != first.node_scores.size() ||
            p.edge_scores.size() != first.edge_scores.size()) {
            throw ShapeMismatch("fragments are shaped for different graphs");
        }
        if (p.convention != first.convention || p.normalized != first.normalized) {
            throw ShapeMismatch("fragments carry different conventions");
        }
        for (std::size_t v = 0; v < p.node_scores.size(); ++v) {
            out.node_scores[v] += p.node_scores[v];
        }
        for (std::size_t e = 0; e < p.edge_scores.size(); ++e) {
            out.edge_scores[e] += p.edge_scores[e];
        }
    }
    return out;
}

}  // namespace gridbtw
