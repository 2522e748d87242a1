#pragma once

#include <string>
#include <vector>

#include "gridbtw/brandes.hpp"
#include "gridbtw/graph.hpp"
#include "gridbtw/parallel.hpp"

namespace gridbtw {

enum class BenchTask { Node, Edge };
enum class BenchMode { Serial, Parallel };

struct BenchOptions {
    std::vector<BenchTask> tasks = {BenchTask::Node, BenchTask::Edge};
    std::vector<BenchMode> modes = {BenchMode::Serial, BenchMode::Parallel};
    std::vector<int> threads_list = {8};
    int repetitions = 3;
    Convention convention = Convention::PairOnce;
    Kernel kernel = Kernel::Stack;
};

/// Wall-clock grid shaped like the thread-sweep tables: one row per (task,
/// mode, threads), serial rows once per task.
struct BenchReport {
    struct Row {
        BenchTask task;
        BenchMode mode;
        int threads;
        double median_ms;
        double min_ms;
        int repetitions;
    };
    std::vector<Row> rows;
    unsigned hardware_threads = 0;
    std::string timestamp;
    std::int64_t node_count = 0;
    std::int64_t edge_count = 0;
};

/// Times every requested cell, excluding one warm-up run per cell. Every
/// timed run's scores are checked against the serial reference (1e-6
/// relative) before the timing is accepted; a divergent run throws
/// ValidationFailed naming the cell.
BenchReport run_benchmark(const Graph& g, const BenchOptions& options);

std::string bench_csv(const BenchReport& report);
std::string bench_table(const BenchReport& report);

std::string to_string(BenchTask t);
std::string to_string(BenchMode m);

}  // namespace gridbtw
