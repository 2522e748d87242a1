#include "gridbtw/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <thread>

#include "gridbtw/errors.hpp"

namespace gridbtw {

std::string to_string(BenchTask t) {
    return t == BenchTask::Node ? "node" : "edge";
}

std::string to_string(BenchMode m) {
    return m == BenchMode::Serial ? "serial" : "parallel";
}

namespace {

bool close_enough(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = std::abs(a[i] - b[i]);
        if (diff > 1e-6 * std::max(std::abs(a[i]), std::abs(b[i])) && diff > 1e-12) return false;
    }
    return true;
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[k] : 0.5 * (xs[k - 1] + xs[k]);
}

}  // namespace

BenchReport run_benchmark(const Graph& g, const BenchOptions& options) {
    if (options.repetitions < 1) throw InvalidArgument("repetitions must be >= 1");

    BenchReport report;
    report.hardware_threads = std::thread::hardware_concurrency();
    report.timestamp = utc_now();
    report.node_count = g.node_count();
    report.edge_count = g.edge_count();

    // Untimed serial reference per task; every timed run is checked against it.
    const ScoreTable node_ref = node_betweenness_serial(g, options.convention, false);
    ScoreTable edge_ref;
    const bool wants_edge = std::find(options.tasks.begin(), options.tasks.end(),
                                      BenchTask::Edge) != options.tasks.end();
    if (wants_edge) edge_ref = edge_betweenness_serial(g, options.convention);

    auto time_cell = [&](BenchTask task, BenchMode mode, int threads) {
        const std::string cell =
            to_string(task) + "/" + to_string(mode) + "/" + std::to_string(threads);
        auto run = [&]() -> ScoreTable {
            if (mode == BenchMode::Serial) {
                return task == BenchTask::Node
                           ? node_betweenness_serial(g, options.convention, false)
                           : edge_betweenness_serial(g, options.convention);
            }
            ParallelConfig cfg;
            cfg.threads = threads;
            cfg.kernel = options.kernel;
            return task == BenchTask::Node
                       ? node_betweenness_parallel(g, cfg, options.convention, false)
                       : edge_betweenness_parallel(g, cfg, options.convention);
        };
        auto validate = [&](const ScoreTable& got) {
            const ScoreTable& ref = task == BenchTask::Node ? node_ref : edge_ref;
            if (!close_enough(got.node_scores, ref.node_scores) ||
                !close_enough(got.edge_scores, ref.edge_scores)) {
                throw ValidationFailed(cell);
            }
        };

        validate(run());  // warm-up, excluded from the statistics

        std::vector<double> times_ms;
        times_ms.reserve(static_cast<std::size_t>(options.repetitions));
        for (int rep = 0; rep < options.repetitions; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const ScoreTable got = run();
            const auto t1 = std::chrono::steady_clock::now();
            validate(got);
            times_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        report.rows.push_back({task, mode, mode == BenchMode::Serial ? 1 : threads,
                               median(times_ms), *std::min_element(times_ms.begin(), times_ms.end()),
                               options.repetitions});
    };

    for (BenchTask task : options.tasks) {
        for (BenchMode mode : options.modes) {
            if (mode == BenchMode::Serial) {
                time_cell(task, mode, 1);
            } else {
                for (int threads : options.threads_list) time_cell(task, mode, threads);
            }
        }
    }
    return report;
}

std::string bench_csv(const BenchReport& report) {
    std::string out = "task,mode,threads,median_ms,min_ms,reps\n";
    char buf[160];
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof(buf), "%s,%s,%d,%.3f,%.3f,%d\n", to_string(row.task).c_str(),
                      to_string(row.mode).c_str(), row.threads, row.median_ms, row.min_ms,
                      row.repetitions);
        out += buf;
    }
    return out;
}

std::string bench_table(const BenchReport& report) {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "# %lld nodes, %lld edges, %u hardware threads, %s\n",
                  static_cast<long long>(report.node_count),
                  static_cast<long long>(report.edge_count), report.hardware_threads,
                  report.timestamp.c_str());
    std::string out = buf;
    std::snprintf(buf, sizeof(buf), "%-6s %-9s %7s %12s %12s %5s\n", "task", "mode", "threads",
                  "median_ms", "min_ms", "reps");
    out += buf;
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof(buf), "%-6s %-9s %7d %12.3f %12.3f %5d\n",
                      to_string(row.task).c_str(), to_string(row.mode).c_str(), row.threads,
                      row.median_ms, row.min_ms, row.repetitions);
        out += buf;
    }
    return out;
}

}  // namespace gridbtw
