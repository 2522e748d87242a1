#include <doctest.h>

#include <random>
#include <sstream>

#include "gridbtw/bench.hpp"
#include "test_support.hpp"

using namespace gridbtw;

TEST_CASE("run_benchmark validates repetitions") {
    const Graph g = testsupport::path_graph(3);
    BenchOptions opt;
    opt.repetitions = 0;
    CHECK_THROWS_AS(run_benchmark(g, opt), InvalidArgument);
}

TEST_CASE("run_benchmark produces one row per cell") {
    std::mt19937 rng(83);
    const Graph g = testsupport::random_connected_graph(40, 80, rng);

    BenchOptions opt;
    opt.tasks = {BenchTask::Node, BenchTask::Edge};
    opt.modes = {BenchMode::Serial, BenchMode::Parallel};
    opt.threads_list = {8};
    opt.repetitions = 2;
    const BenchReport report = run_benchmark(g, opt);

    REQUIRE(report.rows.size() == 4);  // serial once per task, parallel per thread count
    for (const auto& row : report.rows) {
        CHECK(row.median_ms > 0.0);
        CHECK(row.min_ms > 0.0);
        CHECK(row.min_ms <= row.median_ms);
        CHECK(row.repetitions == 2);
    }
    CHECK(report.node_count == 40);
    CHECK_FALSE(report.timestamp.empty());
}

TEST_CASE("thread sweep covers the requested grid") {
    std::mt19937 rng(89);
    const Graph g = testsupport::random_connected_graph(30, 60, rng);

    BenchOptions opt;
    opt.tasks = {BenchTask::Node};
    opt.modes = {BenchMode::Parallel};
    opt.threads_list = {1, 2, 4};
    opt.repetitions = 1;
    const BenchReport report = run_benchmark(g, opt);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].threads == 1);
    CHECK(report.rows[1].threads == 2);
    CHECK(report.rows[2].threads == 4);

    const std::string csv = bench_csv(report);
    CHECK(csv.starts_with("task,mode,threads,median_ms,min_ms,reps\n"));
    CHECK(csv.find("node,parallel,2,") != std::string::npos);

    const std::string table = bench_table(report);
    CHECK(table.find("median_ms") != std::string::npos);
}
