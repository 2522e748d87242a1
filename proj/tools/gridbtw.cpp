#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridbtw/bench.hpp"
#include "gridbtw/brandes.hpp"
#include "gridbtw/errors.hpp"
#include "gridbtw/ingest.hpp"
#include "gridbtw/parallel.hpp"
#include "gridbtw/ranking.hpp"
#include "gridbtw/superstep.hpp"

namespace {

using namespace gridbtw;

struct CommonOptions {
    std::string input;
    std::string format = "auto";  // edgelist | grid-json | auto (by extension)
    std::string output;           // empty = stdout
    std::string output_format = "csv";
    std::string mode = "parallel";
    std::string kernel = "stack";
    std::string convention = "pair-once";
    int threads = 8;
    int chunk_size = 16;
    bool deterministic = false;
    bool normalize = false;
    bool largest_component = false;
    bool verbose = false;
    std::optional<int> top_k;
};

void add_input_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("-i,--input", opt.input, "input file, or '-' for stdin")->required();
    cmd.add_option("--format", opt.format, "edgelist | grid-json (default: by extension)")
        ->check(CLI::IsMember({"auto", "edgelist", "grid-json"}));
    cmd.add_flag("--largest-component", opt.largest_component,
                 "keep only the largest connected component");
    cmd.add_flag("-v,--verbose", opt.verbose, "preprocessing and progress notes on stderr");
}

void add_compute_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("-t,--threads", opt.threads, "worker threads for --mode parallel")
        ->envname("GRIDBTW_THREADS")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--mode", opt.mode, "serial | parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));
    cmd.add_option("--kernel", opt.kernel, "stack | superstep")
        ->check(CLI::IsMember({"stack", "superstep"}));
    cmd.add_option("--convention", opt.convention,
                   "pair-once counts each unordered pair once (matches the published 118-bus "
                   "reference values); directed-sum is the literal every-source sum, exactly 2x")
        ->check(CLI::IsMember({"pair-once", "directed-sum"}));
    cmd.add_flag("--deterministic", opt.deterministic,
                 "bit-identical output for any thread count (slower)");
    cmd.add_option("--chunk-size", opt.chunk_size, "sources per work unit")
        ->check(CLI::PositiveNumber);
}

void add_report_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("-o,--output", opt.output, "output file (default: stdout)");
    cmd.add_option("--output-format", opt.output_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("-k,--top-k", opt.top_k, "emit only the k highest-ranked rows")
        ->check(CLI::PositiveNumber);
}

GridModel load_model(const CommonOptions& opt) {
    std::string format = opt.format;
    if (format == "auto") {
        format = opt.input.size() >= 5 && opt.input.ends_with(".json") ? "grid-json" : "edgelist";
    }

    EdgeRecords records;
    auto read = [&](std::istream& in) {
        records = format == "grid-json" ? read_grid_json(in) : read_edgelist(in);
    };
    if (opt.input == "-") {
        read(std::cin);
    } else {
        std::ifstream in(opt.input);
        if (!in) throw ParseError("cannot open input file '" + opt.input + "'");
        read(in);
    }

    PreprocessOptions pre;
    pre.largest_component_only = opt.largest_component;
    GridModel model = preprocess(records, pre);
    if (opt.verbose) {
        std::cerr << "ingest: " << model.graph.node_count() << " buses, "
                  << model.graph.edge_count() << " branches after cleaning ("
                  << model.dropped_self_loops << " self-loops dropped, "
                  << model.collapsed_parallel_branches.size()
                  << " parallel branch groups collapsed, " << model.component_count
                  << " component(s)" << (model.lcc_applied ? ", largest kept" : "") << ")\n";
        for (const auto& c : model.collapsed_parallel_branches) {
            std::cerr << "  collapsed " << c.from << "-" << c.to << " x" << c.multiplicity << "\n";
        }
    }
    return model;
}

ScoreTable compute_scores(const GridModel& model, const CommonOptions& opt, bool want_edges) {
    const Convention conv = convention_from_string(opt.convention);
    const Kernel kernel = kernel_from_string(opt.kernel);
    const Graph& g = model.graph;

    if (opt.mode == "serial") {
        if (kernel == Kernel::Stack) {
            return want_edges ? edge_betweenness_serial(g, conv)
                              : node_betweenness_serial(g, conv, opt.normalize);
        }
        // Serial superstep: plain source loop over the level-synchronous
        // kernel; with --verbose each source's supersteps are traced.
        if (opt.normalize && g.node_count() < 3) throw NormalizeTooSmall(g.node_count());
        ScoreTable t;
        t.convention = conv;
        t.node_scores.assign(static_cast<std::size_t>(g.node_count()), 0.0);
        if (want_edges) t.edge_scores.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
        for (NodeId s = 0; s < g.node_count(); ++s) {
            if (opt.verbose) std::cerr << "source " << model.id_of(s) << ":\n";
            LevelState state = forward_sweep(g, s, opt.verbose ? &std::cerr : nullptr);
            SourceContribution c = backward_sweep(g, state, want_edges);
            for (NodeId v = 0; v < g.node_count(); ++v) t.node_scores[v] += c.node_add[v];
            for (std::size_t e = 0; e < c.edge_add.size(); ++e) t.edge_scores[e] += c.edge_add[e];
        }
        detail::scale_scores(t, conv, opt.normalize, g.node_count());
        return t;
    }

    ParallelConfig cfg;
    cfg.threads = opt.threads;
    cfg.deterministic = opt.deterministic;
    cfg.kernel = kernel;
    cfg.chunk_size = opt.chunk_size;
    return want_edges ? edge_betweenness_parallel(g, cfg, conv)
                      : node_betweenness_parallel(g, cfg, conv, opt.normalize);
}

void emit(const std::string& text, const CommonOptions& opt) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw ParseError("cannot open output file '" + opt.output + "'");
    out << text;
}

int run_betweenness(const CommonOptions& opt, bool want_edges) {
    const GridModel model = load_model(opt);
    const ScoreTable scores = compute_scores(model, opt, want_edges);
    const RankingReport report = rank(scores, model, opt.top_k);
    emit(write_report(report, opt.output_format == "json" ? ReportFormat::Json
                                                          : ReportFormat::Csv),
         opt);
    return 0;
}

int run_bench(const CommonOptions& opt, const std::string& tasks_csv,
              const std::string& modes_csv, const std::string& threads_csv, int reps) {
    const GridModel model = load_model(opt);

    BenchOptions bench;
    bench.convention = convention_from_string(opt.convention);
    bench.kernel = kernel_from_string(opt.kernel);
    bench.repetitions = reps;
    bench.tasks.clear();
    bench.modes.clear();
    bench.threads_list.clear();

    std::stringstream ts(tasks_csv);
    for (std::string item; std::getline(ts, item, ',');) {
        if (item == "node") {
            bench.tasks.push_back(BenchTask::Node);
        } else if (item == "edge") {
            bench.tasks.push_back(BenchTask::Edge);
        } else {
            throw InvalidArgument("unknown task '" + item + "'");
        }
    }
    std::stringstream ms(modes_csv);
    for (std::string item; std::getline(ms, item, ',');) {
        if (item == "serial") {
            bench.modes.push_back(BenchMode::Serial);
        } else if (item == "parallel") {
            bench.modes.push_back(BenchMode::Parallel);
        } else {
            throw InvalidArgument("unknown mode '" + item + "'");
        }
    }
    std::stringstream hs(threads_csv);
    for (std::string item; std::getline(hs, item, ',');) {
        const int t = std::stoi(item);
        if (t < 1) throw InvalidArgument("thread counts must be >= 1");
        bench.threads_list.push_back(t);
    }

    const BenchReport report = run_benchmark(model.graph, bench);
    emit(bench_csv(report), opt);
    std::cerr << bench_table(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gridbtw: node and edge betweenness for power-network graphs\n"
        "Shortest paths are unweighted (hop count); scores default to the pair-once\n"
        "convention, which reproduces the published 118-bus reference values."};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string rank_kind = "node";
    std::string bench_tasks = "node,edge";
    std::string bench_modes = "serial,parallel";
    std::string bench_threads = "1,2,4,8";
    int bench_reps = 3;

    CLI::App* node_cmd = app.add_subcommand("node-btw", "node betweenness table");
    add_input_options(*node_cmd, opt);
    add_compute_options(*node_cmd, opt);
    add_report_options(*node_cmd, opt);
    node_cmd->add_flag("--normalize", opt.normalize, "divide node scores by (N-1)(N-2)/2");

    CLI::App* edge_cmd = app.add_subcommand("edge-btw", "edge betweenness table");
    add_input_options(*edge_cmd, opt);
    add_compute_options(*edge_cmd, opt);
    add_report_options(*edge_cmd, opt);

    CLI::App* rank_cmd = app.add_subcommand(
        "rank", "top-k contingency shortlist (node or edge betweenness ranking)");
    add_input_options(*rank_cmd, opt);
    add_compute_options(*rank_cmd, opt);
    add_report_options(*rank_cmd, opt);
    rank_cmd->add_option("--kind", rank_kind, "node | edge")
        ->check(CLI::IsMember({"node", "edge"}));
    rank_cmd->add_flag("--normalize", opt.normalize,
                       "divide node scores by (N-1)(N-2)/2 (node rankings only)");

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "serial/parallel timing grid, CSV to stdout");
    add_input_options(*bench_cmd, opt);
    bench_cmd->add_option("--convention", opt.convention, "pair-once | directed-sum")
        ->check(CLI::IsMember({"pair-once", "directed-sum"}));
    bench_cmd->add_option("--kernel", opt.kernel, "stack | superstep")
        ->check(CLI::IsMember({"stack", "superstep"}));
    bench_cmd->add_option("--tasks", bench_tasks, "comma list of node,edge");
    bench_cmd->add_option("--modes", bench_modes, "comma list of serial,parallel");
    bench_cmd->add_option("--threads-list", bench_threads, "comma list of thread counts");
    bench_cmd->add_option("--reps", bench_reps, "timed repetitions per cell")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("-o,--output", opt.output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);

        if (node_cmd->parsed()) return run_betweenness(opt, /*want_edges=*/false);
        if (edge_cmd->parsed()) return run_betweenness(opt, /*want_edges=*/true);
        if (rank_cmd->parsed()) {
            if (rank_kind == "edge" && opt.normalize) {
                throw InvalidArgument("--normalize applies to node rankings only");
            }
            if (!opt.top_k) opt.top_k = 10;
            return run_betweenness(opt, rank_kind == "edge");
        }
        if (bench_cmd->parsed()) {
            return run_bench(opt, bench_tasks, bench_modes, bench_threads, bench_reps);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownBus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const EmptyGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NormalizeTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
