#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GRIDBTW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

std::string data_path(const std::string& name) {
    return std::string(GRIDBTW_DATA_DIR) + "/" + name;
}

// rank,id,betweenness -> id -> score
std::map<std::string, double> parse_node_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::map<std::string, double> scores;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        scores[line.substr(c1 + 1, c2 - c1 - 1)] = std::stod(line.substr(c2 + 1));
    }
    return scores;
}

std::map<std::string, double> parse_edge_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::map<std::string, double> scores;
    std::getline(in, line);
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        scores[line.substr(c1 + 1, c3 - c1 - 1)] = std::stod(line.substr(c3 + 1));
    }
    return scores;
}

}  // namespace

TEST_CASE("node-btw reproduces the 118-bus table") {
    const CliResult r = run_cli("node-btw --input " + data_path("ieee118.edges") + " --threads 8");
    REQUIRE(r.exit_code == 0);
    const auto scores = parse_node_csv(r.out);
    REQUIRE(scores.size() == 118);
    CHECK(std::abs(scores.at("1") - 1.8333) < 1e-2);
    CHECK(std::abs(scores.at("2") - 17.9860) < 1e-2);
    CHECK(std::abs(scores.at("3") - 105.6805) < 1e-2);
}

TEST_CASE("edge-btw serial mode reproduces the 118-bus table") {
    const CliResult r =
        run_cli("edge-btw --input " + data_path("ieee118.edges") + " --mode serial");
    REQUIRE(r.exit_code == 0);
    const auto scores = parse_edge_csv(r.out);
    REQUIRE(scores.size() == 179);
    CHECK(std::abs(scores.at("2,12") - 132.1525) < 1e-2);
    CHECK(std::abs(scores.at("1,2") - 20.8194) < 1e-2);
    CHECK(std::abs(scores.at("1,3") - 99.8475) < 1e-2);
}

TEST_CASE("empty input exits with code 1") {
    const std::string path = "/tmp/gridbtw_empty_test.edges";
    std::ofstream(path) << "# nothing but a comment\n";
    const CliResult r = run_cli("node-btw --input " + path);
    CHECK(r.exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("malformed input exits with code 1") {
    const std::string path = "/tmp/gridbtw_bad_test.edges";
    std::ofstream(path) << "1 2 3\n";
    const CliResult r = run_cli("node-btw --input " + path);
    CHECK(r.exit_code == 1);
    std::remove(path.c_str());

    CHECK(run_cli("node-btw --input /no/such/file.edges").exit_code == 1);
}

TEST_CASE("deterministic runs are byte-identical") {
    const std::string args = "node-btw --input " + data_path("ieee118.edges") +
                             " --deterministic --threads 4 --output-format json";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("serial equals deterministic single-thread parallel") {
    const std::string common =
        " --input " + data_path("ieee118.edges") + " --output-format json";
    const CliResult serial = run_cli("edge-btw --mode serial" + common);
    const CliResult parallel =
        run_cli("edge-btw --mode parallel --threads 1 --deterministic" + common);
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("rank emits a top-k shortlist") {
    const CliResult r =
        run_cli("rank --input " + data_path("ieee118.edges") + " --kind edge --top-k 3");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "rank,from,to,betweenness");
    CHECK(lines[1].starts_with("1,38,65,"));  // highest-ranked branch
}

TEST_CASE("reading from stdin works") {
    const std::string cmd = "printf '1 2\\n2 3\\n' | " + std::string(GRIDBTW_CLI_PATH) +
                            " node-btw --input - --convention directed-sum 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[1024];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(parse_node_csv(out).at("2") == 2.0);
}

TEST_CASE("bench emits the CSV grid") {
    const CliResult r = run_cli("bench --input " + data_path("ieee118.edges") +
                                " --tasks node --modes serial,parallel --threads-list 2 --reps 1");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "task,mode,threads,median_ms,min_ms,reps");
    CHECK(lines[1].starts_with("node,serial,1,"));
    CHECK(lines[2].starts_with("node,parallel,2,"));
}

TEST_CASE("computation failures exit with code 2") {
    // Chained diamonds overflow the 64-bit path counts during BFS.
    const std::string path = "/tmp/gridbtw_overflow_test.edges";
    {
        std::ofstream out(path);
        int next = 1;
        int tail = 0;
        for (int stage = 0; stage < 65; ++stage) {
            const int a = next++;
            const int b = next++;
            const int fan_in = next++;
            out << tail << ' ' << a << '\n' << tail << ' ' << b << '\n';
            out << a << ' ' << fan_in << '\n' << b << ' ' << fan_in << '\n';
            tail = fan_in;
        }
    }
    const CliResult r = run_cli("node-btw --input " + path);
    CHECK(r.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("node-btw --help").exit_code == 0);
}
