#include <doctest.h>

#include <random>
#include <sstream>

#include "gridbtw/brandes.hpp"
#include "gridbtw/ranking.hpp"
#include "test_support.hpp"

using namespace gridbtw;

namespace {

GridModel model_of(const std::string& edgelist_text) {
    std::istringstream in(edgelist_text);
    return preprocess(read_edgelist(in));
}

}  // namespace

TEST_CASE("normalize_scores divides node scores only") {
    ScoreTable scores;
    scores.node_scores = {0.0, 2.0, 0.0};
    scores.edge_scores = {4.0, 4.0};
    const ScoreTable out = normalize_scores(scores, 3);
    CHECK(out.normalized);
    CHECK(out.node_scores == std::vector<double>{0.0, 2.0, 0.0});  // factor is 1 at n=3
    CHECK(out.edge_scores == scores.edge_scores);

    ScoreTable star;
    star.node_scores = {6.0, 0.0, 0.0, 0.0};
    CHECK(normalize_scores(star, 4).node_scores[0] == doctest::Approx(2.0));

    CHECK_THROWS_AS(normalize_scores(scores, 2), NormalizeTooSmall);
    CHECK_THROWS_AS(normalize_scores(out, 3), AlreadyNormalized);
}

TEST_CASE("rank orders by score, ties by external id") {
    const GridModel model = model_of("1 2\n2 3\n");  // P3 with buses 1,2,3
    const ScoreTable scores = node_betweenness_serial(model.graph, Convention::DirectedSum, false);

    const RankingReport top1 = rank(scores, model, 1);
    REQUIRE(top1.rows.size() == 1);
    CHECK(top1.rows[0].rank == 1);
    CHECK(top1.rows[0].id == "2");
    CHECK(top1.rows[0].score == doctest::Approx(2.0));

    ScoreTable zeros;
    zeros.node_scores = {0.0, 0.0, 0.0};
    const RankingReport tied = rank(zeros, model, 2);
    REQUIRE(tied.rows.size() == 2);
    CHECK(tied.rows[0].id == "1");
    CHECK(tied.rows[1].id == "2");

    const RankingReport all = rank(zeros, model, 99);
    CHECK(all.rows.size() == 3);  // k larger than the row count: no padding
    CHECK(all.rows[2].rank == 3);

    CHECK_THROWS_AS(rank(zeros, model, 0), InvalidArgument);
}

TEST_CASE("positive scaling keeps the ordering") {
    std::mt19937 rng(79);
    const GridModel model = testsupport::load_ieee118();
    const ScoreTable scores = node_betweenness_serial(model.graph, Convention::PairOnce, false);
    const RankingReport base = rank(scores, model);

    ScoreTable scaled = scores;
    const double c = 0.125;  // exact in binary, so ties stay ties
    for (double& x : scaled.node_scores) x *= c;
    const RankingReport after = rank(scaled, model);
    REQUIRE(after.rows.size() == base.rows.size());
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
        CHECK(after.rows[i].id == base.rows[i].id);
        CHECK(after.rows[i].rank == base.rows[i].rank);
    }
}

TEST_CASE("csv formats scores to 4 decimals") {
    const GridModel model = model_of("1 2\n2 3\n");

    ScoreTable nodes;
    nodes.node_scores = {1.8333333333, 0.0, 0.0};
    const std::string csv = write_report(rank(nodes, model, 1), ReportFormat::Csv);
    CHECK(csv == "rank,id,betweenness\n1,1,1.8333\n");

    ScoreTable edges;
    edges.edge_scores = {132.1526695527, 0.0};
    const RankingReport edge_report = rank(edges, model, 1);
    const std::string edge_csv = write_report(edge_report, ReportFormat::Csv);
    CHECK(edge_csv == "rank,from,to,betweenness\n1,1,2,132.1527\n");
}

TEST_CASE("empty report is a bare header") {
    GridModel model;
    ScoreTable empty;
    const std::string csv = write_report(rank(empty, model), ReportFormat::Csv);
    CHECK(csv == "rank,id,betweenness\n");
}

TEST_CASE("json report round-trips exactly") {
    const GridModel model = testsupport::load_ieee118();
    const ScoreTable scores = edge_betweenness_serial(model.graph, Convention::PairOnce);
    const RankingReport report = rank(scores, model, 25);

    const std::string json = write_report(report, ReportFormat::Json);
    std::istringstream in(json);
    const RankingReport parsed = read_report_json(in);
    CHECK(parsed == report);  // bit-exact scores included
}
