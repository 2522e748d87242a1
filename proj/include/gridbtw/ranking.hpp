#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gridbtw/brandes.hpp"
#include "gridbtw/ingest.hpp"

namespace gridbtw {

enum class RankKind { Node, Edge };

/// Contingency-selection shortlist: scores ordered for human review, with
/// external bus ids and the provenance of how the scores were produced.
struct RankingReport {
    RankKind kind = RankKind::Node;
    Convention convention = Convention::PairOnce;
    bool normalized = false;
    std::int64_t node_count = 0;
    std::int64_t edge_count = 0;

    struct Row {
        int rank = 0;       // 1-based, contiguous
        std::string id;     // node id, or the "from" bus of an edge
        std::string id_to;  // empty for node reports
        double score = 0.0;
        friend bool operator==(const Row&, const Row&) = default;
    };
    std::vector<Row> rows;

    friend bool operator==(const RankingReport&, const RankingReport&) = default;
};

/// Divides node scores by (N-1)(N-2)/2. Edge scores are left untouched:
/// there is no edge normalization constant.
ScoreTable normalize_scores(const ScoreTable& scores, NodeId n);

/// Rows sorted by score descending, ties by ascending external id; top-k
/// when k is given. Edge reports are produced when the table carries edge
/// scores, node reports otherwise.
RankingReport rank(const ScoreTable& scores, const GridModel& model,
                   std::optional<int> top_k = std::nullopt);

enum class ReportFormat { Csv, Json };

/// CSV prints scores with 4 decimals (display form); JSON keeps full
/// precision and round-trips through read_report_json losslessly.
std::string write_report(const RankingReport& report, ReportFormat format);

RankingReport read_report_json(std::istream& in);

}  // namespace gridbtw
