#include "gridbtw/ranking.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>

#include <json.hpp>

#include "gridbtw/errors.hpp"

namespace gridbtw {

ScoreTable normalize_scores(const ScoreTable& scores, NodeId n) {
    if (scores.normalized) throw AlreadyNormalized();
    if (n < 3) throw NormalizeTooSmall(n);

    ScoreTable out = scores;
    const double factor = (static_cast<double>(n) - 1.0) * (static_cast<double>(n) - 2.0) / 2.0;
    for (double& x : out.node_scores) x /= factor;
    out.normalized = true;
    return out;
}

RankingReport rank(const ScoreTable& scores, const GridModel& model, std::optional<int> top_k) {
    if (top_k && *top_k < 1) throw InvalidArgument("top-k must be >= 1");
    if (scores.node_scores.size() > static_cast<std::size_t>(model.graph.node_count()) ||
        scores.edge_scores.size() > static_cast<std::size_t>(model.graph.edge_count())) {
        throw ShapeMismatch("score table does not fit the grid model");
    }

    RankingReport report;
    report.kind = scores.edge_scores.empty() ? RankKind::Node : RankKind::Edge;
    report.convention = scores.convention;
    report.normalized = scores.normalized;
    report.node_count = model.graph.node_count();
    report.edge_count = model.graph.edge_count();

    if (report.kind == RankKind::Node) {
        report.rows.reserve(scores.node_scores.size());
        for (NodeId v = 0; v < static_cast<NodeId>(scores.node_scores.size()); ++v) {
            report.rows.push_back({0, model.id_of(v), "", scores.node_scores[v]});
        }
    } else {
        report.rows.reserve(scores.edge_scores.size());
        for (EdgeId e = 0; e < static_cast<EdgeId>(scores.edge_scores.size()); ++e) {
            const EdgeKey& k = model.graph.edge(e);
            report.rows.push_back({0, model.id_of(k.u), model.id_of(k.v), scores.edge_scores[e]});
        }
    }

    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const RankingReport::Row& a, const RankingReport::Row& b) {
                         if (a.score != b.score) return a.score > b.score;
                         if (a.id != b.id) return id_less(a.id, b.id);
                         return id_less(a.id_to, b.id_to);
                     });
    if (top_k && static_cast<std::size_t>(*top_k) < report.rows.size()) {
        report.rows.resize(static_cast<std::size_t>(*top_k));
    }
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        report.rows[i].rank = static_cast<int>(i) + 1;
    }
    return report;
}

namespace {

std::string kind_name(RankKind k) {
    return k == RankKind::Node ? "node" : "edge";
}

std::string fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

}  // namespace

std::string write_report(const RankingReport& report, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out =
            report.kind == RankKind::Node ? "rank,id,betweenness\n" : "rank,from,to,betweenness\n";
        for (const auto& row : report.rows) {
            out += std::to_string(row.rank);
            out += ',';
            out += row.id;
            if (report.kind == RankKind::Edge) {
                out += ',';
                out += row.id_to;
            }
            out += ',';
            out += fixed4(row.score);
            out += '\n';
        }
        return out;
    }

    nlohmann::json j;
    j["kind"] = kind_name(report.kind);
    j["convention"] = to_string(report.convention);
    j["normalized"] = report.normalized;
    j["graph"] = {{"nodes", report.node_count}, {"edges", report.edge_count}};
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r;
        r["rank"] = row.rank;
        if (report.kind == RankKind::Node) {
            r["id"] = row.id;
        } else {
            r["from"] = row.id;
            r["to"] = row.id_to;
        }
        r["betweenness"] = row.score;
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

RankingReport read_report_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }

    RankingReport report;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "node" && kind != "edge") throw ParseError("unknown report kind '" + kind + "'");
    report.kind = kind == "node" ? RankKind::Node : RankKind::Edge;
    report.convention = convention_from_string(j.at("convention").get<std::string>());
    report.normalized = j.at("normalized").get<bool>();
    report.node_count = j.at("graph").at("nodes").get<std::int64_t>();
    report.edge_count = j.at("graph").at("edges").get<std::int64_t>();
    for (const auto& r : j.at("rows")) {
        RankingReport::Row row;
        row.rank = r.at("rank").get<int>();
        if (report.kind == RankKind::Node) {
            row.id = r.at("id").get<std::string>();
        } else {
            row.id = r.at("from").get<std::string>();
            row.id_to = r.at("to").get<std::string>();
        }
        row.score = r.at("betweenness").get<double>();
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace gridbtw
