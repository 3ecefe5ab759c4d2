#include "zdg/formats.hpp"

#include <json.hpp>

namespace zdg::io {

std::string format_vertex_set(std::span<const std::uint64_t> vertices) {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(vertices[i]);
    }
    out += '}';
    return out;
}

std::string format_edge_set(std::span<const Edge> edges) {
    std::string out = "{";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i != 0) out += ',';
        out += '(';
        out += std::to_string(edges[i].lo);
        out += ',';
        out += std::to_string(edges[i].hi);
        out += ')';
    }
    out += '}';
    return out;
}

std::string format_factorization(const Factorization& factors) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i != 0) out += " * ";
        out += std::to_string(factors[i].prime);
        if (factors[i].exponent > 1) {
            out += '^';
            out += std::to_string(factors[i].exponent);
        }
    }
    return out;
}

std::string to_dot(const ZdGraph& g) {
    const auto edge_list = g.edges();
    std::string out = "graph zdg_" + std::to_string(g.n()) + " {\n";
    for (std::uint64_t v : g.vertices()) {
        if (g.degree(v) == 0) {
            out += "  ";
            out += std::to_string(v);
            out += ";\n";
        }
    }
    for (const Edge& e : edge_list) {
        out += "  ";
        out += std::to_string(e.lo);
        out += " -- ";
        out += std::to_string(e.hi);
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string to_json(const ZdGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n();
    j["vertices"] = g.vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.lo, e.hi});
    j["edges"] = std::move(edges);
    return j.dump();
}

std::string to_csv(const ZdGraph& g) {
    std::string out = "lo,hi\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.lo);
        out += ',';
        out += std::to_string(e.hi);
        out += '\n';
    }
    return out;
}

std::string report_json(std::uint64_t n_min, std::uint64_t n_max,
                        std::span<const verify::Report> reports) {
    nlohmann::ordered_json j;
    j["range"] = {n_min, n_max};
    auto checks = nlohmann::ordered_json::array();
    for (const verify::Report& report : reports) {
        nlohmann::ordered_json item;
        item["check"] = std::string(verify::to_string(report.check));
        item["agree"] = report.agree;
        item["disagree"] = report.disagree;
        item["skipped"] = report.skipped;
        auto discrepancies = nlohmann::ordered_json::array();
        for (const verify::Discrepancy& d : report.discrepancies) {
            nlohmann::ordered_json row;
            row["n"] = d.n;
            row["theorem"] = d.theorem_answer;
            row["oracle"] = d.oracle_answer;
            discrepancies.push_back(std::move(row));
        }
        item["discrepancies"] = std::move(discrepancies);
        checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    return j.dump();
}

} // namespace zdg::io
