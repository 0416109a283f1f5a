#pragma once

// File ingestion and result serialization: edge-list graphs in, CSV / JSON
// tables and plot-ready sweep data out. CSV is RFC-4180-style with a header
// row and LF line endings; numeric CSV fields use fixed 6-decimal
// formatting, full precision lives in the JSON forms.

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "socloud/externalities.hpp"
#include "socloud/graph.hpp"
#include "socloud/metrics.hpp"
#include "socloud/sweep.hpp"

namespace socloud {

inline std::string format_fixed(double value, int decimals = 6) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

// --- edge-list format ------------------------------------------------------
//
// One edge per line: two whitespace-separated base-10 node ids. Blank lines
// and lines starting with '#' are ignored. The node count is 1 + the largest
// id seen, unless a header line "n <count>" overrides it.

inline Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int declared_count = -1;
    int max_id = -1;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string head;
        fields >> head;
        const std::string where = "line " + std::to_string(line_number) + ": ";
        if (head == "n") {
            long long count = 0;
            if (!(fields >> count) || count < 1) {
                throw std::runtime_error(where + "bad node-count header '" + line + "'");
            }
            std::string extra;
            if (fields >> extra) {
                throw std::runtime_error(where + "trailing tokens after node-count header");
            }
            declared_count = static_cast<int>(count);
            continue;
        }

        long long u = 0;
        long long v = 0;
        std::istringstream pair_fields(line);
        if (!(pair_fields >> u >> v)) {
            throw std::runtime_error(where + "expected two node ids, got '" + line + "'");
        }
        std::string extra;
        if (pair_fields >> extra) {
            throw std::runtime_error(where + "trailing tokens after edge '" + line + "'");
        }
        if (u < 0 || v < 0) {
            throw std::runtime_error(where + "node ids must be nonnegative");
        }
        if (u == v) {
            throw std::runtime_error(where + "self-loop (" + std::to_string(u) + "," +
                                     std::to_string(v) + ") not allowed");
        }
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    const int node_count = declared_count >= 0 ? declared_count : max_id + 1;
    if (node_count < 1) {
        throw std::runtime_error("edge list is empty and carries no node-count header");
    }
    return Graph(node_count, std::move(edges));
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.node_count() << "\n";
    for (const auto& [u, v] : g.edges()) {
        out << u << " " << v << "\n";
    }
}

// --- metrics ---------------------------------------------------------------

inline void write_metrics_csv(const MetricsBundle& bundle, std::ostream& out) {
    out << "agent,phi,gamma\n";
    for (int i = 0; i < bundle.node_count(); ++i) {
        out << i << "," << format_fixed(bundle.phi[static_cast<std::size_t>(i)]) << ","
            << format_fixed(bundle.gamma[static_cast<std::size_t>(i)]) << "\n";
    }
}

inline void write_alpha_csv(const AlphaMatrix& alpha, std::ostream& out) {
    const int n = alpha.size();
    out << "agent";
    for (int j = 0; j < n; ++j) out << ",j" << j;
    out << "\n";
    for (int i = 0; i < n; ++i) {
        out << i;
        for (int j = 0; j < n; ++j) out << "," << format_fixed(alpha.at(i, j));
        out << "\n";
    }
}

inline nlohmann::json metrics_to_json(const MetricsBundle& bundle) {
    const int n = bundle.node_count();
    nlohmann::json alpha_rows = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < n; ++j) row.push_back(bundle.alpha.at(i, j));
        alpha_rows.push_back(std::move(row));
    }
    return nlohmann::json{{"node_count", n},
                          {"phi", bundle.phi},
                          {"gamma", bundle.gamma},
                          {"alpha", std::move(alpha_rows)}};
}

// --- externality reports ----------------------------------------------------

/// One row per agent, endpoints included and labeled ENDPOINT; columns
/// follow the before/after table layout.
inline void write_externality_csv(const ExternalityReport& report, std::ostream& out) {
    out << "agent,phi_before,gamma_before,phi_after,gamma_after,delta_gamma,delta_phi,label\n";
    const auto row = [&](NodeId i, std::string_view label) {
        const auto idx = static_cast<std::size_t>(i);
        out << i << "," << format_fixed(report.phi_before[idx]) << ","
            << format_fixed(report.gamma_before[idx]) << "," << format_fixed(report.phi_after[idx])
            << "," << format_fixed(report.gamma_after[idx]) << ","
            << format_fixed(report.gamma_after[idx] - report.gamma_before[idx]) << ","
            << format_fixed(report.phi_after[idx] - report.phi_before[idx]) << "," << label << "\n";
    };
    auto third_party = report.per_agent.begin();
    for (NodeId i = 0; i < report.node_count(); ++i) {
        if (i == report.j || i == report.k) {
            row(i, "ENDPOINT");
        } else {
            row(i, to_string(third_party->label));
            ++third_party;
        }
    }
}

inline nlohmann::json externality_to_json(const ExternalityReport& report) {
    nlohmann::json third_parties = nlohmann::json::array();
    for (const AgentDelta& entry : report.per_agent) {
        third_parties.push_back(nlohmann::json{{"agent", entry.agent},
                                               {"delta_gamma", entry.delta_gamma},
                                               {"delta_phi", entry.delta_phi},
                                               {"label", to_string(entry.label)}});
    }
    const auto endpoint = [](const EndpointDelta& e) {
        return nlohmann::json{
            {"agent", e.agent}, {"delta_gamma", e.delta_gamma}, {"delta_phi", e.delta_phi}};
    };
    return nlohmann::json{{"link", {report.j, report.k}},
                          {"base_distance", report.base_distance},
                          {"zero_tolerance", kZeroTolerance},
                          {"per_agent", std::move(third_parties)},
                          {"endpoints", {endpoint(report.endpoint_j), endpoint(report.endpoint_k)}},
                          {"phi_before", report.phi_before},
                          {"phi_after", report.phi_after},
                          {"gamma_before", report.gamma_before},
                          {"gamma_after", report.gamma_after}};
}

// --- sweep -------------------------------------------------------------------

inline void write_sweep_csv(const SweepSummary& summary, std::ostream& out) {
    out << "n,j,k,d,nob,non_beneficiaries,beneficiary_pct\n";
    for (const SweepRecord& record : summary.records) {
        out << record.n << "," << record.j << "," << record.k << "," << record.d << ","
            << record.nob << "," << record.non_beneficiaries << ","
            << format_fixed(record.beneficiary_pct) << "\n";
    }
}

inline nlohmann::json sweep_summary_to_json(const SweepSummary& summary,
                                            const FindingsVerdict& verdict) {
    nlohmann::json aggregates = nlohmann::json::array();
    for (const DistanceAggregate& cell : summary.aggregates) {
        aggregates.push_back(nlohmann::json{{"n", cell.n},
                                            {"d", cell.d},
                                            {"records", cell.record_count},
                                            {"min_nob", cell.min_nob},
                                            {"max_nob", cell.max_nob},
                                            {"mean_nob", cell.mean_nob}});
    }
    nlohmann::json monotonicity = nlohmann::json::array();
    for (const MonotonicityRow& row : summary.monotonicity) {
        monotonicity.push_back(nlohmann::json{{"n", row.n},
                                              {"steps", row.steps},
                                              {"non_decreasing", row.non_decreasing},
                                              {"fraction", row.fraction()}});
    }
    return nlohmann::json{
        {"n_min", summary.n_min},
        {"n_max", summary.n_max},
        {"record_count", summary.records.size()},
        {"aggregates", std::move(aggregates)},
        {"monotonicity", std::move(monotonicity)},
        {"findings",
         {{"no_positive_externalities_up_to_10", verdict.small_rings_clean},
          {"no_positive_externalities_up_to_10_vacuous", verdict.small_rings_vacuous},
          {"small_distance_nob_non_decreasing", verdict.near_distance_step},
          {"small_distance_nob_non_decreasing_vacuous", verdict.near_distance_vacuous},
          {"monotone_steps", verdict.monotone_steps},
          {"monotone_non_decreasing", verdict.monotone_non_decreasing},
          {"monotone_fraction", verdict.monotone_fraction()},
          {"beneficiaries_always_minority", verdict.strict_minority},
          {"max_beneficiary_pct", verdict.max_beneficiary_pct}}}};
}

/// Long-form plot data: one row per (n,d) aggregate, columns d, nob, n.
inline void write_plot_data(const SweepSummary& summary, std::ostream& out) {
    out << "d,nob,n\n";
    std::vector<DistanceAggregate> cells = summary.aggregates;
    std::sort(cells.begin(), cells.end(), [](const DistanceAggregate& a, const DistanceAggregate& b) {
        return std::tie(a.n, a.d) < std::tie(b.n, b.d);
    });
    for (const DistanceAggregate& cell : cells) {
        out << cell.d << "," << format_fixed(cell.mean_nob) << "," << cell.n << "\n";
    }
}

/// gnuplot script rendering the beneficiary-count surface in three
/// network-size bands.
inline void write_plot_script(std::ostream& out, const std::string& data_file) {
    out << "# gnuplot script: number of beneficiaries vs link distance and network size\n"
        << "set datafile separator comma\n"
        << "set terminal pngcairo size 1800,500\n"
        << "set output 'nob_surface.png'\n"
        << "set multiplot layout 1,3\n"
        << "set xlabel 'link distance d'\n"
        << "set ylabel 'network size n'\n"
        << "set zlabel 'NOB' rotate\n"
        << "set grid\n"
        << "set view 60,120\n";
    const int bands[3][2] = {{4, 10}, {11, 20}, {21, 30}};
    for (const auto& band : bands) {
        out << "set title 'network size " << band[0] << "-" << band[1] << "'\n"
            << "splot '" << data_file << "' skip 1 using 1:($3>=" << band[0] << " && $3<=" << band[1]
            << " ? $3 : 1/0):2 with impulses lw 2 notitle\n";
    }
    out << "unset multiplot\n";
}

// --- conjecture scan -----------------------------------------------------------

inline void write_violations_csv(const std::vector<ConjectureViolation>& violations,
                                 std::ostream& out) {
    out << "graph_id,j,k,agent,delta_gamma,delta_phi\n";
    for (const ConjectureViolation& v : violations) {
        out << v.graph_id << "," << v.j << "," << v.k << "," << v.agent << ","
            << format_fixed(v.delta_gamma, 12) << "," << format_fixed(v.delta_phi, 12) << "\n";
    }
}

}  // namespace socloud
