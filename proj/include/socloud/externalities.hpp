#pragma once

// Per-agent impact of a candidate link: availability and closeness deltas
// for every third party, classified as positive / negative / no
// externality by the sign of the availability change.

#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socloud/graph.hpp"
#include "socloud/metrics.hpp"

namespace socloud {

/// Width of the "no externality" band around zero. Exact equality is the
/// intended semantics; finite precision needs a band, and the genuine
/// nonzero deltas at the scales handled here sit orders of magnitude
/// above it (validated against an exact rational recomputation in the
/// test suite).
inline constexpr double kZeroTolerance = 1e-12;

enum class Externality { kPositive, kNegative, kNone };

inline Externality classify(double delta_gamma, double tolerance = kZeroTolerance) {
    if (delta_gamma > tolerance) return Externality::kPositive;
    if (delta_gamma < -tolerance) return Externality::kNegative;
    return Externality::kNone;
}

inline std::string_view to_string(Externality label) {
    switch (label) {
        case Externality::kPositive: return "POSITIVE";
        case Externality::kNegative: return "NEGATIVE";
        case Externality::kNone: return "NONE";
    }
    std::abort();
}

struct AgentDelta {
    NodeId agent;
    double delta_gamma;
    double delta_phi;
    Externality label;
};

/// The two agents forming the link are not externality subjects; their
/// deltas are carried for diagnostics only.
struct EndpointDelta {
    NodeId agent;
    double delta_gamma;
    double delta_phi;
};

struct ExternalityReport {
    NodeId j;
    NodeId k;
    int base_distance;  // d(j,k) before the link; DistanceMatrix::kUnreachable if disconnected
    std::vector<AgentDelta> per_agent;  // the n-2 third parties, sorted by agent id
    EndpointDelta endpoint_j;
    EndpointDelta endpoint_k;
    // Full metric columns, before and after, for all n agents.
    std::vector<double> phi_before;
    std::vector<double> phi_after;
    std::vector<double> gamma_before;
    std::vector<double> gamma_after;

    int node_count() const { return static_cast<int>(phi_before.size()); }
};

namespace detail {

/// Builds the report against already-computed base metrics, so sweeps can
/// reuse one base computation per graph.
inline ExternalityReport externality_report_from_base(const Graph& g, const DistanceMatrix& base_dist,
                                                      const MetricsBundle& base, NodeId j, NodeId k) {
    const Graph perturbed = add_link(g, j, k);  // validates j, k and edge absence
    const MetricsBundle after = compute_metrics(perturbed);

    ExternalityReport report{
        .j = j,
        .k = k,
        .base_distance = base_dist.at(j, k),
        .per_agent = {},
        .endpoint_j = {j, after.gamma[static_cast<std::size_t>(j)] - base.gamma[static_cast<std::size_t>(j)],
                       after.phi[static_cast<std::size_t>(j)] - base.phi[static_cast<std::size_t>(j)]},
        .endpoint_k = {k, after.gamma[static_cast<std::size_t>(k)] - base.gamma[static_cast<std::size_t>(k)],
                       after.phi[static_cast<std::size_t>(k)] - base.phi[static_cast<std::size_t>(k)]},
        .phi_before = base.phi,
        .phi_after = after.phi,
        .gamma_before = base.gamma,
        .gamma_after = after.gamma,
    };

    const int n = g.node_count();
    report.per_agent.reserve(static_cast<std::size_t>(n - 2));
    for (NodeId i = 0; i < n; ++i) {
        if (i == j || i == k) continue;
        const double dg = after.gamma[static_cast<std::size_t>(i)] - base.gamma[static_cast<std::size_t>(i)];
        const double dp = after.phi[static_cast<std::size_t>(i)] - base.phi[static_cast<std::size_t>(i)];
        report.per_agent.push_back(AgentDelta{i, dg, dp, classify(dg)});
    }
    return report;
}

}  // namespace detail

/// Metric deltas and externality labels for every agent when the absent
/// link {j,k} is added to g.
inline ExternalityReport externality_report(const Graph& g, NodeId j, NodeId k) {
    const DistanceMatrix dist = all_pairs_distances(g);
    const MetricsBundle base = compute_metrics(g, dist);
    return detail::externality_report_from_base(g, dist, base, j, k);
}

struct BeneficiaryCount {
    int nob;                            // third parties with a positive label
    std::vector<NodeId> beneficiaries;  // their ids, sorted
    double beneficiary_pct;             // 100 * nob / n, n = all agents in the graph
};

inline BeneficiaryCount count_beneficiaries(const ExternalityReport& report) {
    BeneficiaryCount count{0, {}, 0.0};
    for (const AgentDelta& entry : report.per_agent) {
        if (entry.label == Externality::kPositive) {
            ++count.nob;
            count.beneficiaries.push_back(entry.agent);
        }
    }
    count.beneficiary_pct = 100.0 * static_cast<double>(count.nob) /
                            static_cast<double>(report.node_count());
    return count;
}

/// One graph plus the candidate links to probe on it.
struct ScanCase {
    std::string id;
    Graph graph;
    std::vector<Edge> candidates;
};

/// Builds a scan case whose candidates are every absent link of the graph.
inline ScanCase make_scan_case(std::string id, Graph graph) {
    std::vector<Edge> candidates;
    for (NodeId j = 0; j < graph.node_count(); ++j) {
        for (NodeId k = j + 1; k < graph.node_count(); ++k) {
            if (!graph.has_edge(j, k)) candidates.emplace_back(j, k);
        }
    }
    return ScanCase{std::move(id), std::move(graph), std::move(candidates)};
}

/// An agent whose availability rose although its closeness did not: a
/// counterexample to the necessity of a closeness increase.
struct ConjectureViolation {
    std::string graph_id;
    NodeId j;
    NodeId k;
    NodeId agent;
    double delta_gamma;
    double delta_phi;
};

/// Searches the corpus for agents labeled positive whose closeness did
/// not increase. Reports what it finds; asserts nothing. Violations come
/// back in (case, candidate, agent) order.
inline std::vector<ConjectureViolation> conjecture_scan(std::span<const ScanCase> cases) {
    std::vector<ConjectureViolation> violations;
    for (const ScanCase& scan_case : cases) {
        const DistanceMatrix dist = all_pairs_distances(scan_case.graph);
        const MetricsBundle base = compute_metrics(scan_case.graph, dist);
        for (const auto& [j, k] : scan_case.candidates) {
            const ExternalityReport report =
                detail::externality_report_from_base(scan_case.graph, dist, base, j, k);
            for (const AgentDelta& entry : report.per_agent) {
                if (entry.label == Externality::kPositive && entry.delta_phi <= kZeroTolerance) {
                    violations.push_back(ConjectureViolation{scan_case.id, j, k, entry.agent,
                                                             entry.delta_gamma, entry.delta_phi});
                }
            }
        }
    }
    return violations;
}

/// Third parties whose closeness increased yet saw no positive
/// externality: witnesses that a closeness increase is not sufficient.
inline std::vector<AgentDelta> not_sufficient_witness(const Graph& g, NodeId j, NodeId k) {
    const ExternalityReport report = externality_report(g, j, k);
    std::vector<AgentDelta> witnesses;
    for (const AgentDelta& entry : report.per_agent) {
        if (entry.delta_phi > kZeroTolerance && entry.label != Externality::kPositive) {
            witnesses.push_back(entry);
        }
    }
    return witnesses;
}

}  // namespace socloud
