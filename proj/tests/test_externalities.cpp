#include <random>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "socloud/externalities.hpp"
#include "socloud/graph.hpp"
#include "socloud/metrics.hpp"

using Catch::Matchers::WithinAbs;
using socloud::classify;
using socloud::compute_metrics;
using socloud::count_beneficiaries;
using socloud::Externality;
using socloud::externality_report;
using socloud::ExternalityReport;
using socloud::Graph;
using socloud::kZeroTolerance;
using socloud::NodeId;
using socloud::path_graph;
using socloud::random_graph;
using socloud::ring_graph;

TEST_CASE("classification respects the zero band") {
    REQUIRE(classify(0.003) == Externality::kPositive);
    REQUIRE(classify(-0.011) == Externality::kNegative);
    REQUIRE(classify(-0.017) == Externality::kNegative);
    REQUIRE(classify(0.0) == Externality::kNone);
    REQUIRE(classify(5e-13) == Externality::kNone);
    REQUIRE(classify(-5e-13) == Externality::kNone);
    REQUIRE(classify(2e-12) == Externality::kPositive);
    REQUIRE(classify(-2e-12) == Externality::kNegative);
    REQUIRE(classify(0.5, 0.6) == Externality::kNone);

    REQUIRE(socloud::to_string(Externality::kPositive) == "POSITIVE");
    REQUIRE(socloud::to_string(Externality::kNegative) == "NEGATIVE");
    REQUIRE(socloud::to_string(Externality::kNone) == "NONE");
}

TEST_CASE("closing a three-agent path hurts the middle agent") {
    const ExternalityReport report = externality_report(path_graph(3), 0, 2);
    REQUIRE(report.base_distance == 2);
    REQUIRE(report.per_agent.size() == 1);
    const socloud::AgentDelta& middle = report.per_agent.front();
    REQUIRE(middle.agent == 1);
    REQUIRE_THAT(middle.delta_gamma, WithinAbs(-5.0 / 36.0, 1e-15));
    REQUIRE(middle.delta_phi == 0.0);
    REQUIRE(middle.label == Externality::kNegative);

    REQUIRE(report.endpoint_j.agent == 0);
    REQUIRE(report.endpoint_k.agent == 2);
    REQUIRE_THAT(report.endpoint_j.delta_gamma, WithinAbs(3.0 / 4.0 - 2.0 / 3.0, 1e-15));
    REQUIRE_THAT(report.endpoint_j.delta_phi, WithinAbs(0.5, 1e-15));
}

TEST_CASE("six-agent ring chord leaves every third party worse off") {
    const ExternalityReport report = externality_report(ring_graph(6), 0, 2);
    REQUIRE(report.base_distance == 2);
    REQUIRE(report.per_agent.size() == 4);

    const std::vector<NodeId> expected_agents{1, 3, 4, 5};
    const std::vector<double> expected_delta{-0.053316275510204084, -0.016065, -0.03294, -0.016065};
    const std::vector<double> expected_dphi{0.0, 1.0 / 6.0, 0.0, 1.0 / 6.0};
    for (std::size_t t = 0; t < 4; ++t) {
        REQUIRE(report.per_agent[t].agent == expected_agents[t]);
        REQUIRE_THAT(report.per_agent[t].delta_gamma, WithinAbs(expected_delta[t], 1e-14));
        REQUIRE_THAT(report.per_agent[t].delta_phi, WithinAbs(expected_dphi[t], 1e-14));
        REQUIRE(report.per_agent[t].label == Externality::kNegative);
    }
    for (double gamma : report.gamma_before) {
        REQUIRE_THAT(gamma, WithinAbs(0.6813775, 1e-15));
    }
    REQUIRE_THAT(report.gamma_after[3], WithinAbs(0.6653125, 1e-15));
    REQUIRE_THAT(report.endpoint_j.delta_gamma, WithinAbs(0.04540821428571429, 1e-14));

    const socloud::BeneficiaryCount count = count_beneficiaries(report);
    REQUIRE(count.nob == 0);
    REQUIRE(count.beneficiaries.empty());
    REQUIRE(count.beneficiary_pct == 0.0);
}

TEST_CASE("eleven-agent ring chord at distance three creates two beneficiaries") {
    const ExternalityReport report = externality_report(ring_graph(11), 0, 3);
    const socloud::BeneficiaryCount count = count_beneficiaries(report);
    REQUIRE(count.nob == 2);
    REQUIRE(count.beneficiaries == std::vector<NodeId>{4, 10});
    REQUIRE_THAT(count.beneficiary_pct, WithinAbs(200.0 / 11.0, 1e-12));

    for (const socloud::AgentDelta& entry : report.per_agent) {
        if (entry.agent == 4 || entry.agent == 10) {
            REQUIRE_THAT(entry.delta_gamma, WithinAbs(0.0013046247865850463, 1e-14));
            REQUIRE(entry.label == Externality::kPositive);
        }
        if (entry.agent == 7) {
            REQUIRE_THAT(entry.delta_gamma, WithinAbs(-0.0179454100706991, 1e-14));
            REQUIRE(entry.label == Externality::kNegative);
        }
    }
}

TEST_CASE("report rejects links that cannot be added") {
    const Graph ring = ring_graph(5);
    REQUIRE_THROWS_AS(externality_report(ring, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(externality_report(ring, 3, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(externality_report(ring, 0, 5), std::invalid_argument);
}

TEST_CASE("link addition never lowers anyone's closeness") {
    for (int n = 4; n <= 12; ++n) {
        const Graph ring = ring_graph(n);
        for (NodeId j = 0; j < n; ++j) {
            for (NodeId k = j + 1; k < n; ++k) {
                if (ring.has_edge(j, k)) continue;
                const ExternalityReport report = externality_report(ring, j, k);
                for (int i = 0; i < n; ++i) {
                    const auto idx = static_cast<std::size_t>(i);
                    REQUIRE(report.phi_after[idx] - report.phi_before[idx] >= -kZeroTolerance);
                }
            }
        }
    }
}

TEST_CASE("scan over the ring corpus finds no positive externality without closeness gain") {
    std::vector<socloud::ScanCase> cases;
    for (int n = 4; n <= 14; ++n) {
        cases.push_back(socloud::make_scan_case("ring_" + std::to_string(n), ring_graph(n)));
    }
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        cases.push_back(socloud::make_scan_case("random_" + std::to_string(trial),
                                                random_graph(6 + trial % 7, 0.3, rng)));
    }
    REQUIRE(socloud::conjecture_scan(cases).empty());
}

TEST_CASE("closeness gains without positive externalities witness non-sufficiency") {
    const std::vector<socloud::AgentDelta> witnesses =
        socloud::not_sufficient_witness(ring_graph(12), 0, 2);
    std::vector<NodeId> agents;
    for (const socloud::AgentDelta& w : witnesses) agents.push_back(w.agent);
    REQUIRE(agents == std::vector<NodeId>{3, 4, 5, 6, 8, 9, 10, 11});
    for (const socloud::AgentDelta& w : witnesses) {
        REQUIRE(w.delta_phi > kZeroTolerance);
        REQUIRE(w.label != Externality::kPositive);
    }
}
