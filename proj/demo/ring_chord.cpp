// Minimal library walkthrough: measure what a single chord does to every
// other agent on an eleven-agent ring.

#include <iostream>

#include "socloud/socloud.hpp"

int main() {
    const socloud::Graph ring = socloud::ring_graph(11);
    const socloud::MetricsBundle before = socloud::compute_metrics(ring);
    std::cout << "ring of " << ring.node_count() << ", gamma " << socloud::format_fixed(before.gamma[0])
              << " everywhere\n\n";

    const socloud::ExternalityReport report = socloud::externality_report(ring, 0, 3);
    std::cout << "after adding link (0,3):\n";
    for (const socloud::AgentDelta& entry : report.per_agent) {
        std::cout << "  agent " << entry.agent << "  delta_gamma "
                  << socloud::format_fixed(entry.delta_gamma) << "  " << to_string(entry.label)
                  << "\n";
    }

    const socloud::BeneficiaryCount count = socloud::count_beneficiaries(report);
    std::cout << "\nbeneficiaries: " << count.nob << " of " << ring.node_count() - 2
              << " third parties (" << socloud::format_fixed(count.beneficiary_pct, 1)
              << "% of the network)\n";
    return 0;
}
