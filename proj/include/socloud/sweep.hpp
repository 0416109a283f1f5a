#pragma once

// Ring-network experiment: for every ring size, every agent j, and every
// partner k at hop distance 2..n/2, add the chord {j,k} and count how many
// third parties end up with a higher availability.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "socloud/externalities.hpp"
#include "socloud/graph.hpp"
#include "socloud/metrics.hpp"

namespace socloud {

struct SweepRecord {
    int n;       // ring size
    NodeId j;    // source agent
    NodeId k;    // partner agent
    int d;       // hop distance between j and k before the link
    int nob;     // third parties with a positive externality
    int non_beneficiaries;  // the other third parties, n - 2 - nob
    double beneficiary_pct;  // 100 * nob / n

    bool operator==(const SweepRecord& other) const = default;
};

/// Min/max/mean NOB over all (j,k) records at one (n,d) cell. On rings the
/// three coincide by rotational symmetry.
struct DistanceAggregate {
    int n;
    int d;
    int record_count;
    int min_nob;
    int max_nob;
    double mean_nob;

    bool operator==(const DistanceAggregate& other) const = default;
};

/// Per-size fraction of consecutive distance steps d -> d+1 whose mean NOB
/// did not decrease.
struct MonotonicityRow {
    int n;
    int steps;
    int non_decreasing;
    double fraction() const {
        return steps == 0 ? 1.0 : static_cast<double>(non_decreasing) / static_cast<double>(steps);
    }

    bool operator==(const MonotonicityRow& other) const = default;
};

struct SweepSummary {
    int n_min;
    int n_max;
    std::vector<SweepRecord> records;           // sorted by (n, j, k)
    std::vector<DistanceAggregate> aggregates;  // sorted by (n, d)
    std::vector<MonotonicityRow> monotonicity;  // sorted by n

    bool operator==(const SweepSummary& other) const = default;
};

inline int ring_distance(int n, NodeId a, NodeId b) {
    const int gap = std::abs(a - b);
    return std::min(gap, n - gap);
}

namespace detail {

inline void finalize_summary(SweepSummary& summary) {
    std::sort(summary.records.begin(), summary.records.end(),
              [](const SweepRecord& a, const SweepRecord& b) {
                  return std::tie(a.n, a.j, a.k) < std::tie(b.n, b.j, b.k);
              });

    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (const SweepRecord& record : summary.records) {
        cells[{record.n, record.d}].push_back(record.nob);
    }
    summary.aggregates.clear();
    for (const auto& [key, nobs] : cells) {
        const auto [min_it, max_it] = std::minmax_element(nobs.begin(), nobs.end());
        long long total = 0;
        for (int nob : nobs) total += nob;
        summary.aggregates.push_back(DistanceAggregate{
            key.first, key.second, static_cast<int>(nobs.size()), *min_it, *max_it,
            static_cast<double>(total) / static_cast<double>(nobs.size())});
    }

    summary.monotonicity.clear();
    for (int n = summary.n_min; n <= summary.n_max; ++n) {
        MonotonicityRow row{n, 0, 0};
        for (int d = 2; d + 1 <= n / 2; ++d) {
            const auto lower = cells.find({n, d});
            const auto upper = cells.find({n, d + 1});
            if (lower == cells.end() || upper == cells.end()) continue;
            const auto mean = [](const std::vector<int>& nobs) {
                long long total = 0;
                for (int nob : nobs) total += nob;
                return static_cast<double>(total) / static_cast<double>(nobs.size());
            };
            ++row.steps;
            if (mean(upper->second) >= mean(lower->second)) ++row.non_decreasing;
        }
        summary.monotonicity.push_back(row);
    }
}

inline void check_sweep_range(int n_min, int n_max) {
    if (n_min < 4) {
        throw std::invalid_argument(
            "sweep needs rings of size >= 4 (a cycle plus a distance-2 chord), got n_min = " +
            std::to_string(n_min));
    }
    if (n_min > n_max) {
        throw std::invalid_argument("empty sweep range: n_min " + std::to_string(n_min) +
                                    " > n_max " + std::to_string(n_max));
    }
}

inline SweepRecord make_record(int n, NodeId j, NodeId k, int d, int nob) {
    return SweepRecord{n,   j, k, d, nob, n - 2 - nob,
                       100.0 * static_cast<double>(nob) / static_cast<double>(n)};
}

}  // namespace detail

/// The full experiment: every agent j, every distance d in [2, n/2], every
/// partner k at that distance, one record per ordered (j,k) evaluation.
inline SweepSummary ring_sweep(int n_min, int n_max) {
    detail::check_sweep_range(n_min, n_max);
    SweepSummary summary{n_min, n_max, {}, {}, {}};
    for (int n = n_min; n <= n_max; ++n) {
        const Graph ring = ring_graph(n);
        const DistanceMatrix dist = all_pairs_distances(ring);
        const MetricsBundle base = compute_metrics(ring, dist);
        for (NodeId j = 0; j < n; ++j) {
            for (int d = 2; d <= n / 2; ++d) {
                // Two partners at distance d, or one when d is the antipode.
                const NodeId partners[2] = {(j + d) % n, (j - d + n) % n};
                const int partner_count = partners[0] == partners[1] ? 1 : 2;
                for (int t = 0; t < partner_count; ++t) {
                    const NodeId k = partners[t];
                    const ExternalityReport report =
                        detail::externality_report_from_base(ring, dist, base, j, k);
                    const BeneficiaryCount count = count_beneficiaries(report);
                    summary.records.push_back(detail::make_record(n, j, k, d, count.nob));
                }
            }
        }
    }
    detail::finalize_summary(summary);
    return summary;
}

/// Same output as ring_sweep, but evaluates a single representative link
/// per (n,d) and replicates its NOB across the rotation orbit.
inline SweepSummary symmetry_reduced_sweep(int n_min, int n_max) {
    detail::check_sweep_range(n_min, n_max);
    SweepSummary summary{n_min, n_max, {}, {}, {}};
    for (int n = n_min; n <= n_max; ++n) {
        const Graph ring = ring_graph(n);
        const DistanceMatrix dist = all_pairs_distances(ring);
        const MetricsBundle base = compute_metrics(ring, dist);
        for (int d = 2; d <= n / 2; ++d) {
            const ExternalityReport representative =
                detail::externality_report_from_base(ring, dist, base, 0, d);
            const int nob = count_beneficiaries(representative).nob;
            for (NodeId j = 0; j < n; ++j) {
                summary.records.push_back(detail::make_record(n, j, (j + d) % n, d, nob));
                if (2 * d != n) {
                    summary.records.push_back(detail::make_record(n, j, (j - d + n) % n, d, nob));
                }
            }
        }
    }
    detail::finalize_summary(summary);
    return summary;
}

struct FindingsVerdict {
    // No positive externalities on rings of size <= 10.
    bool small_rings_clean;
    bool small_rings_vacuous;  // no n <= 10 in range
    // For every n >= 11 where distance 3 exists, mean NOB at d=2 <= mean NOB at d=3.
    bool near_distance_step;
    bool near_distance_vacuous;  // no n >= 11 in range
    int monotone_steps;
    int monotone_non_decreasing;
    double monotone_fraction() const {
        return monotone_steps == 0
                   ? 1.0
                   : static_cast<double>(monotone_non_decreasing) / static_cast<double>(monotone_steps);
    }
    // Beneficiaries always outnumbered by non-beneficiaries.
    bool strict_minority;
    double max_beneficiary_pct;
};

/// Checks the sweep against the three ring findings. Throws if the summary
/// is missing any (n,d) cell or any record of one.
inline FindingsVerdict findings_check(const SweepSummary& summary) {
    std::map<std::pair<int, int>, int> cell_counts;
    for (const SweepRecord& record : summary.records) {
        ++cell_counts[{record.n, record.d}];
    }
    for (int n = summary.n_min; n <= summary.n_max; ++n) {
        for (int d = 2; d <= n / 2; ++d) {
            const int expected = 2 * d == n ? n : 2 * n;
            const auto it = cell_counts.find({n, d});
            if (it == cell_counts.end() || it->second != expected) {
                throw std::invalid_argument("sweep summary is missing records for (n=" +
                                            std::to_string(n) + ", d=" + std::to_string(d) + ")");
            }
        }
    }

    FindingsVerdict verdict{true, true, true, true, 0, 0, true, 0.0};
    for (const SweepRecord& record : summary.records) {
        if (record.n <= 10) {
            verdict.small_rings_vacuous = false;
            if (record.nob != 0) verdict.small_rings_clean = false;
        }
        if (record.nob >= record.non_beneficiaries) verdict.strict_minority = false;
        verdict.max_beneficiary_pct = std::max(verdict.max_beneficiary_pct, record.beneficiary_pct);
    }

    std::map<std::pair<int, int>, double> means;
    for (const DistanceAggregate& cell : summary.aggregates) {
        means[{cell.n, cell.d}] = cell.mean_nob;
    }
    for (int n = std::max(summary.n_min, 11); n <= summary.n_max; ++n) {
        if (n / 2 < 3) continue;
        verdict.near_distance_vacuous = false;
        if (means.at({n, 2}) > means.at({n, 3})) verdict.near_distance_step = false;
    }

    for (const MonotonicityRow& row : summary.monotonicity) {
        verdict.monotone_steps += row.steps;
        verdict.monotone_non_decreasing += row.non_decreasing;
    }
    return verdict;
}

}  // namespace socloud
