#pragma once

// The three model quantities over a fixed graph: harmonic closeness of
// every agent, the pairwise resource probability matrix, and per-agent
// availability.
//
//   phi[i]      = sum over j != i of 1/d(i,j), unreachable pairs contribute 0
//   alpha[i][j] = (1/d(i,j)) / phi[j], the probability that i obtains the
//                 resource from j; 0 when j is unreachable or isolated
//   gamma[i]    = 1 - prod over j != i of (1 - alpha[i][j])

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "socloud/graph.hpp"

namespace socloud {

/// Dense n-by-n matrix of resource probabilities; diagonal fixed at 0.
class AlphaMatrix {
public:
    explicit AlphaMatrix(int n)
        : n_(n), values_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    int size() const { return n_; }

    double at(NodeId i, NodeId j) const {
        return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(j)];
    }
    double& at(NodeId i, NodeId j) {
        return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(j)];
    }

    bool operator==(const AlphaMatrix& other) const = default;

private:
    int n_;
    std::vector<double> values_;
};

struct MetricsBundle {
    std::vector<double> phi;
    AlphaMatrix alpha;
    std::vector<double> gamma;

    int node_count() const { return alpha.size(); }
};

inline std::vector<double> harmonic_closeness(const Graph& g, const DistanceMatrix& d) {
    const int n = g.node_count();
    std::vector<double> phi(static_cast<std::size_t>(n), 0.0);
    for (NodeId i = 0; i < n; ++i) {
        double sum = 0.0;
        for (NodeId j = 0; j < n; ++j) {
            if (j != i && d.reachable(i, j)) {
                sum += 1.0 / static_cast<double>(d.at(i, j));
            }
        }
        phi[static_cast<std::size_t>(i)] = sum;
    }
    return phi;
}

/// Probability that agent i obtains the resource from agent j. Zero when
/// j is unreachable from i or j has zero closeness.
inline double resource_probability(std::span<const double> phi, const DistanceMatrix& d,
                                   NodeId i, NodeId j) {
    if (i == j) {
        throw std::invalid_argument("self-supply is undefined (agent " + std::to_string(i) + ")");
    }
    if (!d.reachable(i, j)) return 0.0;
    const double phi_j = phi[static_cast<std::size_t>(j)];
    if (phi_j == 0.0) return 0.0;
    return (1.0 / static_cast<double>(d.at(i, j))) / phi_j;
}

inline AlphaMatrix resource_matrix(std::span<const double> phi, const DistanceMatrix& d) {
    const int n = d.size();
    AlphaMatrix alpha(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            if (i != j) {
                alpha.at(i, j) = resource_probability(phi, d, i, j);
            }
        }
    }
    return alpha;
}

/// Probability that agent i obtains the resource from at least one other
/// agent: 1 - prod over j != i of (1 - alpha[i][j]). Factors are well away
/// from 0 at the scales handled here, so the product is evaluated directly.
inline double availability(const AlphaMatrix& alpha, NodeId i) {
    const int n = alpha.size();
    double miss = 1.0;
    for (NodeId j = 0; j < n; ++j) {
        if (j != i) {
            miss *= 1.0 - alpha.at(i, j);
        }
    }
    return 1.0 - miss;
}

inline std::vector<double> availability_vector(const AlphaMatrix& alpha) {
    const int n = alpha.size();
    std::vector<double> gamma(static_cast<std::size_t>(n), 0.0);
    for (NodeId i = 0; i < n; ++i) {
        gamma[static_cast<std::size_t>(i)] = availability(alpha, i);
    }
    return gamma;
}

inline MetricsBundle compute_metrics(const Graph& g, const DistanceMatrix& d) {
    std::vector<double> phi = harmonic_closeness(g, d);
    AlphaMatrix alpha = resource_matrix(phi, d);
    std::vector<double> gamma = availability_vector(alpha);
    return MetricsBundle{std::move(phi), std::move(alpha), std::move(gamma)};
}

inline MetricsBundle compute_metrics(const Graph& g) {
    return compute_metrics(g, all_pairs_distances(g));
}

}  // namespace socloud
