#pragma once

// Undirected simple graphs over dense integer node ids, generators, and
// all-pairs shortest-path hop counts.

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace socloud {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph. Edges are stored as normalized
/// (min,max) pairs, sorted and deduplicated; adjacency lists are kept
/// sorted and symmetric.
class Graph {
public:
    Graph(int node_count, std::vector<Edge> edges)
        : node_count_(node_count) {
        if (node_count < 1) {
            throw std::invalid_argument("graph needs at least one node");
        }
        for (auto& [u, v] : edges) {
            if (u == v) {
                throw std::invalid_argument(
                    "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ") not allowed");
            }
            if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
                throw std::invalid_argument(
                    "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") has an endpoint outside [0," + std::to_string(node_count) + ")");
            }
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);

        adjacency_.resize(static_cast<std::size_t>(node_count));
        for (const auto& [u, v] : edges_) {
            adjacency_[static_cast<std::size_t>(u)].push_back(v);
            adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& neighbors : adjacency_) {
            std::sort(neighbors.begin(), neighbors.end());
        }
    }

    int node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<NodeId>& neighbors(NodeId u) const {
        return adjacency_[static_cast<std::size_t>(u)];
    }
    int degree(NodeId u) const {
        return static_cast<int>(adjacency_[static_cast<std::size_t>(u)].size());
    }

    bool has_edge(NodeId u, NodeId v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    bool operator==(const Graph& other) const = default;

private:
    int node_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
};

inline Graph make_graph(int node_count, std::vector<Edge> edges) {
    return Graph(node_count, std::move(edges));
}

/// Cycle graph 0-1-...-(n-1)-0. Every node has degree 2; diameter n/2.
inline Graph ring_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("a cycle needs at least 3 nodes, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (NodeId i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? static_cast<std::size_t>(n - 1) : 0);
    for (NodeId i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

/// Uniform edge-probability graph: each pair {u,v} (lexicographic order)
/// is an edge with probability p. Deterministic for a fixed rng state.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("edge probability must be in [0,1]");
    }
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

/// Returns a copy of g with the extra edge {j,k}; g is left untouched.
inline Graph add_link(const Graph& g, NodeId j, NodeId k) {
    if (j == k) {
        throw std::invalid_argument("cannot link node " + std::to_string(j) + " to itself");
    }
    if (j < 0 || j >= g.node_count() || k < 0 || k >= g.node_count()) {
        throw std::invalid_argument(
            "link (" + std::to_string(j) + "," + std::to_string(k) + ") has an endpoint outside [0," +
            std::to_string(g.node_count()) + ")");
    }
    if (g.has_edge(j, k)) {
        throw std::invalid_argument(
            "edge (" + std::to_string(j) + "," + std::to_string(k) + ") already present");
    }
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(std::min(j, k), std::max(j, k));
    return Graph(g.node_count(), std::move(edges));
}

/// Symmetric matrix of pairwise hop counts. kUnreachable marks pairs with
/// no connecting path; it is a sentinel, never a large finite distance.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(int n)
        : n_(n), dist_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

    int size() const { return n_; }

    int at(NodeId i, NodeId j) const {
        return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(j)];
    }
    int& at(NodeId i, NodeId j) {
        return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(j)];
    }

    bool reachable(NodeId i, NodeId j) const { return at(i, j) != kUnreachable; }

    bool operator==(const DistanceMatrix& other) const = default;

private:
    int n_;
    std::vector<int> dist_;
};

/// Per-source breadth-first traversal; O(n*(n+m)) total.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.node_count();
    DistanceMatrix dist(n);
    std::queue<NodeId> frontier;
    for (NodeId s = 0; s < n; ++s) {
        dist.at(s, s) = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            const NodeId u = frontier.front();
            frontier.pop();
            for (NodeId v : g.neighbors(u)) {
                if (dist.at(s, v) == DistanceMatrix::kUnreachable) {
                    dist.at(s, v) = dist.at(s, u) + 1;
                    frontier.push(v);
                }
            }
        }
    }
    return dist;
}

/// Same contract as all_pairs_distances, computed by relaxation over all
/// node triples instead of traversal. Exists as an independent
/// cross-check; not meant for the main computation path.
inline DistanceMatrix oracle_distances(const Graph& g) {
    const int n = g.node_count();
    const int inf = n + 1;  // strictly larger than any simple-path length
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), inf));
    for (NodeId i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& [u, v] : g.edges()) {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for (NodeId mid = 0; mid < n; ++mid) {
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId j = 0; j < n; ++j) {
                if (d[i][mid] + d[mid][j] < d[i][j]) {
                    d[i][j] = d[i][mid] + d[mid][j];
                }
            }
        }
    }
    DistanceMatrix dist(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            dist.at(i, j) = d[i][j] >= inf ? DistanceMatrix::kUnreachable : d[i][j];
        }
    }
    return dist;
}

}  // namespace socloud
