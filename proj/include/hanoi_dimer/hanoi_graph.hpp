#pragma once

// Generalized Tower of Hanoi graphs TH_d(n).
//
// Stage 0 is K_{d+1}. Stage n+1 joins d+1 copies of stage n: copy i keeps
// its corner i as global corner i, and for each pair i < j one edge joins
// corner j of copy i to corner i of copy j. Vertices are indexed
// copy-major: index = copy * (d+1)^n + local index.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hanoi_dimer/errors.hpp"

namespace hanoi_dimer {

/// Simple undirected graph: sorted edge list plus adjacency lists.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;

    Graph(std::size_t vertex_count, std::vector<Edge> edges) : adjacency_(vertex_count) {
        for (auto& [u, v] : edges) {
            if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
            if (u >= vertex_count || v >= vertex_count) throw Error("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw Error("parallel edge");
        edges_ = std::move(edges);
        for (const auto& [u, v] : edges_) {
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
    std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// One connecting edge of stage n+1: corner `corner_a` of copy `copy_a`
/// joined to corner `corner_b` of copy `copy_b`.
struct ConnectorEdge {
    int copy_a;
    int corner_a;
    int copy_b;
    int corner_b;

    friend bool operator==(const ConnectorEdge&, const ConnectorEdge&) = default;
};

inline std::vector<ConnectorEdge> connector_edges(int d) {
    if (d < 2) throw DomainError("dimension d must be >= 2");
    std::vector<ConnectorEdge> out;
    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) out.push_back({i, j, j, i});
    }
    return out;
}

/// (d+1)^(n+1) with overflow saturation at UINT64_MAX.
inline std::uint64_t hanoi_vertex_count(int d, int n) {
    std::uint64_t v = 1;
    for (int i = 0; i <= n; ++i) {
        if (v > UINT64_MAX / static_cast<std::uint64_t>(d + 1)) return UINT64_MAX;
        v *= static_cast<std::uint64_t>(d + 1);
    }
    return v;
}

inline std::uint64_t hanoi_edge_count(int d, int n) {
    return static_cast<std::uint64_t>(d + 1) * (hanoi_vertex_count(d, n) - 1) / 2;
}

struct HanoiGraph {
    int d = 0;
    int n = 0;
    Graph graph;
    std::vector<std::size_t> corners;
};

inline constexpr std::uint64_t kDefaultVertexCap = 1'000'000;

inline HanoiGraph build(int d, int n, std::uint64_t vertex_cap = kDefaultVertexCap) {
    if (d < 2) throw DomainError("dimension d must be >= 2");
    if (n < 0) throw DomainError("stage n must be >= 0");
    const std::uint64_t vcount = hanoi_vertex_count(d, n);
    if (vcount > vertex_cap) {
        throw ResourceError("TH_" + std::to_string(d) + "(" + std::to_string(n) + ") has " +
                            std::to_string(vcount) + " vertices, above the cap of " + std::to_string(vertex_cap));
    }
    const std::size_t k = static_cast<std::size_t>(d) + 1;

    std::vector<Graph::Edge> edges;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) edges.emplace_back(a, b);
    }
    std::vector<std::size_t> corners(k);
    for (std::size_t i = 0; i < k; ++i) corners[i] = i;
    std::size_t size = k;

    for (int stage = 1; stage <= n; ++stage) {
        std::vector<Graph::Edge> next;
        next.reserve(edges.size() * k + k * (k - 1) / 2);
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t off = c * size;
            for (const auto& [u, v] : edges) next.emplace_back(u + off, v + off);
        }
        for (const auto& ce : connector_edges(d)) {
            const std::size_t u = static_cast<std::size_t>(ce.copy_a) * size + corners[static_cast<std::size_t>(ce.corner_a)];
            const std::size_t v = static_cast<std::size_t>(ce.copy_b) * size + corners[static_cast<std::size_t>(ce.corner_b)];
            next.emplace_back(u, v);
        }
        for (std::size_t i = 0; i < k; ++i) corners[i] = i * size + corners[i];
        edges = std::move(next);
        size *= k;
    }

    HanoiGraph g;
    g.d = d;
    g.n = n;
    g.graph = Graph(size, std::move(edges));
    g.corners = std::move(corners);
    return g;
}

/// Edge list as CSV with a `# d=.. n=.. corners=..` header line.
inline void write_edge_csv(std::ostream& os, const HanoiGraph& g) {
    os << "# d=" << g.d << " n=" << g.n << " corners=";
    for (std::size_t i = 0; i < g.corners.size(); ++i) os << (i ? "," : "") << g.corners[i];
    os << "\nu,v\n";
    for (const auto& [u, v] : g.graph.edges()) os << u << ',' << v << '\n';
}

}  // namespace hanoi_dimer
