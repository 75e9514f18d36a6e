#pragma once

// Reference implementations used only by tests. Deliberately written against
// plain containers (edge lists, std::set) with no shared code or data layout
// with the library, so agreement between the two is meaningful.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "graphscan/graph.hpp"

namespace oracle {

struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // stored with first < second

    void add_edge(int u, int v) {
        if (u == v) return;
        if (u > v) std::swap(u, v);
        edges.insert({u, v});
    }
    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return edges.count({u, v}) > 0;
    }
};

inline Graph from_snapshot(const graphscan::GraphSnapshot& g) {
    Graph out;
    out.n = static_cast<int>(g.num_vertices());
    for (int u = 0; u < out.n; ++u) {
        for (int v = u + 1; v < out.n; ++v) {
            if (g.has_edge(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

// Closed k-hop neighborhood by repeated relational joins: at each step, join
// the current vertex set against the edge relation and union the result in.
inline std::set<int> neighborhood(const Graph& g, int v, int k) {
    std::set<int> current{v};
    for (int step = 0; step < k; ++step) {
        std::set<int> expanded = current;
        for (int u : current) {
            for (const auto& [a, b] : g.edges) {
                if (a == u) expanded.insert(b);
                if (b == u) expanded.insert(a);
            }
        }
        if (expanded == current) break;
        current = std::move(expanded);
    }
    return current;
}

// Induced edge count by double loop over vertex pairs.
inline std::int64_t induced_edges(const Graph& g, const std::set<int>& vset) {
    std::int64_t count = 0;
    for (auto it = vset.begin(); it != vset.end(); ++it) {
        for (auto jt = std::next(it); jt != vset.end(); ++jt) {
            if (g.has_edge(*it, *jt)) ++count;
        }
    }
    return count;
}

inline std::int64_t degree(const Graph& g, int v) {
    std::int64_t d = 0;
    for (const auto& [a, b] : g.edges) {
        if (a == v || b == v) ++d;
    }
    return d;
}

// Psi with the k = 0 convention (degree in the current graph).
inline std::int64_t psi(const std::vector<Graph>& series, std::size_t t, int k, int v) {
    const Graph& g = series[t];
    if (k == 0) return degree(g, v);
    return induced_edges(g, neighborhood(g, v, k));
}

// Phi with the k = 0 convention (degree in the intersection graph).
inline std::int64_t phi(const std::vector<Graph>& series, std::size_t t, std::size_t t_prime,
                        int k, int v) {
    const Graph& now = series[t];
    const Graph& then = series[t_prime];
    if (k == 0) {
        std::int64_t d = 0;
        for (int u = 0; u < now.n; ++u) {
            if (u != v && now.has_edge(v, u) && then.has_edge(v, u)) ++d;
        }
        return d;
    }
    return induced_edges(then, neighborhood(now, v, k));
}

}  // namespace oracle
