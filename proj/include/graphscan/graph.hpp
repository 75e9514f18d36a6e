#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace graphscan {

using VertexId = std::int32_t;

/**
 * Set of vertices over a fixed ground set [0, n), stored as a bit mask.
 * One bit per vertex; word layout matches GraphSnapshot adjacency rows so
 * masked population counts can run directly against them.
 */
class VertexMask {
public:
    VertexMask() = default;
    explicit VertexMask(std::size_t n);
    VertexMask(std::size_t n, std::initializer_list<VertexId> vertices);

    std::size_t ground_size() const { return n_; }
    std::size_t count() const;
    bool test(VertexId v) const;
    void set(VertexId v);
    void reset(VertexId v);
    void clear();

    bool contains(const VertexMask& other) const;
    std::vector<VertexId> to_vector() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool operator==(const VertexMask&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/**
 * One undirected simple graph on a fixed vertex set at one time step.
 * Adjacency is kept as fixed-width bit rows; all counting operations reduce
 * to masked popcounts over the rows. Immutable once built (add_edge is for
 * construction); every const operation is safe to call concurrently.
 */
class GraphSnapshot {
public:
    GraphSnapshot() = default;
    explicit GraphSnapshot(std::size_t n);

    std::size_t num_vertices() const { return n_; }
    std::size_t words_per_row() const { return words_per_row_; }

    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;

    std::span<const std::uint64_t> row(VertexId v) const;
    std::int64_t edge_count() const;

    bool operator==(const GraphSnapshot&) const = default;

private:
    void check_vertex(VertexId v) const;

    std::size_t n_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/** Ordered snapshots sharing one vertex set; time index is 0-based. */
class GraphSeries {
public:
    GraphSeries() = default;
    explicit GraphSeries(std::vector<GraphSnapshot> snapshots);

    std::size_t length() const { return snapshots_.size(); }
    std::size_t num_vertices() const;
    const GraphSnapshot& at(std::size_t t) const;
    const std::vector<GraphSnapshot>& snapshots() const { return snapshots_; }

    void push_back(GraphSnapshot snapshot);

    bool operator==(const GraphSeries&) const = default;

private:
    std::vector<GraphSnapshot> snapshots_;
};

// Closed k-hop neighborhood N_k[v; g]: all vertices at distance <= k from v,
// including v itself. k = 0 yields exactly {v}.
VertexMask neighborhood(const GraphSnapshot& g, VertexId v, int k);

// Number of edges of g with both endpoints in vset.
std::int64_t induced_edge_count(const GraphSnapshot& g, const VertexMask& vset);

// Graph on the same vertex set whose edges are present in both g and h.
GraphSnapshot intersect(const GraphSnapshot& g, const GraphSnapshot& h);

std::int64_t degree(const GraphSnapshot& g, VertexId v);

// Edges of each target snapshot induced by a fixed mask, in one pass over the
// mask's set bits. Targets typically share most of their rows in cache, which
// is why this beats calling induced_edge_count per target.
std::vector<std::int64_t> induced_edge_count_multi(
    std::span<const GraphSnapshot* const> targets, const VertexMask& vset);

}  // namespace graphscan
