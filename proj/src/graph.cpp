#include "graphscan/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace graphscan {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_in_range(std::size_t n, VertexId v, const char* what) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
        std::ostringstream msg;
        msg << what << ": vertex " << v << " out of range [0, " << n << ")";
        throw std::out_of_range(msg.str());
    }
}

}  // namespace

VertexMask::VertexMask(std::size_t n) : n_(n), words_(words_for(n), 0) {}

VertexMask::VertexMask(std::size_t n, std::initializer_list<VertexId> vertices)
    : VertexMask(n) {
    for (VertexId v : vertices) set(v);
}

std::size_t VertexMask::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool VertexMask::test(VertexId v) const {
    check_in_range(n_, v, "VertexMask::test");
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
}

void VertexMask::set(VertexId v) {
    check_in_range(n_, v, "VertexMask::set");
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexMask::reset(VertexId v) {
    check_in_range(n_, v, "VertexMask::reset");
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexMask::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

bool VertexMask::contains(const VertexMask& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (other.words_[i] & ~words_[i]) return false;
    }
    return true;
}

std::vector<VertexId> VertexMask::to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            int bit = std::countr_zero(w);
            out.push_back(static_cast<VertexId>(i * 64 + bit));
            w &= w - 1;
        }
    }
    return out;
}

GraphSnapshot::GraphSnapshot(std::size_t n)
    : n_(n), words_per_row_(words_for(n)), bits_(n * words_per_row_, 0) {}

void GraphSnapshot::check_vertex(VertexId v) const {
    check_in_range(n_, v, "GraphSnapshot");
}

void GraphSnapshot::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("GraphSnapshot::add_edge: self-loops not allowed");
    bits_[static_cast<std::size_t>(u) * words_per_row_ + (static_cast<std::size_t>(v) >> 6)] |=
        std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_per_row_ + (static_cast<std::size_t>(u) >> 6)] |=
        std::uint64_t{1} << (u & 63);
}

void GraphSnapshot::remove_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_per_row_ + (static_cast<std::size_t>(v) >> 6)] &=
        ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_per_row_ + (static_cast<std::size_t>(u) >> 6)] &=
        ~(std::uint64_t{1} << (u & 63));
}

bool GraphSnapshot::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_per_row_ +
                  (static_cast<std::size_t>(v) >> 6)] >>
            (v & 63)) &
           1;
}

std::span<const std::uint64_t> GraphSnapshot::row(VertexId v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<std::size_t>(v) * words_per_row_, words_per_row_};
}

std::int64_t GraphSnapshot::edge_count() const {
    std::int64_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

GraphSeries::GraphSeries(std::vector<GraphSnapshot> snapshots)
    : snapshots_(std::move(snapshots)) {
    for (const auto& g : snapshots_) {
        if (g.num_vertices() != snapshots_.front().num_vertices()) {
            throw std::invalid_argument("GraphSeries: snapshots must share one vertex count");
        }
    }
}

std::size_t GraphSeries::num_vertices() const {
    return snapshots_.empty() ? 0 : snapshots_.front().num_vertices();
}

const GraphSnapshot& GraphSeries::at(std::size_t t) const {
    if (t >= snapshots_.size()) {
        std::ostringstream msg;
        msg << "GraphSeries::at: time " << t << " out of range [0, " << snapshots_.size() << ")";
        throw std::out_of_range(msg.str());
    }
    return snapshots_[t];
}

void GraphSeries::push_back(GraphSnapshot snapshot) {
    if (!snapshots_.empty() && snapshot.num_vertices() != num_vertices()) {
        throw std::invalid_argument("GraphSeries: snapshots must share one vertex count");
    }
    snapshots_.push_back(std::move(snapshot));
}

VertexMask neighborhood(const GraphSnapshot& g, VertexId v, int k) {
    if (k < 0) throw std::invalid_argument("neighborhood: k must be nonnegative");
    check_in_range(g.num_vertices(), v, "neighborhood");

    VertexMask visited(g.num_vertices());
    visited.set(v);
    if (k == 0) return visited;

    // Breadth-first expansion over bit rows, one OR pass per depth level.
    VertexMask frontier = visited;
    const std::size_t words = g.words_per_row();
    std::vector<std::uint64_t> next(words);
    for (int depth = 0; depth < k; ++depth) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t w = frontier.words()[i];
            while (w) {
                int bit = std::countr_zero(w);
                w &= w - 1;
                auto row = g.row(static_cast<VertexId>(i * 64 + bit));
                for (std::size_t j = 0; j < words; ++j) next[j] |= row[j];
            }
        }
        bool grew = false;
        for (std::size_t j = 0; j < words; ++j) {
            std::uint64_t fresh = next[j] & ~visited.words()[j];
            frontier.words()[j] = fresh;
            visited.words()[j] |= fresh;
            grew = grew || fresh;
        }
        if (!grew) break;
    }
    return visited;
}

std::int64_t induced_edge_count(const GraphSnapshot& g, const VertexMask& vset) {
    if (vset.ground_size() != g.num_vertices()) {
        throw std::invalid_argument("induced_edge_count: mask width must equal vertex count");
    }
    const std::size_t words = g.words_per_row();
    std::int64_t twice = 0;
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t w = vset.words()[i];
        while (w) {
            int bit = std::countr_zero(w);
            w &= w - 1;
            auto row = g.row(static_cast<VertexId>(i * 64 + bit));
            for (std::size_t j = 0; j < words; ++j) {
                twice += std::popcount(row[j] & vset.words()[j]);
            }
        }
    }
    return twice / 2;
}

std::vector<std::int64_t> induced_edge_count_multi(
    std::span<const GraphSnapshot* const> targets, const VertexMask& vset) {
    std::vector<std::int64_t> twice(targets.size(), 0);
    if (targets.empty()) return twice;
    const std::size_t words = targets[0]->words_per_row();
    for (const GraphSnapshot* g : targets) {
        if (g->num_vertices() != vset.ground_size()) {
            throw std::invalid_argument(
                "induced_edge_count_multi: mask width must equal vertex count");
        }
    }
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t w = vset.words()[i];
        while (w) {
            int bit = std::countr_zero(w);
            w &= w - 1;
            const auto v = static_cast<VertexId>(i * 64 + bit);
            for (std::size_t s = 0; s < targets.size(); ++s) {
                auto row = targets[s]->row(v);
                std::int64_t acc = 0;
                for (std::size_t j = 0; j < words; ++j) {
                    acc += std::popcount(row[j] & vset.words()[j]);
                }
                twice[s] += acc;
            }
        }
    }
    for (auto& t : twice) t /= 2;
    return twice;
}

GraphSnapshot intersect(const GraphSnapshot& g, const GraphSnapshot& h) {
    if (g.num_vertices() != h.num_vertices()) {
        throw std::invalid_argument("intersect: vertex counts differ");
    }
    GraphSnapshot out(g.num_vertices());
    const std::size_t n = g.num_vertices();
    const std::size_t words = g.words_per_row();
    for (std::size_t v = 0; v < n; ++v) {
        auto gr = g.row(static_cast<VertexId>(v));
        auto hr = h.row(static_cast<VertexId>(v));
        for (std::size_t j = 0; j < words; ++j) {
            std::uint64_t both = gr[j] & hr[j];
            std::uint64_t w = both;
            while (w) {
                int bit = std::countr_zero(w);
                w &= w - 1;
                auto u = static_cast<VertexId>(j * 64 + bit);
                if (u > static_cast<VertexId>(v)) out.add_edge(static_cast<VertexId>(v), u);
            }
        }
    }
    return out;
}

std::int64_t degree(const GraphSnapshot& g, VertexId v) {
    auto row = g.row(v);  // row() performs the range check
    std::int64_t total = 0;
    for (std::uint64_t w : row) total += std::popcount(w);
    return total;
}

}  // namespace graphscan
