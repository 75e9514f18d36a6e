#include "graphscan/sbm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fmt/format.h"
#include "graphscan/rng.hpp"

namespace graphscan {

namespace {

void validate_matrix(const ProbMatrix& m, std::size_t blocks, const char* name) {
    if (m.size() != blocks) {
        throw std::invalid_argument(
            fmt::format("{} has {} rows, expected {}", name, m.size(), blocks));
    }
    for (std::size_t i = 0; i < blocks; ++i) {
        if (m[i].size() != blocks) {
            throw std::invalid_argument(fmt::format(
                "{} row {} has {} entries, expected {}", name, i, m[i].size(), blocks));
        }
        for (std::size_t j = 0; j < blocks; ++j) {
            double v = m[i][j];
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument(fmt::format(
                    "{}[{}][{}] = {} is not a probability", name, i, j, v));
            }
        }
    }
    for (std::size_t i = 0; i < blocks; ++i) {
        for (std::size_t j = i + 1; j < blocks; ++j) {
            if (m[i][j] != m[j][i]) {
                throw std::invalid_argument(fmt::format(
                    "{} is asymmetric at [{}][{}]: {} vs {}", name, i, j, m[i][j],
                    m[j][i]));
            }
        }
    }
}

void validate_blocks(const std::vector<std::size_t>& block_sizes) {
    if (block_sizes.empty()) {
        throw std::invalid_argument("block_sizes is empty");
    }
    std::size_t total = 0;
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        if (block_sizes[i] == 0) {
            throw std::invalid_argument(fmt::format("block_sizes[{}] is zero", i));
        }
        total += block_sizes[i];
    }
    if (total > std::size_t(std::numeric_limits<VertexId>::max())) {
        throw std::invalid_argument(
            fmt::format("{} vertices exceed the vertex id range", total));
    }
}

std::vector<std::size_t> block_of_vertex(const std::vector<std::size_t>& block_sizes,
                                         std::size_t n) {
    std::vector<std::size_t> block(n);
    std::size_t v = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        for (std::size_t i = 0; i < block_sizes[b]; ++i) block[v++] = b;
    }
    return block;
}

GraphSnapshot sample_with_rng(const ProbMatrix& probs,
                              const std::vector<std::size_t>& block_sizes,
                              Rng& rng) {
    std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(),
                                    std::size_t{0});
    auto block = block_of_vertex(block_sizes, n);
    GraphSnapshot g(n);
    for (std::size_t u = 0; u + 1 < n; ++u) {
        const auto& row = probs[block[u]];
        for (std::size_t v = u + 1; v < n; ++v) {
            if (unit_double(rng) < row[block[v]]) {
                g.add_edge(VertexId(u), VertexId(v));
            }
        }
    }
    return g;
}

GraphSnapshot relabel(const GraphSnapshot& g, const std::vector<VertexId>& perm) {
    GraphSnapshot out(g.num_vertices());
    for (VertexId u = 0; u < VertexId(g.num_vertices()); ++u) {
        for (VertexId v = u + 1; v < VertexId(g.num_vertices()); ++v) {
            if (g.has_edge(u, v)) out.add_edge(perm[u], perm[v]);
        }
    }
    return out;
}

}  // namespace

std::size_t vertex_count(const SbmSpec& spec) {
    return std::accumulate(spec.block_sizes.begin(), spec.block_sizes.end(),
                           std::size_t{0});
}

void validate(const SbmSpec& spec) {
    validate_blocks(spec.block_sizes);
    validate_matrix(spec.p0, spec.block_sizes.size(), "p0");
    validate_matrix(spec.pa, spec.block_sizes.size(), "pa");
}

GraphSnapshot sample_sbm(const ProbMatrix& probs,
                         const std::vector<std::size_t>& block_sizes,
                         std::uint64_t seed) {
    validate_blocks(block_sizes);
    validate_matrix(probs, block_sizes.size(), "probs");
    Rng rng(seed);
    return sample_with_rng(probs, block_sizes, rng);
}

GraphSeries sample_series(const SbmSpec& spec, std::uint64_t seed) {
    validate(spec);
    std::vector<VertexId> perm;
    if (spec.permute_labels) {
        perm.resize(vertex_count(spec));
        std::iota(perm.begin(), perm.end(), VertexId(0));
        Rng rng(derive_seed(seed, std::numeric_limits<std::uint64_t>::max()));
        std::shuffle(perm.begin(), perm.end(), rng);
    }
    GraphSeries series;
    for (std::size_t t = 0; t < spec.series_len; ++t) {
        const ProbMatrix& probs = t < spec.t_star ? spec.p0 : spec.pa;
        Rng rng(derive_seed(seed, t));
        GraphSnapshot g = sample_with_rng(probs, spec.block_sizes, rng);
        series.push_back(spec.permute_labels ? relabel(g, perm) : std::move(g));
    }
    return series;
}

SbmSpec planted_anomaly_spec(std::vector<std::size_t> block_sizes,
                             double p,
                             const std::vector<double>& h,
                             double delta,
                             std::size_t t_star,
                             std::size_t series_len) {
    std::size_t blocks = block_sizes.size();
    if (blocks < 2) {
        throw std::invalid_argument("planted anomaly design needs at least 2 blocks");
    }
    if (h.size() != blocks - 2) {
        throw std::invalid_argument(fmt::format(
            "expected {} interior block probabilities, got {}", blocks - 2, h.size()));
    }
    SbmSpec spec;
    spec.block_sizes = std::move(block_sizes);
    spec.p0.assign(blocks, std::vector<double>(blocks, p));
    for (std::size_t i = 0; i + 2 < blocks; ++i) spec.p0[i + 1][i + 1] = h[i];
    spec.pa = spec.p0;
    spec.pa[blocks - 1][blocks - 1] = p + delta;
    spec.t_star = t_star;
    spec.series_len = series_len;
    validate(spec);
    return spec;
}

}  // namespace graphscan
