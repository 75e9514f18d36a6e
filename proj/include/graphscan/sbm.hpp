#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

using ProbMatrix = std::vector<std::vector<double>>;

// Sentinel change time for a series that never switches to the alternative.
inline constexpr std::size_t kNeverChanges = std::numeric_limits<std::size_t>::max();

/**
 * Two-regime stochastic block model over a fixed contiguous block layout.
 * Snapshot t is drawn with edge probabilities p0 while t < t_star and with
 * pa from t_star on; block memberships never change.
 */
struct SbmSpec {
    std::vector<std::size_t> block_sizes;
    ProbMatrix p0;
    ProbMatrix pa;
    std::size_t t_star = kNeverChanges;
    std::size_t series_len = 0;
    // Relabel vertices by a seed-derived permutation, shared by every
    // snapshot. Off by default; block statistics do not depend on it.
    bool permute_labels = false;
};

std::size_t vertex_count(const SbmSpec& spec);

// Throws std::invalid_argument naming the offending entry when the spec is
// malformed: non-square or asymmetric matrices, probabilities outside [0,1],
// or empty/zero block sizes.
void validate(const SbmSpec& spec);

// One snapshot with independent Bernoulli(probs[i][j]) edges between blocks
// i and j. Vertices 0..block_sizes[0]-1 form the first block, the next
// block_sizes[1] the second, and so on.
GraphSnapshot sample_sbm(const ProbMatrix& probs,
                         const std::vector<std::size_t>& block_sizes,
                         std::uint64_t seed);

// Independent snapshots, one RNG stream per time index derived from
// (seed, t), so a given snapshot does not depend on the series length.
GraphSeries sample_series(const SbmSpec& spec, std::uint64_t seed);

// Convenience constructor for the recurring B-block design: every
// off-diagonal probability is p, the null diagonal reads
// (p, h[0], ..., h[B-3], p), and the alternative raises the last diagonal
// entry to p + delta. h must have exactly B-2 entries.
SbmSpec planted_anomaly_spec(std::vector<std::size_t> block_sizes,
                             double p,
                             const std::vector<double>& h,
                             double delta,
                             std::size_t t_star,
                             std::size_t series_len);

}  // namespace graphscan
