#pragma once

#include <cstdint>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

/**
 * Random dot product graph with Dirichlet-distributed latent positions.
 * At each time step every vertex v draws a fresh position X_v from
 * Dirichlet(concentrations[v] * locations[v] + 1), restricted to the first
 * k coordinates, and each pair connects independently with probability
 * <X_u, X_v>. locations[v] must lie in the unit simplex: nonnegative
 * entries with sum at most 1. concentration 0 gives positions uniform on
 * the simplex; large concentrations pin positions to locations[v].
 */
struct RdpgSpec {
    std::size_t k = 0;
    std::vector<std::vector<double>> locations;
    std::vector<double> concentrations;
    std::size_t series_len = 0;
};

// Throws std::invalid_argument naming the offending vertex when a location
// leaves the simplex, a concentration is negative, or sizes disagree.
void validate(const RdpgSpec& spec);

// Latent positions used for snapshot t under this (spec, seed); one row of
// k coordinates per vertex. Exposed for diagnostics and tests.
std::vector<std::vector<double>> rdpg_positions(const RdpgSpec& spec,
                                                std::size_t t,
                                                std::uint64_t seed);

// Independent snapshots, one RNG stream per time index derived from
// (seed, t). Positions are redrawn every step; memberships implied by the
// locations stay fixed.
GraphSeries sample_rdpg_series(const RdpgSpec& spec, std::uint64_t seed);

}  // namespace graphscan
