#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

enum class StatKind { Psi, Phi };

// Edges of G_t induced by the closed k-hop neighborhood of v in G_t.
// k = 0 is the degree of v in G_t (the definitions diverge at k = 0; the
// neighborhood formula would give 0, so this is an explicit branch).
std::int64_t psi(const GraphSeries& series, std::size_t t, int k, VertexId v);

// Edges of G_{t_prime} induced by the closed k-hop neighborhood of v in G_t,
// defined for t_prime <= t. k = 0 is the degree of v in the intersection of
// G_t and G_{t_prime}.
std::int64_t phi(const GraphSeries& series, std::size_t t, std::size_t t_prime, int k,
                 VertexId v);

// Batch variants returning all n values in one pass.
std::vector<std::int64_t> psi_all(const GraphSeries& series, std::size_t t, int k);
std::vector<std::int64_t> phi_all(const GraphSeries& series, std::size_t t,
                                  std::size_t t_prime, int k);

// For each vertex, the time-t neighborhood mask evaluated against several
// target snapshots at once: result[s][v] = edges of snapshot targets[s]
// induced by N_k[v; G_t]. The masks are built once per vertex and shared
// across targets, which is what makes lagged Phi windows affordable.
// k = 0 applies the degree conventions (targets[s] == t gives the degree in
// G_t, otherwise the degree in the intersection with G_t).
std::vector<std::vector<std::int64_t>> locality_profile(const GraphSeries& series,
                                                        std::size_t t,
                                                        std::span<const std::size_t> targets,
                                                        int k);

}  // namespace graphscan
