#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "graphscan/graph.hpp"
#include "graphscan/locality.hpp"

namespace graphscan {

/**
 * Full parameterization of the scan statistic S_{tau,ell,k}(t; stat):
 *   tau  - vertex-normalization window (0 = raw, 1 = center, >1 = studentize)
 *   ell  - temporal-normalization window over the max statistic M
 *   k    - hop radius of the locality statistic
 *   stat - which locality statistic supplies J_{t,t'} (Psi or Phi)
 * Standard deviations are clamped below at sigma_clamp before division so a
 * constant history cannot divide by zero.
 */
struct ScanConfig {
    std::size_t tau = 0;
    std::size_t ell = 0;
    int k = 0;
    StatKind stat = StatKind::Psi;
    double sigma_clamp = 1.0;
};

struct ScanValue {
    std::size_t t = 0;
    double value = 0.0;
    VertexId argmax_vertex = 0;
};

// Vertex-normalized locality statistic J-tilde of one vertex at time t.
// For stat=Psi the lagged values are Psi_{t-s;k}(v); for stat=Phi they are
// Phi_{t,t-s;k}(v), with the neighborhood fixed at time t.
double vertex_normalized(const GraphSeries& series, std::size_t t, const ScanConfig& cfg,
                         VertexId v);

// Vertex-normalized values for all vertices at time t in one pass.
std::vector<double> vertex_normalized_all(const GraphSeries& series, std::size_t t,
                                          const ScanConfig& cfg);

// M_{tau,k}(t): maximum of vertex_normalized over all vertices, with the
// attaining vertex. Ties go to the smallest vertex id.
std::pair<double, VertexId> m_stat(const GraphSeries& series, std::size_t t,
                                   const ScanConfig& cfg);

// M values for every t in [t_begin, t_end). For stat=Psi the per-time raw
// vectors are computed once and shared across the lag windows.
std::vector<std::pair<double, VertexId>> m_stat_range(const GraphSeries& series,
                                                      std::size_t t_begin, std::size_t t_end,
                                                      const ScanConfig& cfg);

// The scan statistic S_{tau,ell,k}(t): M temporally normalized over its own
// lag window. argmax_vertex is the vertex attaining M_{tau,k}(t).
ScanValue scan_stat(const GraphSeries& series, std::size_t t, const ScanConfig& cfg);

// S_{tau,ell,k}(t) evaluated against precomputed M values, where m_values[i]
// is the M statistic at time t_begin + i. Lets callers that need S at several
// nearby times share one m_stat_range pass instead of recomputing the
// overlapping lag windows.
ScanValue scan_from_m(const std::vector<std::pair<double, VertexId>>& m_values,
                      std::size_t t_begin, std::size_t t, const ScanConfig& cfg);

// scan_stat at every admissible t, i.e. t in [tau+ell, len).
std::vector<ScanValue> scan_series(const GraphSeries& series, const ScanConfig& cfg);

}  // namespace graphscan
