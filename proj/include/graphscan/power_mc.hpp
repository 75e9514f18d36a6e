#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "graphscan/scan.hpp"
#include "graphscan/sbm.hpp"

namespace graphscan {

/**
 * Result of a Monte Carlo power estimate at significance level alpha. beta is
 * the fraction of alternative draws strictly above critical_value, which is
 * the empirical (1 - alpha) quantile of the null draws.
 */
struct PowerEstimate {
    double beta = 0.0;
    int replicates = 0;
    double std_error = 0.0;
    double critical_value = 0.0;
    double alpha = 0.0;
};

// Produces one independent series per replicate from the given seed. The
// change, if any, must sit at the t_star passed alongside the sampler.
using SeriesSampler = std::function<GraphSeries(std::uint64_t replicate_seed)>;

/**
 * Monte Carlo power of the scan statistic against an arbitrary series
 * sampler. Each replicate draws one series and records S at t_star - 1 (the
 * null draw, before the change) and at t_star (the alternative draw). The
 * critical value is the empirical (1 - alpha) quantile of the null draws with
 * linear interpolation between order statistics; beta counts strict
 * exceedances only. Identical inputs give identical results regardless of
 * the thread count.
 */
PowerEstimate estimate_power_with(const SeriesSampler& sampler, std::size_t t_star,
                                  const ScanConfig& cfg, double alpha, int replicates,
                                  std::uint64_t seed, int threads = 1);

// estimate_power_with driven by a block model spec with a change at
// spec.t_star. Requires t_star >= tau + ell + 1 so the null scan has full
// history, series_len >= t_star + 1, and at least 100 replicates.
PowerEstimate estimate_power(const SbmSpec& spec, const ScanConfig& cfg, double alpha,
                             int replicates, std::uint64_t seed, int threads = 1);

/**
 * Power over a (tau, ell) grid. grid[i][j] is the estimate for
 * (tau_values[i], ell_values[j]); best_tau_ell holds the parameter values
 * (not indices) of the grid argmax, ties resolved to the lexicographically
 * smallest (tau, ell) pair.
 */
struct SweepResult {
    std::vector<std::size_t> tau_values;
    std::vector<std::size_t> ell_values;
    std::vector<std::vector<PowerEstimate>> grid;
    double best_beta = 0.0;
    std::pair<std::size_t, std::size_t> best_tau_ell{0, 0};
};

// Estimates power for every (tau, ell) cell, sharing the sampled series
// across cells within a replicate so cell-to-cell differences are not
// swamped by independent sampling noise.
SweepResult sweep_tau_ell(const SbmSpec& spec, int k, StatKind stat,
                          const std::vector<std::size_t>& tau_range,
                          const std::vector<std::size_t>& ell_range, double alpha,
                          int replicates, std::uint64_t seed, int threads = 1);

struct TheoryMcComparison {
    double beta_mc = 0.0;
    double beta_theory = 0.0;
    double gap = 0.0;
    PowerEstimate mc;
};

// Monte Carlo power next to the large-sample approximation. Only configs the
// approximation covers are accepted: tau = 1, ell = 0, k in {0, 1}.
TheoryMcComparison compare_theory_mc(const SbmSpec& spec, const ScanConfig& cfg,
                                     double alpha, int replicates, std::uint64_t seed,
                                     int threads = 1);

}  // namespace graphscan
