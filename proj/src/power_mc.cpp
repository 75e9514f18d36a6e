#include "graphscan/power_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fmt/format.h"
#include "graphscan/limit_theory.hpp"
#include "graphscan/rng.hpp"

namespace graphscan {

namespace {

void validate_estimate_inputs(std::size_t t_star, const ScanConfig& cfg, double alpha,
                              int replicates) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument(
            fmt::format("alpha = {} is not in the open interval (0, 1)", alpha));
    }
    if (replicates < 100) {
        throw std::invalid_argument(fmt::format(
            "{} replicates is below the minimum of 100", replicates));
    }
    if (t_star < cfg.tau + cfg.ell + 1) {
        throw std::invalid_argument(fmt::format(
            "change time {} leaves no full-history null scan before it (needs "
            "t_star >= tau + ell + 1 = {})",
            t_star, cfg.tau + cfg.ell + 1));
    }
}

void require_change_point(const SbmSpec& spec) {
    validate(spec);
    if (spec.t_star == kNeverChanges) {
        throw std::invalid_argument("spec has no change point (t_star is unset)");
    }
    if (spec.series_len < spec.t_star + 1) {
        throw std::invalid_argument(fmt::format(
            "series length {} does not reach the change time {}", spec.series_len,
            spec.t_star));
    }
}

// Runs body(r) for r in [0, replicates). Work is handed out through a shared
// counter; each call writes only its own output slot, so the aggregate is
// independent of the thread count and schedule. The first exception thrown by
// any replicate is rethrown on the calling thread.
template <typename Body>
void run_replicates(int replicates, int threads, const Body& body) {
    threads = std::clamp(threads, 1, replicates);
    if (threads == 1) {
        for (int r = 0; r < replicates; ++r) body(r);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (!stop.load(std::memory_order_relaxed)) {
            const int r = next.fetch_add(1, std::memory_order_relaxed);
            if (r >= replicates) break;
            try {
                body(r);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

// Empirical quantile with linear interpolation between order statistics
// (the same convention as R's default, type 7).
double quantile_type7(std::vector<double> xs, double p) {
    std::sort(xs.begin(), xs.end());
    const double h = p * (static_cast<double>(xs.size()) - 1.0);
    const auto lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, xs.size() - 1);
    return xs[lo] + (h - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

PowerEstimate tally(const std::vector<double>& null_draws,
                    const std::vector<double>& alt_draws, double alpha) {
    const auto replicates = static_cast<int>(null_draws.size());
    const double critical = quantile_type7(null_draws, 1.0 - alpha);
    int exceed = 0;
    for (double s : alt_draws) {
        if (s > critical) ++exceed;
    }
    const double beta = static_cast<double>(exceed) / static_cast<double>(replicates);
    return PowerEstimate{beta, replicates,
                         std::sqrt(beta * (1.0 - beta) / static_cast<double>(replicates)),
                         critical, alpha};
}

}  // namespace

PowerEstimate estimate_power_with(const SeriesSampler& sampler, std::size_t t_star,
                                  const ScanConfig& cfg, double alpha, int replicates,
                                  std::uint64_t seed, int threads) {
    validate_estimate_inputs(t_star, cfg, alpha, replicates);
    std::vector<double> null_draws(static_cast<std::size_t>(replicates));
    std::vector<double> alt_draws(static_cast<std::size_t>(replicates));
    run_replicates(replicates, threads, [&](int r) {
        const GraphSeries series = sampler(derive_seed(seed, static_cast<std::uint64_t>(r)));
        if (series.length() < t_star + 1) {
            throw std::invalid_argument(fmt::format(
                "sampled series of length {} does not reach the change time {}",
                series.length(), t_star));
        }
        const std::size_t base = t_star - 1 - cfg.ell;
        const auto m_values = m_stat_range(series, base, t_star + 1, cfg);
        null_draws[static_cast<std::size_t>(r)] =
            scan_from_m(m_values, base, t_star - 1, cfg).value;
        alt_draws[static_cast<std::size_t>(r)] =
            scan_from_m(m_values, base, t_star, cfg).value;
    });
    return tally(null_draws, alt_draws, alpha);
}

PowerEstimate estimate_power(const SbmSpec& spec, const ScanConfig& cfg, double alpha,
                             int replicates, std::uint64_t seed, int threads) {
    require_change_point(spec);
    return estimate_power_with(
        [&spec](std::uint64_t replicate_seed) { return sample_series(spec, replicate_seed); },
        spec.t_star, cfg, alpha, replicates, seed, threads);
}

SweepResult sweep_tau_ell(const SbmSpec& spec, int k, StatKind stat,
                          const std::vector<std::size_t>& tau_range,
                          const std::vector<std::size_t>& ell_range, double alpha,
                          int replicates, std::uint64_t seed, int threads) {
    require_change_point(spec);
    if (tau_range.empty() || ell_range.empty()) {
        throw std::invalid_argument("sweep_tau_ell: empty tau or ell range");
    }
    const std::size_t max_tau = *std::max_element(tau_range.begin(), tau_range.end());
    const std::size_t max_ell = *std::max_element(ell_range.begin(), ell_range.end());
    validate_estimate_inputs(spec.t_star, ScanConfig{max_tau, max_ell, k, stat, 1.0}, alpha,
                             replicates);

    const std::size_t nt = tau_range.size();
    const std::size_t ne = ell_range.size();
    const auto reps = static_cast<std::size_t>(replicates);
    // Draws laid out cell-major: slot (ti * ne + ei) * reps + r.
    std::vector<double> null_draws(nt * ne * reps);
    std::vector<double> alt_draws(nt * ne * reps);
    const std::size_t base = spec.t_star - 1 - max_ell;

    run_replicates(replicates, threads, [&](int r) {
        const GraphSeries series =
            sample_series(spec, derive_seed(seed, static_cast<std::uint64_t>(r)));
        for (std::size_t ti = 0; ti < nt; ++ti) {
            ScanConfig cfg{tau_range[ti], 0, k, stat, 1.0};
            const auto m_values = m_stat_range(series, base, spec.t_star + 1, cfg);
            for (std::size_t ei = 0; ei < ne; ++ei) {
                cfg.ell = ell_range[ei];
                const std::size_t slot = (ti * ne + ei) * reps + static_cast<std::size_t>(r);
                null_draws[slot] = scan_from_m(m_values, base, spec.t_star - 1, cfg).value;
                alt_draws[slot] = scan_from_m(m_values, base, spec.t_star, cfg).value;
            }
        }
    });

    SweepResult result;
    result.tau_values = tau_range;
    result.ell_values = ell_range;
    result.grid.resize(nt);
    bool first = true;
    for (std::size_t ti = 0; ti < nt; ++ti) {
        result.grid[ti].resize(ne);
        for (std::size_t ei = 0; ei < ne; ++ei) {
            const auto offset = static_cast<std::ptrdiff_t>((ti * ne + ei) * reps);
            const std::vector<double> cell_null(null_draws.begin() + offset,
                                                null_draws.begin() + offset + replicates);
            const std::vector<double> cell_alt(alt_draws.begin() + offset,
                                               alt_draws.begin() + offset + replicates);
            const auto cell = tally(cell_null, cell_alt, alpha);
            result.grid[ti][ei] = cell;
            const std::pair<std::size_t, std::size_t> at{tau_range[ti], ell_range[ei]};
            if (first || cell.beta > result.best_beta ||
                (cell.beta == result.best_beta && at < result.best_tau_ell)) {
                result.best_beta = cell.beta;
                result.best_tau_ell = at;
                first = false;
            }
        }
    }
    return result;
}

TheoryMcComparison compare_theory_mc(const SbmSpec& spec, const ScanConfig& cfg,
                                     double alpha, int replicates, std::uint64_t seed,
                                     int threads) {
    if (cfg.tau != 1 || cfg.ell != 0 || (cfg.k != 0 && cfg.k != 1)) {
        throw std::domain_error(fmt::format(
            "compare_theory_mc: no large-sample approximation for tau = {}, ell = {}, "
            "k = {}; supported configs have tau = 1, ell = 0, k in {{0, 1}}",
            cfg.tau, cfg.ell, cfg.k));
    }
    const LimitModel model =
        cfg.k == 0 ? limit_model_k0(spec, cfg.stat) : limit_model_k1(spec, cfg.stat);
    const double beta_theory = power_large_sample(model, alpha);
    const PowerEstimate mc = estimate_power(spec, cfg, alpha, replicates, seed, threads);
    return TheoryMcComparison{mc.beta, beta_theory, std::abs(mc.beta - beta_theory), mc};
}

}  // namespace graphscan
