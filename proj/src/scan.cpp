#include "graphscan/scan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace graphscan {

namespace {

void require_history(std::size_t t, std::size_t needed, const char* what) {
    if (t < needed) {
        std::ostringstream msg;
        msg << what << ": time " << t << " has insufficient history (needs t >= " << needed
            << ")";
        throw std::invalid_argument(msg.str());
    }
}

// Center / studentize one value against its lag window. Shared by the vertex
// and temporal normalization steps, which use the same three-case rule.
double normalize_against(double current, const std::vector<double>& lags, double clamp) {
    if (lags.empty()) return current;
    if (lags.size() == 1) return current - lags[0];
    double mean = 0.0;
    for (double x : lags) mean += x;
    mean /= static_cast<double>(lags.size());
    double ss = 0.0;
    for (double x : lags) ss += (x - mean) * (x - mean);
    double sd = std::sqrt(ss / static_cast<double>(lags.size() - 1));
    return (current - mean) / std::max(sd, clamp);
}

// Raw J_{t,t-s;k} vectors for s = 0..tau: for Psi each lag uses its own
// time's neighborhoods, for Phi every lag shares the time-t neighborhoods.
std::vector<std::vector<std::int64_t>> lag_profile(const GraphSeries& series, std::size_t t,
                                                   const ScanConfig& cfg) {
    std::vector<std::size_t> targets(cfg.tau + 1);
    for (std::size_t s = 0; s <= cfg.tau; ++s) targets[s] = t - s;
    if (cfg.stat == StatKind::Phi) {
        return locality_profile(series, t, targets, cfg.k);
    }
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(targets.size());
    for (std::size_t s : targets) out.push_back(psi_all(series, s, cfg.k));
    return out;
}

std::vector<double> normalized_from_profile(
    const std::vector<std::vector<std::int64_t>>& profile, const ScanConfig& cfg) {
    const std::size_t n = profile[0].size();
    std::vector<double> out(n);
    std::vector<double> lags(cfg.tau);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t s = 1; s <= cfg.tau; ++s) {
            lags[s - 1] = static_cast<double>(profile[s][v]);
        }
        out[v] = normalize_against(static_cast<double>(profile[0][v]), lags, cfg.sigma_clamp);
    }
    return out;
}

std::pair<double, VertexId> max_with_argmin_index(const std::vector<double>& values) {
    std::size_t best = 0;
    for (std::size_t v = 1; v < values.size(); ++v) {
        if (values[v] > values[best]) best = v;
    }
    return {values[best], static_cast<VertexId>(best)};
}

double temporal_value(const std::vector<std::pair<double, VertexId>>& m_values,
                      std::size_t idx, const ScanConfig& cfg) {
    std::vector<double> lags(cfg.ell);
    for (std::size_t j = 1; j <= cfg.ell; ++j) lags[j - 1] = m_values[idx - j].first;
    return normalize_against(m_values[idx].first, lags, cfg.sigma_clamp);
}

}  // namespace

double vertex_normalized(const GraphSeries& series, std::size_t t, const ScanConfig& cfg,
                         VertexId v) {
    require_history(t, cfg.tau, "vertex_normalized");
    if (t >= series.length()) throw std::out_of_range("vertex_normalized: t out of range");

    std::vector<double> lags(cfg.tau);
    double current;
    if (cfg.stat == StatKind::Psi) {
        current = static_cast<double>(psi(series, t, cfg.k, v));
        for (std::size_t s = 1; s <= cfg.tau; ++s) {
            lags[s - 1] = static_cast<double>(psi(series, t - s, cfg.k, v));
        }
    } else {
        current = static_cast<double>(phi(series, t, t, cfg.k, v));
        for (std::size_t s = 1; s <= cfg.tau; ++s) {
            lags[s - 1] = static_cast<double>(phi(series, t, t - s, cfg.k, v));
        }
    }
    return normalize_against(current, lags, cfg.sigma_clamp);
}

std::vector<double> vertex_normalized_all(const GraphSeries& series, std::size_t t,
                                          const ScanConfig& cfg) {
    require_history(t, cfg.tau, "vertex_normalized_all");
    if (t >= series.length()) throw std::out_of_range("vertex_normalized_all: t out of range");
    return normalized_from_profile(lag_profile(series, t, cfg), cfg);
}

std::pair<double, VertexId> m_stat(const GraphSeries& series, std::size_t t,
                                   const ScanConfig& cfg) {
    if (series.num_vertices() == 0) throw std::invalid_argument("m_stat: empty series");
    return max_with_argmin_index(vertex_normalized_all(series, t, cfg));
}

std::vector<std::pair<double, VertexId>> m_stat_range(const GraphSeries& series,
                                                      std::size_t t_begin, std::size_t t_end,
                                                      const ScanConfig& cfg) {
    require_history(t_begin, cfg.tau, "m_stat_range");
    if (t_end > series.length()) throw std::out_of_range("m_stat_range: t_end out of range");
    std::vector<std::pair<double, VertexId>> out;
    if (t_begin >= t_end) return out;
    out.reserve(t_end - t_begin);

    if (cfg.stat == StatKind::Psi) {
        // Raw Psi vectors are time-indexed, so each is computed once and the
        // lag windows read from the cache.
        const std::size_t lo = t_begin - cfg.tau;
        std::vector<std::vector<std::int64_t>> cache;
        cache.reserve(t_end - lo);
        for (std::size_t s = lo; s < t_end; ++s) cache.push_back(psi_all(series, s, cfg.k));
        const std::size_t n = series.num_vertices();
        std::vector<double> values(n);
        std::vector<double> lags(cfg.tau);
        for (std::size_t t = t_begin; t < t_end; ++t) {
            const auto& current = cache[t - lo];
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t s = 1; s <= cfg.tau; ++s) {
                    lags[s - 1] = static_cast<double>(cache[t - s - lo][v]);
                }
                values[v] =
                    normalize_against(static_cast<double>(current[v]), lags, cfg.sigma_clamp);
            }
            out.push_back(max_with_argmin_index(values));
        }
        return out;
    }

    for (std::size_t t = t_begin; t < t_end; ++t) {
        out.push_back(max_with_argmin_index(
            normalized_from_profile(lag_profile(series, t, cfg), cfg)));
    }
    return out;
}

ScanValue scan_stat(const GraphSeries& series, std::size_t t, const ScanConfig& cfg) {
    require_history(t, cfg.tau + cfg.ell, "scan_stat");
    if (t >= series.length()) throw std::out_of_range("scan_stat: t out of range");
    auto m_values = m_stat_range(series, t - cfg.ell, t + 1, cfg);
    return ScanValue{t, temporal_value(m_values, cfg.ell, cfg), m_values[cfg.ell].second};
}

ScanValue scan_from_m(const std::vector<std::pair<double, VertexId>>& m_values,
                      std::size_t t_begin, std::size_t t, const ScanConfig& cfg) {
    if (t < t_begin + cfg.ell) {
        std::ostringstream msg;
        msg << "scan_from_m: time " << t << " has insufficient history (needs t >= "
            << t_begin + cfg.ell << ")";
        throw std::invalid_argument(msg.str());
    }
    if (t - t_begin >= m_values.size()) {
        throw std::out_of_range("scan_from_m: t outside the precomputed range");
    }
    const std::size_t idx = t - t_begin;
    return ScanValue{t, temporal_value(m_values, idx, cfg), m_values[idx].second};
}

std::vector<ScanValue> scan_series(const GraphSeries& series, const ScanConfig& cfg) {
    if (series.length() <= cfg.tau + cfg.ell) {
        std::ostringstream msg;
        msg << "scan_series: series length " << series.length()
            << " too short for tau+ell = " << cfg.tau + cfg.ell;
        throw std::invalid_argument(msg.str());
    }
    auto m_values = m_stat_range(series, cfg.tau, series.length(), cfg);
    std::vector<ScanValue> out;
    out.reserve(series.length() - cfg.tau - cfg.ell);
    for (std::size_t t = cfg.tau + cfg.ell; t < series.length(); ++t) {
        const std::size_t idx = t - cfg.tau;
        out.push_back(ScanValue{t, temporal_value(m_values, idx, cfg), m_values[idx].second});
    }
    return out;
}

}  // namespace graphscan
