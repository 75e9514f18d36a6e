#include "graphscan/rdpg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fmt/format.h"
#include "graphscan/rng.hpp"

namespace graphscan {

namespace {

constexpr double kSimplexSlack = 1e-9;

// Dirichlet draw via normalized Gamma variates. The distribution lives on k
// coordinates that may sum to less than 1, so a (k+1)-th slack coordinate
// with shape r*(1 - sum(alpha)) + 1 absorbs the remaining mass and is
// dropped after normalization.
std::vector<double> dirichlet_position(const std::vector<double>& alpha,
                                       double r,
                                       Rng& rng) {
    std::size_t k = alpha.size();
    double mass = 0.0;
    for (double a : alpha) mass += a;
    std::vector<double> draw(k + 1);
    double total = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
        double shape = j < k ? r * alpha[j] + 1.0 : r * std::max(0.0, 1.0 - mass) + 1.0;
        std::gamma_distribution<double> gamma(shape, 1.0);
        draw[j] = gamma(rng);
        total += draw[j];
    }
    draw.resize(k);
    for (double& x : draw) x /= total;
    return draw;
}

std::vector<std::vector<double>> positions_into(const RdpgSpec& spec, Rng& rng) {
    std::vector<std::vector<double>> positions;
    positions.reserve(spec.locations.size());
    for (std::size_t v = 0; v < spec.locations.size(); ++v) {
        positions.push_back(
            dirichlet_position(spec.locations[v], spec.concentrations[v], rng));
    }
    return positions;
}

double edge_probability(const std::vector<double>& x, const std::vector<double>& y) {
    double p = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) p += x[j] * y[j];
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::logic_error(
            fmt::format("inner product {} escaped [0,1]; positions left the simplex", p));
    }
    return p;
}

}  // namespace

void validate(const RdpgSpec& spec) {
    if (spec.k == 0) {
        throw std::invalid_argument("latent dimension k must be positive");
    }
    if (spec.locations.empty()) {
        throw std::invalid_argument("locations is empty");
    }
    if (spec.concentrations.size() != spec.locations.size()) {
        throw std::invalid_argument(
            fmt::format("{} locations but {} concentrations", spec.locations.size(),
                        spec.concentrations.size()));
    }
    for (std::size_t v = 0; v < spec.locations.size(); ++v) {
        const auto& alpha = spec.locations[v];
        if (alpha.size() != spec.k) {
            throw std::invalid_argument(fmt::format(
                "locations[{}] has {} coordinates, expected {}", v, alpha.size(),
                spec.k));
        }
        double mass = 0.0;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (!(alpha[j] >= 0.0)) {
                throw std::invalid_argument(fmt::format(
                    "locations[{}][{}] = {} is negative", v, j, alpha[j]));
            }
            mass += alpha[j];
        }
        if (mass > 1.0 + kSimplexSlack) {
            throw std::invalid_argument(fmt::format(
                "locations[{}] sums to {}, outside the unit simplex", v, mass));
        }
        if (!(spec.concentrations[v] >= 0.0)) {
            throw std::invalid_argument(fmt::format(
                "concentrations[{}] = {} is negative", v, spec.concentrations[v]));
        }
    }
}

std::vector<std::vector<double>> rdpg_positions(const RdpgSpec& spec,
                                                std::size_t t,
                                                std::uint64_t seed) {
    validate(spec);
    Rng rng(derive_seed(seed, t));
    return positions_into(spec, rng);
}

GraphSeries sample_rdpg_series(const RdpgSpec& spec, std::uint64_t seed) {
    validate(spec);
    std::size_t n = spec.locations.size();
    GraphSeries series;
    for (std::size_t t = 0; t < spec.series_len; ++t) {
        Rng rng(derive_seed(seed, t));
        auto positions = positions_into(spec, rng);
        GraphSnapshot g(n);
        for (std::size_t u = 0; u + 1 < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (unit_double(rng) < edge_probability(positions[u], positions[v])) {
                    g.add_edge(VertexId(u), VertexId(v));
                }
            }
        }
        series.push_back(std::move(g));
    }
    return series;
}

}  // namespace graphscan
