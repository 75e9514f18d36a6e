#include "graphscan/limit_theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fmt/format.h"

namespace graphscan {

namespace {

void check_open_unit(double value, const char* name) {
    if (!(value > 0.0 && value < 1.0)) {
        throw std::invalid_argument(
            fmt::format("{} = {} must lie strictly inside (0,1)", name, value));
    }
}

// Within-block edge probability of block i (1-based) under each hypothesis.
double null_diag(const PlantedAnomalyForm& form, std::size_t i) {
    std::size_t blocks = form.block_sizes.size();
    return (i == 1 || i == blocks) ? form.p : form.h[i - 2];
}

double alt_diag(const PlantedAnomalyForm& form, std::size_t i) {
    return i == form.block_sizes.size() ? form.p + form.delta : null_diag(form, i);
}

std::pair<double, double> block_norm_constants(std::size_t index, std::size_t size) {
    if (size < 2) {
        throw std::invalid_argument(fmt::format(
            "block {} has {} vertices; the block-max limit needs at least 2", index,
            size));
    }
    return gumbel_norm_constants(size);
}

double gumbel_sum_log_cdf(const LimitModel& model, Hypothesis hyp, double x) {
    double total = 0.0;
    for (const auto& block : model.blocks) {
        const GumbelParams& g =
            hyp == Hypothesis::Null ? block.null_params : block.alt_params;
        total -= std::exp(-(x - g.mu) / g.gamma);
    }
    return total;
}

PowerRelation equals_alpha() { return {PowerRelation::Kind::EqualsAlpha, {}}; }
PowerRelation exceeds_alpha() { return {PowerRelation::Kind::ExceedsAlpha, {}}; }

}  // namespace

PlantedAnomalyForm planted_anomaly_form(const SbmSpec& spec) {
    validate(spec);
    std::size_t blocks = spec.block_sizes.size();
    std::size_t last = blocks - 1;
    double p = blocks >= 2 ? spec.p0[0][1] : spec.p0[0][0];
    check_open_unit(p, "off-diagonal probability p");
    for (std::size_t i = 0; i < blocks; ++i) {
        for (std::size_t j = i + 1; j < blocks; ++j) {
            if (spec.p0[i][j] != p) {
                throw std::invalid_argument(fmt::format(
                    "p0[{}][{}] = {} breaks the constant off-diagonal level {}", i, j,
                    spec.p0[i][j], p));
            }
        }
    }
    for (std::size_t i : {std::size_t{0}, last}) {
        if (spec.p0[i][i] != p) {
            throw std::invalid_argument(fmt::format(
                "p0[{0}][{0}] = {1} must equal the off-diagonal level {2}", i,
                spec.p0[i][i], p));
        }
    }
    for (std::size_t i = 0; i < blocks; ++i) {
        for (std::size_t j = i; j < blocks; ++j) {
            if (i == last && j == last) continue;
            if (spec.pa[i][j] != spec.p0[i][j]) {
                throw std::invalid_argument(fmt::format(
                    "pa[{}][{}] = {} differs from p0; only the last diagonal entry "
                    "may change",
                    i, j, spec.pa[i][j]));
            }
        }
    }
    PlantedAnomalyForm form;
    form.block_sizes = spec.block_sizes;
    form.p = p;
    for (std::size_t i = 1; i + 1 < blocks; ++i) form.h.push_back(spec.p0[i][i]);
    form.delta = spec.pa[last][last] - p;
    return form;
}

std::pair<double, double> gumbel_norm_constants(std::size_t m) {
    if (m < 2) {
        throw std::invalid_argument(
            fmt::format("norming constants need m >= 2, got {}", m));
    }
    double log_m = std::log(double(m));
    double root = std::sqrt(2.0 * log_m);
    double a = root * (1.0 - (std::log(log_m) + std::log(4.0 * std::numbers::pi)) /
                                 (4.0 * log_m));
    return {a, 1.0 / root};
}

LimitModel limit_model_k0(const SbmSpec& spec, StatKind stat) {
    auto form = planted_anomaly_form(spec);
    std::size_t blocks = form.block_sizes.size();
    double n = double(vertex_count(spec));
    double p = form.p;
    double pq = p * (1.0 - p);

    LimitModel model;
    model.stat = stat;
    model.k = 0;
    for (std::size_t i = 1; i <= blocks; ++i) {
        double ni = double(form.block_sizes[i - 1]);
        auto [a, b] = block_norm_constants(i, form.block_sizes[i - 1]);
        double d0 = null_diag(form, i);
        double da = alt_diag(form, i);
        BlockLimit block;
        block.index = i;
        block.size = form.block_sizes[i - 1];
        if (stat == StatKind::Psi) {
            // Variance of a one-lag degree difference: off-block pairs
            // contribute 2 p(1-p) each, within-block pairs d(1-d) from each
            // of the two snapshots' diagonals.
            auto c_of = [&](double d_now) {
                return 2.0 * (n - ni) / n +
                       (ni - 1.0) * (d_now * (1.0 - d_now) + d0 * (1.0 - d0)) /
                           (n * pq);
            };
            block.null_c = c_of(d0);
            block.alt_c = c_of(da);
            double s0 = std::sqrt(block.null_c * n * pq);
            double sa = std::sqrt(block.alt_c * n * pq);
            block.null_params = {a * s0, b * s0};
            block.alt_params = {a * sa + (i == blocks ? ni * form.delta : 0.0),
                                b * sa};
        } else {
            // The difference deg_t(v) - deg_{t,t-1}(v) counts neighbors
            // present now but not before: Bernoulli(d_now(1 - d_before)).
            double kappa = pq * (1.0 - pq);
            double q0 = d0 * (1.0 - d0);
            double qa = da * (1.0 - d0);
            block.null_c = (n - ni) / n + (ni - 1.0) * q0 * (1.0 - q0) / (n * kappa);
            block.alt_c = (n - ni) / n + (ni - 1.0) * qa * (1.0 - qa) / (n * kappa);
            double xi = (1 < i && i < blocks) ? ni * (q0 - pq) : 0.0;
            double s0 = std::sqrt(block.null_c * n * kappa);
            double sa = std::sqrt(block.alt_c * n * kappa);
            block.null_params = {a * s0 + n * pq + xi, b * s0};
            block.alt_params = {
                a * sa + n * pq + xi + (i == blocks ? ni * form.delta * (1.0 - p) : 0.0),
                b * sa};
        }
        model.blocks.push_back(block);
    }
    return model;
}

LimitModel limit_model_k1(const SbmSpec& spec, StatKind stat) {
    auto form = planted_anomaly_form(spec);
    std::size_t blocks = form.block_sizes.size();
    if (stat == StatKind::Psi && blocks != 3) {
        throw std::domain_error(fmt::format(
            "one-hop psi limit covers exactly 3 blocks, got {}", blocks));
    }
    if (stat == StatKind::Phi && blocks < 3) {
        throw std::domain_error(fmt::format(
            "one-hop phi limit needs at least 3 blocks, got {}", blocks));
    }
    double n = double(vertex_count(spec));
    double p = form.p;
    double delta = form.delta;
    double n_last = double(form.block_sizes[blocks - 1]);

    // Second-order mass created by the last block's density change; the
    // indicator picks the changed block's own density for its members.
    auto zeta = [&](std::size_t i) {
        bool changed = i == blocks;
        double pair_level = changed ? (p + delta) * (p + delta) : p * p;
        double edge_level = changed ? (p + delta) * (1.0 - p - delta) : p * (1.0 - p);
        return 0.5 * delta * (n_last * n_last * pair_level + n_last * edge_level);
    };

    LimitModel model;
    model.stat = stat;
    model.k = 1;
    if (stat == StatKind::Psi) {
        LimitModel base = limit_model_k0(spec, StatKind::Psi);
        double n2 = double(form.block_sizes[1]);
        double h = form.h[0];
        for (BlockLimit block : base.blocks) {
            std::size_t i = block.index;
            double kp = n * p * p + 1.0 + (i == 2 ? n2 * p * (h - p) : 0.0);
            double alt_scale = kp + (i == 3 ? n_last * p * delta / 2.0 : 0.0);
            block.null_params = {block.null_params.mu * kp,
                                 block.null_params.gamma * kp};
            block.alt_params = {block.alt_params.mu * alt_scale + zeta(i),
                                block.alt_params.gamma * alt_scale};
            model.blocks.push_back(block);
        }
        return model;
    }

    if (form.block_sizes[0] < 3) {
        throw std::invalid_argument(fmt::format(
            "block 1 has {} vertices; the one-hop variance needs at least 3",
            form.block_sizes[0]));
    }
    double pq = p * (1.0 - p);
    double eta = p * p * p * (1.0 - p);
    for (std::size_t i = 1; i <= blocks; ++i) {
        double ni = double(form.block_sizes[i - 1]);
        auto [a, b] = block_norm_constants(i, form.block_sizes[i - 1]);
        // Dominant variance term: edge indicators among the block-1 portion
        // of the neighborhood, m(m-1) p^3 (1-p) with m block-1 neighbors
        // excluding the center when it sits in block 1.
        double m = double(form.block_sizes[0]) - (i == 1 ? 1.0 : 0.0);
        double c = m * (m - 1.0) / (n * n);
        double s = std::sqrt(c * n * n * eta);
        double d0 = null_diag(form, i);
        double xi = (1 < i && i < blocks) ? ni * (d0 * (1.0 - d0) - pq) : 0.0;
        BlockLimit block;
        block.index = i;
        block.size = form.block_sizes[i - 1];
        block.null_c = c;
        block.alt_c = c;
        block.null_params = {a * s + n * pq + xi, b * s};
        block.alt_params = {block.null_params.mu +
                                (i == blocks ? n_last * delta * (1.0 - p) : 0.0) +
                                zeta(i),
                            block.null_params.gamma};
        model.blocks.push_back(block);
    }
    return model;
}

double max_gumbel_cdf(const LimitModel& model, Hypothesis hyp, double x) {
    if (model.blocks.empty()) {
        throw std::invalid_argument("limit model has no blocks");
    }
    return std::exp(gumbel_sum_log_cdf(model, hyp, x));
}

double null_quantile(const LimitModel& model, double prob) {
    check_open_unit(prob, "quantile probability");
    if (model.blocks.empty()) {
        throw std::invalid_argument("limit model has no blocks");
    }
    double lo = model.blocks[0].null_params.mu;
    double hi = lo;
    double widest = 0.0;
    for (const auto& block : model.blocks) {
        lo = std::min(lo, block.null_params.mu);
        hi = std::max(hi, block.null_params.mu);
        widest = std::max(widest, block.null_params.gamma);
    }
    lo -= 50.0 * widest;
    hi += 50.0 * widest;
    while (max_gumbel_cdf(model, Hypothesis::Null, lo) >= prob) lo -= (hi - lo);
    while (max_gumbel_cdf(model, Hypothesis::Null, hi) <= prob) hi += (hi - lo);
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 500; ++iter) {
        mid = 0.5 * (lo + hi);
        double f = max_gumbel_cdf(model, Hypothesis::Null, mid);
        if (std::abs(f - prob) < 1e-12) break;
        (f < prob ? lo : hi) = mid;
    }
    return mid;
}

double power_large_sample(const LimitModel& model, double alpha) {
    check_open_unit(alpha, "significance level alpha");
    double critical = null_quantile(model, 1.0 - alpha);
    return 1.0 - max_gumbel_cdf(model, Hypothesis::Alt, critical);
}

HeatmapResult heatmap_beta_diff(double p,
                                const std::vector<double>& h_values,
                                const std::vector<double>& q_values,
                                std::size_t n,
                                double alpha,
                                double sizing_constant) {
    check_open_unit(p, "off-diagonal probability p");
    check_open_unit(alpha, "significance level alpha");
    if (h_values.empty() || q_values.empty()) {
        throw std::invalid_argument("heatmap grid is empty");
    }
    for (double h : h_values) {
        if (!(h > p && h < 1.0)) {
            throw std::invalid_argument(
                fmt::format("h = {} outside the admissible range ({}, 1)", h, p));
        }
    }
    for (double q : q_values) {
        if (!(q > p && q < 1.0)) {
            throw std::invalid_argument(
                fmt::format("q = {} outside the admissible range ({}, 1)", q, p));
        }
    }
    if (!(sizing_constant > 0.0)) {
        throw std::invalid_argument(fmt::format(
            "sizing constant {} must be positive", sizing_constant));
    }
    auto m = std::size_t(std::ceil(sizing_constant *
                                   std::sqrt(double(n) * std::log(double(n)))));
    if (m < 2 || n < 2 * m + 2) {
        throw std::invalid_argument(fmt::format(
            "sizing constant {} gives anomaly blocks of {} vertices, which do not "
            "fit n = {}",
            sizing_constant, m, n));
    }
    HeatmapResult result;
    result.h_values = h_values;
    result.q_values = q_values;
    result.anomaly_block_size = m;
    for (double h : h_values) {
        std::vector<double> row_psi, row_phi, row_diff;
        for (double q : q_values) {
            auto spec = planted_anomaly_spec({n - 2 * m, m, m}, p, {h}, q - p, 1, 2);
            double beta_psi =
                power_large_sample(limit_model_k0(spec, StatKind::Psi), alpha);
            double beta_phi =
                power_large_sample(limit_model_k0(spec, StatKind::Phi), alpha);
            row_psi.push_back(beta_psi);
            row_phi.push_back(beta_phi);
            row_diff.push_back(beta_psi - beta_phi);
        }
        result.beta_psi.push_back(std::move(row_psi));
        result.beta_phi.push_back(std::move(row_phi));
        result.diff.push_back(std::move(row_diff));
    }
    return result;
}

RegimeVerdict classify_regime_k0(const RegimeOrders& orders, double h, double p) {
    check_open_unit(p, "off-diagonal probability p");
    check_open_unit(h, "interior block probability h");
    RegimeVerdict verdict;
    if (orders.n3_vs_sqrt_n == Growth::SmallO) {
        verdict.psi = equals_alpha();
        verdict.phi = equals_alpha();
        return verdict;
    }
    // Theta, Omega, and small-omega of sqrt(n) all imply Omega(sqrt(n)).
    verdict.psi = exceeds_alpha();
    if (!orders.n3_vs_n2.has_value()) {
        return verdict;
    }
    switch (*orders.n3_vs_n2) {
        case Growth::SmallO:
            verdict.phi = h + p < 1.0 ? equals_alpha() : exceeds_alpha();
            break;
        case Growth::SmallOmega:
            verdict.phi = exceeds_alpha();
            break;
        case Growth::Theta:
            if (orders.n3_vs_sqrt_n == Growth::Theta) {
                verdict.phi = exceeds_alpha();
            } else if (orders.n3_vs_sqrt_n == Growth::SmallOmega) {
                verdict.phi = {
                    PowerRelation::Kind::Conditional,
                    "beta_phi = alpha if lim n_2 (h(1-h) - p(1-p)) / "
                    "(n_3 delta (1-p)) > 1, beta_phi > alpha if the limit is <= 1"};
            } else {
                throw std::invalid_argument(
                    "n_3 = Theta(n_2) needs its order against sqrt(n) pinned to "
                    "Theta or small-omega");
            }
            break;
        case Growth::BigOmega:
            throw std::invalid_argument(
                "n_3 = Omega(n_2) does not select a case; pass Theta, small-o, or "
                "small-omega of n_2");
    }
    return verdict;
}

RegimeVerdictK1 classify_regime_k1(const RegimeOrders& orders) {
    RegimeVerdictK1 verdict;
    if (orders.n3_vs_sqrt_n == Growth::SmallO) {
        verdict.psi = equals_alpha();
        verdict.phi = equals_alpha();
    } else {
        verdict.psi = exceeds_alpha();
        verdict.phi = exceeds_alpha();
    }
    return verdict;
}

}  // namespace graphscan
