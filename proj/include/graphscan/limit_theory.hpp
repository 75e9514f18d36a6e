#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphscan/locality.hpp"
#include "graphscan/sbm.hpp"

namespace graphscan {

/**
 * Large-sample distribution of the scan statistic under a planted-anomaly
 * block design, for the single-centered cases (tau=1, ell=0) at hop radius
 * k=0 or k=1. Each block's maximum converges to a Gumbel law; the statistic
 * is the maximum over blocks, treated as asymptotically independent.
 */

struct GumbelParams {
    double mu = 0.0;
    double gamma = 0.0;
};

struct BlockLimit {
    std::size_t index = 0;  // 1-based block number
    std::size_t size = 0;
    GumbelParams null_params;
    GumbelParams alt_params;
    // Variance constants of the block's centered statistic, per hypothesis.
    double null_c = 0.0;
    double alt_c = 0.0;
};

struct LimitModel {
    StatKind stat = StatKind::Psi;
    int k = 0;
    std::vector<BlockLimit> blocks;
};

enum class Hypothesis { Null, Alt };

// Parameters recovered from a planted-anomaly matrix pair: constant
// off-diagonal p, null diagonal (p, h[0], ..., h[B-3], p), alternative
// differing only in the last diagonal entry p + delta.
struct PlantedAnomalyForm {
    std::vector<std::size_t> block_sizes;
    double p = 0.0;
    std::vector<double> h;
    double delta = 0.0;
};

// Throws std::invalid_argument naming the first entry that breaks the form,
// or when p lies outside (0,1).
PlantedAnomalyForm planted_anomaly_form(const SbmSpec& spec);

// Centering and scaling constants for the maximum of m standard normals:
//   a_m = sqrt(2 log m) * (1 - (log log m + log 4 pi) / (4 log m))
//   b_m = 1 / sqrt(2 log m)
// Requires m >= 2.
std::pair<double, double> gumbel_norm_constants(std::size_t m);

// Gumbel parameters per block for the degree-style statistic (k=0), both
// hypotheses. Every block must have at least 2 vertices.
LimitModel limit_model_k0(const SbmSpec& spec, StatKind stat);

// Gumbel parameters per block at hop radius 1. stat=Psi is only available
// for exactly 3 blocks; stat=Phi needs at least 3. Throws std::domain_error
// outside that scope.
LimitModel limit_model_k1(const SbmSpec& spec, StatKind stat);

// P(max over blocks <= x) under the chosen hypothesis.
double max_gumbel_cdf(const LimitModel& model, Hypothesis hyp, double x);

// x with P(max <= x) = prob under the null, by bisection to 1e-12.
double null_quantile(const LimitModel& model, double prob);

// Power of the level-alpha test that rejects when the statistic exceeds the
// null (1-alpha)-quantile.
double power_large_sample(const LimitModel& model, double alpha);

struct HeatmapResult {
    std::vector<double> h_values;
    std::vector<double> q_values;
    // Indexed [h][q].
    std::vector<std::vector<double>> beta_psi;
    std::vector<std::vector<double>> beta_phi;
    std::vector<std::vector<double>> diff;  // beta_psi - beta_phi
    std::size_t anomaly_block_size = 0;     // the common size of blocks 2 and 3
};

// Large-sample power difference over a grid of (h, q) pairs for the 3-block
// design with off-diagonal p and blocks 2 and 3 sized
// ceil(sizing_constant * sqrt(n log n)). Grid values must lie in (p, 1).
HeatmapResult heatmap_beta_diff(double p,
                                const std::vector<double>& h_values,
                                const std::vector<double>& q_values,
                                std::size_t n,
                                double alpha,
                                double sizing_constant = 1.0);

// Asymptotic growth of one quantity against a reference scale.
enum class Growth { SmallO, Theta, BigOmega, SmallOmega };

struct RegimeOrders {
    Growth n3_vs_sqrt_n = Growth::SmallO;
    // Growth of n_3 against n_2; only consulted when n_3 is Omega(sqrt n).
    std::optional<Growth> n3_vs_n2;
};

struct PowerRelation {
    enum class Kind { EqualsAlpha, ExceedsAlpha, Conditional };
    Kind kind = Kind::EqualsAlpha;
    std::string condition;  // set only for Conditional
};

struct RegimeVerdict {
    std::optional<PowerRelation> psi;
    std::optional<PowerRelation> phi;
};

// Limiting power relations for the 3-block design at k=0. h and p settle
// the o(n_2) case; the Theta(n_2)-with-omega(sqrt n) case stays conditional
// on a limit the orders do not determine. A relation the orders cannot
// settle at all is absent; contradictory descriptors throw.
RegimeVerdict classify_regime_k0(const RegimeOrders& orders, double h, double p);

struct RegimeVerdictK1 {
    PowerRelation psi;
    PowerRelation phi;
    // beta'_Phi >= beta'_Psi in every regime, so the one-hop Psi statistic
    // is never worth preferring.
    bool phi_dominates = true;
    bool psi_inadmissible = true;
};

RegimeVerdictK1 classify_regime_k1(const RegimeOrders& orders);

}  // namespace graphscan
