#include "graphscan/locality.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace graphscan {

namespace {

void check_time(const GraphSeries& series, std::size_t t, const char* what) {
    if (t >= series.length()) {
        std::ostringstream msg;
        msg << what << ": time " << t << " out of range [0, " << series.length() << ")";
        throw std::out_of_range(msg.str());
    }
}

void check_order(std::size_t t, std::size_t t_prime) {
    if (t_prime > t) {
        std::ostringstream msg;
        msg << "phi: t_prime " << t_prime << " exceeds t " << t
            << " (defined only for t_prime <= t)";
        throw std::invalid_argument(msg.str());
    }
}

std::int64_t masked_degree(const GraphSnapshot& a, const GraphSnapshot& b, VertexId v) {
    auto ra = a.row(v);
    auto rb = b.row(v);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < ra.size(); ++j) total += std::popcount(ra[j] & rb[j]);
    return total;
}

}  // namespace

std::int64_t psi(const GraphSeries& series, std::size_t t, int k, VertexId v) {
    check_time(series, t, "psi");
    const GraphSnapshot& g = series.at(t);
    if (k == 0) return degree(g, v);
    return induced_edge_count(g, neighborhood(g, v, k));
}

std::int64_t phi(const GraphSeries& series, std::size_t t, std::size_t t_prime, int k,
                 VertexId v) {
    check_time(series, t, "phi");
    check_time(series, t_prime, "phi");
    check_order(t, t_prime);
    const GraphSnapshot& now = series.at(t);
    const GraphSnapshot& then = series.at(t_prime);
    if (k == 0) return masked_degree(now, then, v);
    return induced_edge_count(then, neighborhood(now, v, k));
}

std::vector<std::int64_t> psi_all(const GraphSeries& series, std::size_t t, int k) {
    check_time(series, t, "psi_all");
    const std::size_t targets[] = {t};
    return locality_profile(series, t, targets, k)[0];
}

std::vector<std::int64_t> phi_all(const GraphSeries& series, std::size_t t,
                                  std::size_t t_prime, int k) {
    check_time(series, t, "phi_all");
    check_time(series, t_prime, "phi_all");
    check_order(t, t_prime);
    const std::size_t targets[] = {t_prime};
    return locality_profile(series, t, targets, k)[0];
}

std::vector<std::vector<std::int64_t>> locality_profile(const GraphSeries& series,
                                                        std::size_t t,
                                                        std::span<const std::size_t> targets,
                                                        int k) {
    check_time(series, t, "locality_profile");
    for (std::size_t s : targets) check_time(series, s, "locality_profile");
    if (k < 0) throw std::invalid_argument("locality_profile: k must be nonnegative");

    const GraphSnapshot& now = series.at(t);
    const auto n = static_cast<VertexId>(series.num_vertices());
    std::vector<std::vector<std::int64_t>> out(targets.size(),
                                               std::vector<std::int64_t>(n, 0));

    if (k == 0) {
        for (std::size_t s = 0; s < targets.size(); ++s) {
            const GraphSnapshot& then = series.at(targets[s]);
            if (targets[s] == t) {
                for (VertexId v = 0; v < n; ++v) out[s][v] = degree(now, v);
            } else {
                for (VertexId v = 0; v < n; ++v) out[s][v] = masked_degree(now, then, v);
            }
        }
        return out;
    }

    std::vector<const GraphSnapshot*> target_graphs;
    target_graphs.reserve(targets.size());
    for (std::size_t s : targets) target_graphs.push_back(&series.at(s));

    for (VertexId v = 0; v < n; ++v) {
        auto mask = neighborhood(now, v, k);
        auto counts = induced_edge_count_multi(target_graphs, mask);
        for (std::size_t s = 0; s < targets.size(); ++s) out[s][v] = counts[s];
    }
    return out;
}

}  // namespace graphscan
