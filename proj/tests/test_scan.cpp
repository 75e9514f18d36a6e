#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "graphscan/scan.hpp"
#include "test_helpers.hpp"

using namespace graphscan;

namespace {

ScanConfig config(std::size_t tau, std::size_t ell, int k, StatKind stat) {
    ScanConfig cfg;
    cfg.tau = tau;
    cfg.ell = ell;
    cfg.k = k;
    cfg.stat = stat;
    return cfg;
}

}  // namespace

TEST_CASE("tau=0 returns the raw locality value") {
    auto series = helpers::random_series(20, 3, 0.3, 201);
    for (int k = 0; k <= 2; ++k) {
        for (VertexId v = 0; v < 20; ++v) {
            CHECK(vertex_normalized(series, 2, config(0, 0, k, StatKind::Psi), v) ==
                  double(psi(series, 2, k, v)));
            CHECK(vertex_normalized(series, 2, config(0, 0, k, StatKind::Phi), v) ==
                  double(phi(series, 2, 2, k, v)));
        }
    }
}

TEST_CASE("tau=1 subtracts the single lagged value") {
    auto series = helpers::random_series(20, 4, 0.3, 202);
    for (int k = 0; k <= 1; ++k) {
        for (VertexId v = 0; v < 20; ++v) {
            CHECK(vertex_normalized(series, 3, config(1, 0, k, StatKind::Psi), v) ==
                  double(psi(series, 3, k, v) - psi(series, 2, k, v)));
            CHECK(vertex_normalized(series, 3, config(1, 0, k, StatKind::Phi), v) ==
                  double(phi(series, 3, 3, k, v) - phi(series, 3, 2, k, v)));
        }
    }
}

TEST_CASE("degree jump from 3 to 5 normalizes to 2") {
    // Vertex 0 has degree 3 at t=0 and degree 5 at t=1.
    GraphSnapshot g0(8);
    g0.add_edge(0, 1);
    g0.add_edge(0, 2);
    g0.add_edge(0, 3);
    GraphSnapshot g1(8);
    for (VertexId u = 1; u <= 5; ++u) g1.add_edge(0, u);
    GraphSeries series({g0, g1});
    CHECK(vertex_normalized(series, 1, config(1, 0, 0, StatKind::Psi), 0) == 2.0);
}

TEST_CASE("one-hop edge count dropping from 7 to 4 normalizes to 3") {
    // N_1[0; G_1] = {0,1,2,3,4} with 7 induced edges in G_1; the same vertex
    // set induces 4 edges in G_0.
    GraphSnapshot g1(5);
    for (VertexId u = 1; u <= 4; ++u) g1.add_edge(0, u);
    g1.add_edge(1, 2);
    g1.add_edge(1, 3);
    g1.add_edge(2, 4);
    GraphSnapshot g0(5);
    g0.add_edge(0, 1);
    g0.add_edge(0, 2);
    g0.add_edge(1, 2);
    g0.add_edge(3, 4);
    GraphSeries series({g0, g1});
    REQUIRE(phi(series, 1, 1, 1, 0) == 7);
    REQUIRE(phi(series, 1, 0, 1, 0) == 4);
    CHECK(vertex_normalized(series, 1, config(1, 0, 1, StatKind::Phi), 0) == 3.0);
}

TEST_CASE("tau>1 studentizes against the lag window") {
    auto series = helpers::random_series(15, 6, 0.35, 203);
    ScanConfig cfg = config(4, 0, 1, StatKind::Phi);
    for (VertexId v = 0; v < 15; ++v) {
        double current = double(phi(series, 5, 5, 1, v));
        double mean = 0.0;
        for (std::size_t s = 1; s <= 4; ++s) mean += double(phi(series, 5, 5 - s, 1, v));
        mean /= 4.0;
        double ss = 0.0;
        for (std::size_t s = 1; s <= 4; ++s) {
            double d = double(phi(series, 5, 5 - s, 1, v)) - mean;
            ss += d * d;
        }
        double sd = std::sqrt(ss / 3.0);
        double expected = (current - mean) / std::max(sd, 1.0);
        CHECK(vertex_normalized(series, 5, cfg, v) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("sigma clamp threshold is configurable") {
    // Constant history: lag values all equal, sample sd is 0, so the clamp
    // value becomes the divisor.
    auto g = helpers::cycle(6);
    GraphSeries series({g, g, g, helpers::complete(6)});
    ScanConfig cfg = config(3, 0, 0, StatKind::Psi);
    CHECK(vertex_normalized(series, 3, cfg, 0) == 3.0);  // (5 - 2) / max(0, 1)
    cfg.sigma_clamp = 0.5;
    CHECK(vertex_normalized(series, 3, cfg, 0) == 6.0);
}

TEST_CASE("insufficient history is an input error") {
    auto series = helpers::random_series(10, 3, 0.3, 204);
    CHECK_THROWS_AS(vertex_normalized(series, 1, config(2, 0, 0, StatKind::Psi), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan_stat(series, 1, config(1, 1, 0, StatKind::Psi)),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan_series(series, config(2, 1, 0, StatKind::Psi)),
                    std::invalid_argument);
}

TEST_CASE("batch normalization agrees with scalar calls") {
    auto series = helpers::random_series(18, 5, 0.3, 205);
    for (auto stat : {StatKind::Psi, StatKind::Phi}) {
        for (std::size_t tau : {0u, 1u, 3u}) {
            ScanConfig cfg = config(tau, 0, 1, stat);
            auto values = vertex_normalized_all(series, 4, cfg);
            for (VertexId v = 0; v < 18; ++v) {
                CHECK(values[v] ==
                      doctest::Approx(vertex_normalized(series, 4, cfg, v)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("m_stat on a single-vertex series") {
    GraphSeries series({GraphSnapshot(1), GraphSnapshot(1)});
    auto [value, argmax] = m_stat(series, 1, config(1, 0, 0, StatKind::Psi));
    CHECK(value == 0.0);
    CHECK(argmax == 0);
}

TEST_CASE("m_stat with tau=0 k=0 is the max degree") {
    auto series = helpers::random_series(25, 2, 0.3, 206);
    auto [value, argmax] = m_stat(series, 1, config(0, 0, 0, StatKind::Psi));
    std::int64_t best = -1;
    VertexId best_v = 0;
    for (VertexId v = 0; v < 25; ++v) {
        auto d = degree(series.at(1), v);
        if (d > best) {
            best = d;
            best_v = v;
        }
    }
    CHECK(value == double(best));
    CHECK(argmax == best_v);
}

TEST_CASE("the vertex gaining three edges attains the max") {
    GraphSnapshot g0(6);
    g0.add_edge(1, 2);
    GraphSnapshot g1 = g0;
    g1.add_edge(4, 0);
    g1.add_edge(4, 3);
    g1.add_edge(4, 5);
    GraphSeries series({g0, g1});
    auto [value, argmax] = m_stat(series, 1, config(1, 0, 0, StatKind::Psi));
    CHECK(value == 3.0);
    CHECK(argmax == 4);
}

TEST_CASE("m_stat ties break toward the smallest vertex id") {
    GraphSnapshot g(5);
    g.add_edge(2, 3);  // vertices 2 and 3 both have degree 1
    GraphSeries series({g});
    auto [value, argmax] = m_stat(series, 0, config(0, 0, 0, StatKind::Psi));
    CHECK(value == 1.0);
    CHECK(argmax == 2);
}

TEST_CASE("scan_stat with ell=0 equals m_stat") {
    auto series = helpers::random_series(20, 5, 0.3, 207);
    for (auto stat : {StatKind::Psi, StatKind::Phi}) {
        ScanConfig cfg = config(2, 0, 1, stat);
        auto sv = scan_stat(series, 4, cfg);
        auto [m, argmax] = m_stat(series, 4, cfg);
        CHECK(sv.value == m);
        CHECK(sv.argmax_vertex == argmax);
        CHECK(sv.t == 4);
    }
}

TEST_CASE("constant series scans to zero") {
    auto g = helpers::cycle(7);
    GraphSeries series({g, g, g, g});
    CHECK(scan_stat(series, 2, config(1, 1, 0, StatKind::Psi)).value == 0.0);
    CHECK(scan_stat(series, 3, config(1, 2, 1, StatKind::Phi)).value == 0.0);
}

TEST_CASE("zero lag variance clamps the temporal divisor to one") {
    // G_0 = G_1 = G_2, then vertex 0 gains four edges at t=3. With tau=1 the
    // M sequence is (0, 0, 4), so S at t=3 with ell=2 is (4 - 0)/max(0, 1).
    GraphSnapshot base(6);
    base.add_edge(1, 2);
    GraphSnapshot changed = base;
    for (VertexId u : {2, 3, 4, 5}) changed.add_edge(0, u);
    GraphSeries series({base, base, base, changed});
    ScanConfig cfg = config(1, 2, 0, StatKind::Psi);
    auto sv = scan_stat(series, 3, cfg);
    CHECK(sv.value == 4.0);
    CHECK(sv.argmax_vertex == 0);
}

TEST_CASE("scan_series boundary produces a single value") {
    auto series = helpers::random_series(12, 4, 0.3, 208);
    auto out = scan_series(series, config(2, 1, 0, StatKind::Psi));
    REQUIRE(out.size() == 1);
    CHECK(out[0].t == 3);
}

TEST_CASE("scan_series with tau=ell=0 is the per-time raw max") {
    auto series = helpers::random_series(15, 4, 0.3, 209);
    auto out = scan_series(series, config(0, 0, 1, StatKind::Psi));
    REQUIRE(out.size() == 4);
    for (std::size_t t = 0; t < 4; ++t) {
        auto [m, argmax] = m_stat(series, t, config(0, 0, 1, StatKind::Psi));
        CHECK(out[t].value == m);
        CHECK(out[t].argmax_vertex == argmax);
    }
}

TEST_CASE("scan_series matches scan_stat pointwise") {
    auto series = helpers::random_series(16, 8, 0.3, 210);
    for (auto stat : {StatKind::Psi, StatKind::Phi}) {
        ScanConfig cfg = config(2, 3, 1, stat);
        auto out = scan_series(series, cfg);
        REQUIRE(out.size() == 3);
        for (const auto& sv : out) {
            auto single = scan_stat(series, sv.t, cfg);
            CHECK(sv.value == doctest::Approx(single.value).epsilon(1e-12));
            CHECK(sv.argmax_vertex == single.argmax_vertex);
        }
    }
}

TEST_CASE("stationary max of centered differences is rarely negative") {
    auto series = helpers::random_series(100, 12, 0.4, 211);
    auto out = scan_series(series, config(1, 0, 0, StatKind::Psi));
    std::size_t nonnegative = 0;
    for (const auto& sv : out) {
        if (sv.value >= 0.0) ++nonnegative;
    }
    CHECK(nonnegative >= out.size() - 1);
}

TEST_CASE("tau=0 makes the statistic choice irrelevant") {
    auto series = helpers::random_series(20, 6, 0.35, 212);
    for (std::size_t ell : {0u, 2u}) {
        auto psi_run = scan_series(series, config(0, ell, 1, StatKind::Psi));
        auto phi_run = scan_series(series, config(0, ell, 1, StatKind::Phi));
        REQUIRE(psi_run.size() == phi_run.size());
        for (std::size_t i = 0; i < psi_run.size(); ++i) {
            CHECK(psi_run[i].value == phi_run[i].value);
            CHECK(psi_run[i].argmax_vertex == phi_run[i].argmax_vertex);
        }
    }
}

TEST_CASE("an isolated vertex neither raises M nor disturbs others") {
    auto series = helpers::random_series(12, 5, 0.4, 213);
    GraphSeries padded;
    for (std::size_t t = 0; t < series.length(); ++t) {
        GraphSnapshot g(13);
        for (VertexId u = 0; u < 12; ++u) {
            for (VertexId v = u + 1; v < 12; ++v) {
                if (series.at(t).has_edge(u, v)) g.add_edge(u, v);
            }
        }
        padded.push_back(g);
    }
    for (std::size_t tau : {0u, 1u, 3u}) {
        ScanConfig cfg = config(tau, 0, 1, StatKind::Phi);
        auto original = vertex_normalized_all(series, 4, cfg);
        auto extended = vertex_normalized_all(padded, 4, cfg);
        for (VertexId v = 0; v < 12; ++v) CHECK(original[v] == extended[v]);
        if (tau == 0) {
            CHECK(m_stat(padded, 4, cfg).first == m_stat(series, 4, cfg).first);
        }
    }
}

TEST_CASE("relabeling permutes argmax but not values") {
    auto series = helpers::random_series(10, 6, 0.35, 214);
    std::vector<VertexId> perm = {7, 3, 9, 1, 0, 5, 8, 2, 6, 4};
    GraphSeries relabeled;
    for (std::size_t t = 0; t < series.length(); ++t) {
        relabeled.push_back(helpers::permuted(series.at(t), perm));
    }
    ScanConfig cfg = config(1, 1, 1, StatKind::Phi);
    auto a = scan_series(series, cfg);
    auto b = scan_series(relabeled, cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].value == doctest::Approx(b[i].value).epsilon(1e-12));
    }
}
