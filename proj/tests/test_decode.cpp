#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "colexlab/decode.hpp"

using namespace colexlab;

namespace {

// Reference count of connected size-l node sets through `node`, by
// enumerating subsets of the BFS ball.
std::size_t naive_connected(const ExcitationGraph& g, std::size_t node, std::size_t l) {
    // A connected size-l set through `node` fits in the radius-(l-1) ball.
    std::vector<std::size_t> ball{node};
    std::vector<int> depth(g.num_nodes, -1);
    depth[node] = 0;
    for (std::size_t i = 0; i < ball.size(); ++i)
        for (std::size_t v : g.adj[ball[i]])
            if (depth[v] < 0 && depth[ball[i]] + 1 < static_cast<int>(l)) {
                depth[v] = depth[ball[i]] + 1;
                ball.push_back(v);
            }
    REQUIRE(ball.size() <= 24); // keep the enumeration tractable
    std::size_t count = 0;
    for (std::uint64_t m = 0; m < (1ull << ball.size()); ++m) {
        if (std::popcount(m) != static_cast<int>(l) || !(m & 1)) continue;
        // Connectivity by flood fill over the selected nodes.
        std::vector<std::size_t> sel;
        for (std::size_t i = 0; i < ball.size(); ++i)
            if (m >> i & 1) sel.push_back(ball[i]);
        std::vector<std::size_t> stack{sel[0]};
        std::vector<char> seen(g.num_nodes, 0);
        seen[sel[0]] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : g.adj[v]) {
                bool chosen = false;
                for (std::size_t s : sel) chosen = chosen || s == w;
                if (chosen && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        count += reached == l;
    }
    return count;
}

ExcitationGraph path_graph(std::size_t n) {
    ExcitationGraph g;
    g.type = SyndromeType::Z;
    g.num_nodes = n;
    g.adj.resize(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        g.adj[i].push_back(i + 1);
        g.adj[i + 1].push_back(i);
    }
    g.lambda = 2;
    g.mu = 2;
    return g;
}

} // namespace

TEST_CASE("excitation graph of the 2d toric code") {
    CssCode code = toric_code(2, 4, 1);
    auto g = excitation_graph(code, SyndromeType::Z);
    CHECK(g.num_nodes == 16); // vertices
    CHECK(g.lambda == 2);
    CHECK(g.mu == 4);
    for (std::size_t v = 0; v < g.num_nodes; ++v) CHECK(g.adj[v].size() == 4);
}

TEST_CASE("graph parameters are size independent") {
    for (auto [D, d, mu] : {std::tuple{2, 1, 4}, {3, 1, 6}, {3, 2, 10}}) {
        std::size_t lam0 = 0, mu0 = 0;
        for (int L : {3, 4}) {
            auto g = excitation_graph(toric_code(D, L, d), SyndromeType::Z);
            if (L == 3) {
                lam0 = g.lambda;
                mu0 = g.mu;
            }
            CHECK(g.lambda == lam0);
            CHECK(g.mu == mu0);
        }
        CHECK(mu0 == static_cast<std::size_t>(mu));
    }
}

TEST_CASE("cluster decomposition") {
    CssCode code = toric_code(2, 5, 1);
    auto g = excitation_graph(code, SyndromeType::Z);
    // Two far-apart single X errors give two clusters of two nodes each.
    Pauli e(code.n);
    e.x.set(0, true);
    TorusLattice lat(2, 5);
    e.x.set(code.n / 2 + 2, true);
    auto [sx, sz] = syndrome_of(code, e);
    auto exc = node_excitations(code, sz);
    auto clusters = cluster_decompose(g, exc);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].nodes.size() == 2);
    CHECK(clusters[1].nodes.size() == 2);
    CHECK(!clusters_linked(g, clusters[0].node_chain, clusters[1].node_chain));
}

TEST_CASE("toric corr round trip") {
    for (auto [D, d] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
        CssCode code = toric_code(D, 4, d);
        install_toric_decoder(code);
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<std::size_t> pick(0, code.n - 1);
        // Single-qubit errors always decode back to themselves up to
        // stabilizers; sparse multi-qubit errors may be declined when a
        // cluster box wraps, but never miscorrected.
        for (std::size_t q = 0; q < code.n; ++q) {
            Pauli e(code.n);
            e.x.set(q, true);
            auto [sx, sz] = syndrome_of(code, e);
            auto c = code.corr(sz);
            REQUIRE(c.has_value());
            auto [cx_, cz_] = syndrome_of(code, *c);
            CHECK(cz_.bits == sz.bits);
            const BitChain resid = e.x ^ c->x;
            for (const Pauli& lz : code.logical_z)
                CHECK(!BitChain::and_parity(resid, lz.z));
        }
        // Errors confined to a 2-wide window stay below half the distance
        // in spread, so the box decoder must recover the right class. Only
        // meaningful for d >= 2, where excitation boundaries are connected;
        // for d = 1 separated endpoint defects fall into odd clusters the
        // decoder declines.
        if (d < 2) continue;
        const TorusLattice& lat = *code.lattice;
        std::vector<std::uint32_t> dmasks;
        for (std::uint32_t m = 0; m < (1u << D); ++m)
            if (std::popcount(m) == d) dmasks.push_back(m);
        std::uniform_int_distribution<int> coord(0, lat.L() - 1), off(0, 1);
        std::uniform_int_distribution<std::size_t> dm(0, dmasks.size() - 1);
        for (int t = 0; t < 250; ++t) {
            std::vector<int> base(D);
            for (int u = 0; u < D; ++u) base[u] = coord(rng);
            Pauli e(code.n);
            for (int w = 0; w < 3; ++w) {
                std::vector<int> at(D);
                for (int u = 0; u < D; ++u) at[u] = (base[u] + off(rng)) % lat.L();
                e.x.flip(lat.cell_id(d, dmasks[dm(rng)], at));
            }
            auto [sx, sz] = syndrome_of(code, e);
            auto c = code.corr(sz);
            REQUIRE(c.has_value());
            auto [cx_, cz_] = syndrome_of(code, *c);
            CHECK(cz_.bits == sz.bits);
            const BitChain resid = e.x ^ c->x;
            for (const Pauli& lz : code.logical_z)
                CHECK(!BitChain::and_parity(resid, lz.z));
        }
    }
}

TEST_CASE("separated point defects are declined at d = 1") {
    CssCode code = toric_code(2, 4, 1);
    install_toric_decoder(code);
    // A two-edge string leaves endpoints two sites apart: two odd clusters,
    // neither of which bounds anything, so the decoder gives up.
    TorusLattice lat(2, 4);
    Pauli e(code.n);
    e.x.set(lat.cell_id(1, 1u, {0, 0}), true);
    e.x.set(lat.cell_id(1, 1u, {1, 0}), true);
    auto [sx, sz] = syndrome_of(code, e);
    CHECK(!code.corr(sz).has_value());
}

TEST_CASE("wrapping clusters are rejected") {
    CssCode code = toric_code(2, 4, 1);
    install_toric_decoder(code);
    // Half a logical: a straight open string of length L/2 still decodes,
    // but a full wrap has zero syndrome; build a cluster wrapping one cycle
    // via a weight-L/2 segment with endpoints identified is not possible,
    // so instead check the box solver directly on an artificial wrap.
    auto g = excitation_graph(code, SyndromeType::Z);
    BitChain exc(g.num_nodes);
    // Excite a full row of vertices: occupied coordinates cover the torus.
    TorusLattice lat(2, 4);
    for (int x = 0; x < 4; ++x) exc.set(lat.cell_id(0, 0, {x, 0}), true);
    auto clusters = cluster_decompose(g, exc);
    REQUIRE(clusters.size() == 1);
    CHECK(!toric_box_corr(code, SyndromeType::Z, clusters[0]).has_value());
}

TEST_CASE("color corr round trip on the steane code") {
    Colex cx = puncture(build_hypercube_colex(2));
    CssCode code = color_code(cx, 1);
    install_color_decoder(code);
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::size_t> pick(0, code.n - 1);
    for (int t = 0; t < 500; ++t) {
        Pauli e(code.n);
        e.x.set(pick(rng), true);
        auto [sx, sz] = syndrome_of(code, e);
        auto c = code.corr(sz);
        REQUIRE(c.has_value());
        auto [cx2, cz2] = syndrome_of(code, *c);
        CHECK(cz2.bits == sz.bits);
        const BitChain resid = e.x ^ c->x;
        for (const Pauli& lz : code.logical_z)
            CHECK(!BitChain::and_parity(resid, lz.z));
    }
}

TEST_CASE("min weight decoder matches syndromes") {
    Colex cx = puncture(build_hypercube_colex(2));
    CssCode code = color_code(cx, 1);
    install_min_weight_decoder(code, 3);
    for (std::uint64_t m = 0; m < 8; ++m) {
        Syndrome b{BitChain::from_mask(3, m), SyndromeType::Z};
        auto c = code.corr(b);
        REQUIRE(c.has_value());
        auto [sx, sz] = syndrome_of(code, *c);
        CHECK(sz.bits == b.bits);
        CHECK(c->weight() <= 2); // steane corrects any syndrome with <= 2 flips
    }
}

TEST_CASE("count connected matches enumeration") {
    auto path = path_graph(32);
    for (std::size_t l = 1; l <= 6; ++l) {
        CHECK(count_connected(path, 16, l) == l);
        CHECK(count_connected(path, 0, l) == 1);
    }
    auto g2 = excitation_graph(toric_code(2, 6, 1), SyndromeType::Z);
    for (std::size_t l = 1; l <= 3; ++l)
        CHECK(count_connected(g2, 0, l) == naive_connected(g2, 0, l));
}

TEST_CASE("count connected respects the exponential bound") {
    std::vector<ExcitationGraph> graphs;
    graphs.push_back(path_graph(32));
    graphs.push_back(excitation_graph(toric_code(2, 6, 1), SyndromeType::Z));
    graphs.push_back(excitation_graph(toric_code(3, 4, 1), SyndromeType::Z));
    for (const auto& g : graphs)
        for (std::size_t l = 1; l <= 6; ++l)
            CHECK(static_cast<double>(count_connected(g, 0, l)) <=
                  std::exp(static_cast<double>(g.mu) * std::log(2.0) * l));
}

TEST_CASE("peierls bound equals the geometric series") {
    const double gamma = 96, nu = 2, xi = 1, L = 8, lambda = 4, mu = 14;
    const double beta = 3, t_min = 1;
    const double delta = beta * t_min - mu * std::log(2.0);
    REQUIRE(delta <= 0); // this parameter point is outside the bound's domain
    CHECK_THROWS_AS(peierls_bound(gamma, nu, xi, L, lambda, mu, beta, t_min),
                    std::domain_error);
    const double beta2 = 12;
    const double delta2 = beta2 * t_min - mu * std::log(2.0);
    const std::size_t l0 =
        static_cast<std::size_t>(std::ceil(xi * L / (lambda * mu)));
    double series = 0.0, term = std::pow(gamma, 2 * nu) * std::exp(-delta2 * l0);
    for (int i = 0; i < 4000 && term > 1e-300; ++i) {
        series += term;
        term *= std::exp(-delta2);
    }
    const double bound = peierls_bound(gamma, nu, xi, L, lambda, mu, beta2, t_min);
    CHECK(std::abs(bound - series) <= 1e-12 * series);
}

TEST_CASE("decoder factorizes over unlinked clusters") {
    auto rep = verify_conditions(2, 1, {3, 4}, 200, 47);
    CHECK(rep.lambda_constant);
    CHECK(rep.mu_constant);
    CHECK(rep.factorization_checked == 200);
    CHECK(rep.factorization_ok);
}
