#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "colexlab/css.hpp"
#include "colexlab/decode.hpp"

using namespace colexlab;

namespace {

Pauli random_pauli(std::mt19937_64& rng, std::size_t n) {
    Pauli p(n);
    std::bernoulli_distribution bit(0.3);
    for (std::size_t q = 0; q < n; ++q) {
        if (bit(rng)) p.x.set(q, true);
        if (bit(rng)) p.z.set(q, true);
    }
    return p;
}

// Reference distance: least weight of a pure-type chain with zero syndrome
// that anticommutes with some logical of the opposite type. Enumerates all
// supports, so codes must stay tiny.
std::size_t brute_distance(const CssCode& code) {
    REQUIRE(code.n <= 20);
    std::size_t best = code.n + 1;
    for (std::uint64_t m = 1; m < (1ull << code.n); ++m) {
        const std::size_t w = std::popcount(m);
        if (w >= best) continue;
        const BitChain supp = BitChain::from_mask(code.n, m);
        const Pauli ex = Pauli::x_on(code.n, supp);
        bool zero = true;
        for (const Pauli& g : code.z_gens) zero = zero && commutes(ex, g);
        if (zero) {
            for (const Pauli& l : code.logical_z)
                if (!commutes(ex, l)) { best = w; break; }
        }
        const Pauli ez = Pauli::z_on(code.n, supp);
        zero = true;
        for (const Pauli& g : code.x_gens) zero = zero && commutes(ez, g);
        if (zero) {
            for (const Pauli& l : code.logical_x)
                if (!commutes(ez, l)) { best = std::min(best, w); break; }
        }
    }
    return best;
}

CssCode steane() {
    Colex cx = puncture(build_hypercube_colex(2));
    CssCode code = color_code(cx, 1);
    install_min_weight_decoder(code, 3);
    return code;
}

void check_css_structure(const CssCode& code) {
    for (const Pauli& gx : code.x_gens)
        for (const Pauli& gz : code.z_gens) CHECK(commutes(gx, gz));
    for (const Pauli& l : code.logical_x) {
        for (const Pauli& g : code.z_gens) CHECK(commutes(l, g));
        for (const Pauli& g : code.x_gens) CHECK(commutes(l, g));
    }
    for (const Pauli& l : code.logical_z)
        for (const Pauli& g : code.x_gens) CHECK(commutes(l, g));
    REQUIRE(code.logical_x.size() == code.k());
    REQUIRE(code.logical_z.size() == code.k());
    for (std::size_t i = 0; i < code.k(); ++i)
        for (std::size_t j = 0; j < code.k(); ++j)
            CHECK(commutes(code.logical_x[i], code.logical_z[j]) == (i != j));
}

} // namespace

TEST_CASE("pauli algebra") {
    Pauli x = Pauli::single(2, 0, true, false);
    Pauli z = Pauli::single(2, 0, false, true);
    CHECK(!commutes(x, z));
    Pauli zx = z * x;
    Pauli xz = x * z;
    CHECK(zx.x == xz.x);
    CHECK(zx.sign == -xz.sign);
    CHECK((x * x).is_identity());
    Pauli x1 = Pauli::single(2, 1, true, false);
    CHECK(!commutes(x, z * x1));
    CHECK(commutes(x1, z));
}

TEST_CASE("closed hypercube colexes") {
    for (int D = 2; D <= 4; ++D) {
        Colex cx = build_hypercube_colex(D);
        CHECK(cx.num_vertices() == (1u << (D + 1)));
        CHECK(std::popcount(cx.color_set) == D + 1);
        CHECK(cx.valence_ok());
        CHECK(cx.is_nice());
        // Cube surface counts at D = 2: 8 vertices, 12 edges, 6 faces.
        if (D == 2) {
            CHECK(cx.cell_count(0) == 8);
            CHECK(cx.cell_count(1) == 12);
            CHECK(cx.cell_count(2) == 6);
        }
    }
}

TEST_CASE("puncture removes one vertex closure") {
    Colex cx = build_hypercube_colex(2);
    Colex p = puncture(cx);
    CHECK(p.num_vertices() == 7);
    CHECK(p.cell_count(2) == 3);
    CHECK(p.punctured);
    CHECK(p.is_nice());
}

TEST_CASE("subcolex of a face is a closed polygon") {
    Colex cx = build_hypercube_colex(3);
    Colex sub = subcolex(cx, 2, 0);
    CHECK(sub.D == 1);
    CHECK(sub.cell_count(0) == sub.cell_count(1));
    CHECK(sub.valence_ok());
}

TEST_CASE("steane code emerges from the punctured square colex") {
    CssCode code = steane();
    CHECK(code.n == 7);
    CHECK(code.k() == 1);
    REQUIRE(code.x_gens.size() == 3);
    REQUIRE(code.z_gens.size() == 3);
    for (const Pauli& g : code.x_gens) CHECK(g.weight() == 4);
    for (const Pauli& g : code.z_gens) CHECK(g.weight() == 4);
    check_css_structure(code);
    CHECK(brute_distance(code) == 3);
    CHECK(distance(code, 3) == 3);
    // Simplicial logicals act on every qubit.
    auto [lx, lz] = simplicial_logicals(code);
    CHECK(lx.x.weight() == 7);
    CHECK(lz.z.weight() == 7);
}

TEST_CASE("fifteen qubit code parameters") {
    Colex cx = puncture(build_hypercube_colex(3));
    CssCode code = color_code(cx, 2);
    CHECK(code.n == 15);
    CHECK(code.k() == 1);
    check_css_structure(code);
    CHECK(distance(code, 4) == 3);
}

TEST_CASE("toric code parameters") {
    for (int L = 2; L <= 3; ++L) {
        CssCode code = toric_code(2, L, 1);
        CHECK(code.n == 2 * static_cast<std::size_t>(L) * L);
        CHECK(code.k() == 2);
        check_css_structure(code);
        CHECK(distance(code, L) == static_cast<std::size_t>(L));
    }
}

TEST_CASE("higher toric codes") {
    CssCode code = toric_code(3, 2, 1);
    CHECK(code.k() == 3);
    check_css_structure(code);
    CssCode dual = toric_code(3, 2, 2);
    CHECK(dual.k() == 3);
    check_css_structure(dual);
}

TEST_CASE("closed color code homology") {
    Colex cx = build_hypercube_colex(2);
    CssCode code = color_code(cx, 1);
    CHECK(code.n == 8);
    CHECK(code.k() == 0); // genus zero: no logical qubits
    check_css_structure(code);
}

TEST_CASE("generator dependency matrices") {
    CssCode code = toric_code(2, 3, 1);
    // Every overcomplete generator must reconstruct from the basis rows.
    for (std::size_t i = 0; i < code.z_gens.size(); ++i) {
        BitChain acc(code.n);
        for (std::size_t j = 0; j < code.z_basis.size(); ++j)
            if (code.z_dep.get(i, j)) acc = acc ^ code.z_gens[code.z_basis[j]].z;
        CHECK(acc == code.z_gens[i].z);
    }
}

TEST_CASE("syndrome homomorphism") {
    CssCode code = steane();
    std::mt19937_64 rng(31);
    for (int t = 0; t < 1000; ++t) {
        Pauli a = random_pauli(rng, code.n), b = random_pauli(rng, code.n);
        auto [sx1, sz1] = syndrome_of(code, a);
        auto [sx2, sz2] = syndrome_of(code, b);
        auto [sx12, sz12] = syndrome_of(code, a * b);
        CHECK(sx12.bits == (sx1.bits ^ sx2.bits));
        CHECK(sz12.bits == (sz1.bits ^ sz2.bits));
    }
}

TEST_CASE("s_sign multiplicativity") {
    CssCode code = steane();
    std::mt19937_64 rng(37);
    std::bernoulli_distribution half(0.5);
    std::uniform_int_distribution<std::uint64_t> bits(0, (1u << 3) - 1);
    for (int t = 0; t < 1000; ++t) {
        const Pauli N = half(rng) ? code.logical_z[0] : code.logical_x[0];
        // Disjoint supports: split the qubits at random.
        Pauli e1(code.n), e2(code.n);
        for (std::size_t q = 0; q < code.n; ++q) {
            Pauli& dst = half(rng) ? e1 : e2;
            if (half(rng)) dst.x.set(q, true);
            if (half(rng)) dst.z.set(q, true);
        }
        const SyndromeType ty =
            N.z.any() ? SyndromeType::Z : SyndromeType::X;
        const std::size_t g =
            (ty == SyndromeType::Z) ? code.z_basis.size() : code.x_basis.size();
        Syndrome b{BitChain::from_mask(g, bits(rng)), ty};
        auto [sx2, sz2] = syndrome_of(code, e2);
        Syndrome shifted{b.bits ^ (ty == SyndromeType::Z ? sz2 : sx2).bits, ty};
        CHECK(s_sign(code, N, e1 * e2, b) ==
              s_sign(code, N, e1, shifted) * s_sign(code, N, e2, b));
    }
}

TEST_CASE("critical syndromes of the steane model") {
    CssCode code = steane();
    const Pauli N = code.logical_z[0];
    std::size_t crit = 0;
    for (std::uint64_t m = 0; m < 8; ++m) {
        Syndrome b{BitChain::from_mask(3, m), SyndromeType::Z};
        crit += is_critical(code, N, b);
    }
    // Every nonzero syndrome sits one flip from a weight-3 logical.
    CHECK(crit == 7);
    CHECK(!is_critical(code, N, code.zero_syndrome(SyndromeType::Z)));
}
