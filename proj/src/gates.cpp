#include "colexlab/gates.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace colexlab {

std::vector<BitChain> boundary_group_generators(const Colex& cx, int j) {
    if (cx.punctured)
        throw std::invalid_argument("goodness is defined on closed colexes");
    if (j < 0 || j > cx.D) throw std::invalid_argument("boundary generators: j out of range");
    std::vector<BitChain> out;
    if (j == cx.D) {
        // The (D+1)-cell the closed colex bounds.
        out.push_back(cx.vertex_chain(cx.vertex_mask));
        return out;
    }
    for (const ColexCell& c : cx.cells.at(j + 1))
        out.push_back(cx.vertex_chain(c.verts));
    return out;
}

namespace {

constexpr std::size_t kEnumCap = 1u << 24;
constexpr std::size_t kSampleDraws = 1000000;
constexpr std::uint64_t kSampleSeed = 0x60041ab5u;

bool bad_weight(const BitChain& c, int k) {
    return c.weight() % (std::size_t{1} << (k + 1)) != 0;
}

// Search the subgroup for an element of weight not divisible by 2^{k+1}:
// generators, then generator pairs, then full Gray-code enumeration when
// the span is small enough, else uniform random combinations.
struct SpanSearch {
    std::vector<BitChain> basis;
    bool sampled = false;
    std::optional<BitChain> witness;

    SpanSearch(const std::vector<BitChain>& gens, int k, std::size_t width) {
        SpanBasis span(width);
        for (const BitChain& g : gens)
            if (span.insert(g)) basis.push_back(g);
        for (const BitChain& g : gens)
            if (bad_weight(g, k)) {
                witness = g;
                return;
            }
        for (std::size_t a = 0; a < gens.size() && !witness; ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b) {
                BitChain c = gens[a] ^ gens[b];
                if (c.any() && bad_weight(c, k)) {
                    witness = c;
                    return;
                }
            }
        const std::size_t r = basis.size();
        if (r < 24 || (std::size_t{1} << r) <= kEnumCap) {
            BitChain cur(width);
            for (std::uint64_t i = 1; i < (std::uint64_t{1} << r); ++i) {
                cur ^= basis[std::countr_zero(i)];
                if (bad_weight(cur, k)) {
                    witness = cur;
                    return;
                }
            }
        } else {
            sampled = true;
            if (r > 63) throw std::logic_error("subgroup rank beyond sampling support");
            std::mt19937_64 rng(kSampleSeed);
            for (std::size_t it = 0; it < kSampleDraws; ++it) {
                std::uint64_t mask = rng() & ((std::uint64_t{1} << r) - 1);
                BitChain c(width);
                while (mask) {
                    c ^= basis[std::countr_zero(mask)];
                    mask &= mask - 1;
                }
                if (c.any() && bad_weight(c, k)) {
                    witness = c;
                    return;
                }
            }
        }
    }
};

} // namespace

GoodnessCertificate is_good_bruteforce(const Colex& cx, int j, int k) {
    GoodnessCertificate cert;
    cert.j = j;
    cert.k = k;
    SpanSearch search(boundary_group_generators(cx, j), k, cx.num_vertices());
    cert.method = search.sampled ? "sampled" : "enumeration";
    cert.verdict = !search.witness;
    cert.witness = search.witness;
    return cert;
}

GoodnessCertificate is_good_theorem(const Colex& cx, int j, int k) {
    GoodnessCertificate cert;
    cert.j = j;
    cert.k = k;
    cert.method = "theorem";
    auto fail = [&]() {
        cert.verdict = false;
        SpanSearch search(boundary_group_generators(cx, j), k, cx.num_vertices());
        cert.witness = search.witness;
        return cert;
    };
    if (k == 0) {
        cert.verdict = true;
        return cert;
    }
    const int jp = 2 * j - cx.D;
    if (jp < 0) return fail();
    if (j == cx.D) {
        if (cx.num_vertices() % (std::size_t{1} << (k + 1)) != 0) return fail();
        if (!is_good_theorem(cx, jp, k - 1).verdict) return fail();
        cert.verdict = true;
        return cert;
    }
    for (const ColexCell& lam : cx.cells.at(j + 1))
        if (static_cast<std::size_t>(std::popcount(lam.verts)) %
                (std::size_t{1} << (k + 1)) !=
            0)
            return fail();
    for (std::size_t id = 0; id < cx.cell_count(j + 1); ++id)
        if (!is_good_theorem(subcolex(cx, j + 1, id), jp, k - 1).verdict)
            return fail();
    cert.verdict = true;
    return cert;
}

int min_dimension(int d_bar, int k) {
    if (d_bar < 1 || k < 0) throw std::invalid_argument("min_dimension: bad arguments");
    return (k + 1) * d_bar;
}

BitChain restrict_chain(const Colex& cx, const ColexCell& lam, const BitChain& c) {
    const auto verts = cx.vertices();
    BitChain out(static_cast<std::size_t>(std::popcount(lam.verts)));
    std::size_t idx = 0;
    for (std::size_t v = 0; v < 64; ++v) {
        if (!(lam.verts >> v & 1)) continue;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == v && c.get(i)) out.set(idx, true);
        ++idx;
    }
    return out;
}

BitChain lift_generator(const Colex& cx, const ColexCell& lam, const ColexCell& nu) {
    const std::uint32_t q = cx.color_set & ~(lam.colors & ~nu.colors);
    const int m = std::popcount(q);
    for (std::size_t i = 0; i < cx.cell_count(m); ++i) {
        const ColexCell& c = cx.cell(m, i);
        if (c.colors == q && (nu.verts & ~c.verts) == 0) return cx.vertex_chain(c.verts);
    }
    throw std::logic_error("lift_generator: supercell not found");
}

PhasedPauli phased(const Pauli& p) {
    return PhasedPauli{p.x, p.z, p.sign == 1 ? 0 : 2};
}

PhasedPauli pp_mul(const PhasedPauli& a, const PhasedPauli& b) {
    PhasedPauli out{a.x ^ b.x, a.z ^ b.z,
                    (a.phase + b.phase + 2 * BitChain::and_parity(a.z, b.x)) & 3};
    return out;
}

bool pp_equal(const PhasedPauli& a, const PhasedPauli& b) {
    return a.phase == b.phase && a.x == b.x && a.z == b.z;
}

PhasedPauli conjugate(const PhasedPauli& row, TransversalGate gate) {
    PhasedPauli r = row;
    switch (gate) {
    case TransversalGate::AllX:
        r.phase = (r.phase + 2 * (r.z.weight() & 1)) & 3;
        return r;
    case TransversalGate::AllZ:
        r.phase = (r.phase + 2 * (r.x.weight() & 1)) & 3;
        return r;
    case TransversalGate::AllH:
        r.phase = (r.phase + 2 * (BitChain::and_weight(r.x, r.z) & 1)) & 3;
        std::swap(r.x, r.z);
        return r;
    case TransversalGate::AllR1:
        r.phase = (r.phase + static_cast<int>(r.x.weight() & 3)) & 3;
        r.z ^= r.x;
        return r;
    case TransversalGate::PairCnot: {
        const std::size_t n2 = r.n();
        if (n2 % 2) throw std::invalid_argument("PairCnot: odd qubit count");
        const std::size_t n = n2 / 2;
        for (std::size_t i = 0; i < n; ++i) {
            // In the X-before-Z convention the generator images multiply
            // back into canonical order, so no phase appears.
            const bool xc = r.x.get(i), zc = r.z.get(i);
            const bool xt = r.x.get(i + n), zt = r.z.get(i + n);
            r.x.set(i + n, xt ^ xc);
            r.z.set(i, zc ^ zt);
        }
        return r;
    }
    }
    throw std::invalid_argument("unsupported gate");
}

namespace {

BitChain symplectic(const PhasedPauli& p) {
    const std::size_t n = p.n();
    BitChain v(2 * n);
    for (std::size_t i : p.x.indices()) v.set(i, true);
    for (std::size_t i : p.z.indices()) v.set(n + i, true);
    return v;
}

PhasedPauli widen(const Pauli& p, std::size_t total, std::size_t offset) {
    PhasedPauli out{BitChain(total), BitChain(total), p.sign == 1 ? 0 : 2};
    for (std::size_t i : p.x.indices()) out.x.set(offset + i, true);
    for (std::size_t i : p.z.indices()) out.z.set(offset + i, true);
    return out;
}

} // namespace

LogicalAction apply_transversal_clifford(const CssCode& code, TransversalGate gate) {
    const bool doubled = gate == TransversalGate::PairCnot;
    const std::size_t n = doubled ? 2 * code.n : code.n;
    std::vector<PhasedPauli> stab, logi;
    auto add = [&](const Pauli& p, std::vector<PhasedPauli>& dst) {
        dst.push_back(widen(p, n, 0));
        if (doubled) dst.push_back(widen(p, n, code.n));
    };
    for (std::size_t i : code.x_basis) add(code.x_gens[i], stab);
    for (std::size_t i : code.z_basis) add(code.z_gens[i], stab);
    for (const Pauli& p : code.logical_x) add(p, logi);
    for (const Pauli& p : code.logical_z) add(p, logi);

    LogicalAction act;
    act.stabilizer_preserved = true;
    SpanBasis stab_span(2 * n);
    for (const PhasedPauli& s : stab) stab_span.insert(symplectic(s));
    auto product_of = [&](const BitChain& combo,
                          const std::vector<PhasedPauli>& rows) {
        PhasedPauli acc{BitChain(n), BitChain(n), 0};
        for (std::size_t i : combo.indices()) acc = pp_mul(acc, rows[i]);
        return acc;
    };
    for (const PhasedPauli& s : stab) {
        const PhasedPauli img = conjugate(s, gate);
        auto combo = stab_span.coordinates(symplectic(img));
        if (!combo || !pp_equal(product_of(*combo, stab), img)) {
            act.stabilizer_preserved = false;
            return act;
        }
    }
    std::vector<PhasedPauli> all = stab;
    all.insert(all.end(), logi.begin(), logi.end());
    SpanBasis full_span(2 * n);
    for (const PhasedPauli& r : all) full_span.insert(symplectic(r));
    for (const PhasedPauli& l : logi) {
        const PhasedPauli img = conjugate(l, gate);
        auto combo = full_span.coordinates(symplectic(img));
        if (!combo) {
            act.stabilizer_preserved = false;
            return act;
        }
        const PhasedPauli prod = product_of(*combo, all);
        BitChain limage(logi.size());
        for (std::size_t i : combo->indices())
            if (i >= stab.size()) limage.set(i - stab.size(), true);
        act.images.push_back(limage);
        act.phases.push_back((img.phase - prod.phase + 4) & 3);
    }
    return act;
}

bool check_transversal_clifford(const CssCode& code, TransversalGate gate) {
    return apply_transversal_clifford(code, gate).stabilizer_preserved;
}

RkResult apply_transversal_rk(const CssCode& code, int k) {
    if (code.n > 15) throw std::invalid_argument("apply_transversal_rk: n too large");
    if (code.k() != 1 || code.logical_x.empty())
        throw std::invalid_argument("apply_transversal_rk: need one logical qubit");
    const std::size_t n = code.n;
    const std::size_t dim = std::size_t{1} << n;
    using cd = std::complex<double>;
    // Codewords of |0>: the span of the X-generator supports.
    std::vector<std::size_t> words;
    {
        std::vector<BitChain> basis;
        SpanBasis span(n);
        for (std::size_t i : code.x_basis)
            if (span.insert(code.x_gens[i].x)) basis.push_back(code.x_gens[i].x);
        const std::size_t r = basis.size();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) {
            BitChain c(n);
            for (std::uint64_t b = m; b;) {
                c ^= basis[std::countr_zero(b)];
                b &= b - 1;
            }
            words.push_back(c.words().empty() ? 0 : c.words()[0]);
        }
    }
    const std::size_t xbar =
        code.logical_x[0].x.words().empty() ? 0 : code.logical_x[0].x.words()[0];
    const double amp = 1.0 / std::sqrt(static_cast<double>(words.size()));
    std::vector<cd> v0(dim, cd{}), v1(dim, cd{});
    for (std::size_t w : words) {
        v0[w] = amp;
        v1[w ^ xbar] = amp;
    }
    const double theta = std::numbers::pi / static_cast<double>(1 << k);
    for (std::size_t i = 0; i < dim; ++i) {
        const cd ph = std::polar(1.0, theta * std::popcount(i));
        v0[i] *= ph;
        v1[i] *= ph;
    }
    auto inner = [&](const std::vector<std::size_t>& ws, std::size_t shift,
                     const std::vector<cd>& v) {
        cd acc{};
        for (std::size_t w : ws) acc += amp * v[w ^ shift];
        return acc;
    };
    const cd a00 = inner(words, 0, v0), a10 = inner(words, xbar, v0);
    const cd a01 = inner(words, 0, v1), a11 = inner(words, xbar, v1);
    auto residual = [&](const std::vector<cd>& v, cd c0, cd c1) {
        double acc = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            cd r = v[i];
            acc += std::norm(r);
        }
        return acc - std::norm(c0) - std::norm(c1);
    };
    RkResult res;
    const double tol = 1e-8;
    res.preserved = residual(v0, a00, a10) < tol && residual(v1, a01, a11) < tol &&
                    std::abs(a10) < tol && std::abs(a01) < tol;
    if (res.preserved) {
        const cd rel = a11 / a00;
        const int mod = 1 << (k + 1);
        res.s = static_cast<int>(std::lround(std::arg(rel) / theta)) % mod;
        if (res.s < 0) res.s += mod;
    }
    return res;
}

int transversal_measure(const CssCode& code, SyndromeType basis, int value,
                        const Pauli& E, std::uint64_t seed) {
    const bool zbasis = basis == SyndromeType::Z;
    const auto& span_gens = zbasis ? code.x_gens : code.z_gens;
    const auto& span_idx = zbasis ? code.x_basis : code.z_basis;
    const Pauli& logical = zbasis ? code.logical_z[0] : code.logical_x[0];
    const Pauli& flip = zbasis ? code.logical_x[0] : code.logical_z[0];
    std::mt19937_64 rng(seed);
    BitChain m(code.n);
    for (std::size_t i : span_idx)
        if (rng() & 1) m ^= zbasis ? span_gens[i].x : span_gens[i].z;
    if (value == -1) m ^= zbasis ? flip.x : flip.z;
    m ^= zbasis ? E.x : E.z;
    // Stabilizer parities extracted from the classical outcomes.
    const auto& meas_idx = zbasis ? code.z_basis : code.x_basis;
    const auto& meas_gens = zbasis ? code.z_gens : code.x_gens;
    Syndrome b{BitChain(meas_idx.size()), zbasis ? SyndromeType::Z : SyndromeType::X};
    for (std::size_t j = 0; j < meas_idx.size(); ++j) {
        const BitChain& supp = zbasis ? meas_gens[meas_idx[j]].z : meas_gens[meas_idx[j]].x;
        b.bits.set(j, BitChain::and_parity(supp, m));
    }
    auto c = code.corr(b);
    if (!c) throw std::runtime_error("transversal_measure: oversize component");
    m ^= zbasis ? c->x : c->z;
    const BitChain& lsupp = zbasis ? logical.z : logical.x;
    return BitChain::and_parity(lsupp, m) ? -1 : 1;
}

} // namespace colexlab
