#include "colexlab/css.hpp"

#include <bit>
#include <stdexcept>

namespace colexlab {

std::size_t Pauli::weight() const {
    std::size_t w = 0;
    const auto& xw = x.words();
    const auto& zw = z.words();
    for (std::size_t i = 0; i < xw.size(); ++i)
        w += static_cast<std::size_t>(std::popcount(xw[i] | zw[i]));
    return w;
}

Pauli Pauli::single(std::size_t n, std::size_t qubit, bool xbit, bool zbit) {
    Pauli p(n);
    p.x.set(qubit, xbit);
    p.z.set(qubit, zbit);
    return p;
}

bool commutes(const Pauli& P, const Pauli& Q) {
    return !(BitChain::and_parity(P.x, Q.z) ^ BitChain::and_parity(P.z, Q.x));
}

Pauli operator*(const Pauli& P, const Pauli& Q) {
    // (X^a Z^b)(X^c Z^d) = (-1)^{|b ∩ c|} X^{a+c} Z^{b+d}
    int s = P.sign * Q.sign;
    if (BitChain::and_parity(P.z, Q.x)) s = -s;
    return Pauli(P.x ^ Q.x, P.z ^ Q.z, s);
}

bool operator==(const Pauli& P, const Pauli& Q) {
    return P.sign == Q.sign && P.x == Q.x && P.z == Q.z;
}

Syndrome CssCode::zero_syndrome(SyndromeType t) const {
    const std::size_t len = (t == SyndromeType::X) ? x_basis.size() : z_basis.size();
    return Syndrome{BitChain(len), t};
}

std::optional<Pauli> CssCode::corr(const Syndrome& b) const {
    const CorrMap& m = (b.type == SyndromeType::X) ? corr_x : corr_z;
    if (!m) throw std::logic_error("CssCode: no correction map injected");
    return m(b);
}

std::pair<Syndrome, Syndrome> syndrome_of(const CssCode& code, const Pauli& E) {
    if (E.n() != code.n) throw std::invalid_argument("syndrome_of: qubit count mismatch");
    Syndrome sx{BitChain(code.x_basis.size()), SyndromeType::X};
    Syndrome sz{BitChain(code.z_basis.size()), SyndromeType::Z};
    for (std::size_t i = 0; i < code.x_basis.size(); ++i)
        sx.bits.set(i, BitChain::and_parity(code.x_gens[code.x_basis[i]].x, E.z));
    for (std::size_t i = 0; i < code.z_basis.size(); ++i)
        sz.bits.set(i, BitChain::and_parity(code.z_gens[code.z_basis[i]].z, E.x));
    return {sx, sz};
}

void finalize_generators(CssCode& code) {
    auto build = [&](const std::vector<Pauli>& gens, bool x_type,
                     std::vector<std::size_t>& basis, Z2Matrix& dep) {
        basis.clear();
        SpanBasis span(code.n);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (span.insert(x_type ? gens[i].x : gens[i].z)) basis.push_back(i);
        dep = Z2Matrix(gens.size(), basis.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            auto combo = span.coordinates(x_type ? gens[i].x : gens[i].z);
            BitChain row(basis.size());
            // coordinates() is over insert order, which only counted the
            // basis members here because dependent rows reduce to zero.
            for (std::size_t j : combo->indices()) {
                std::size_t pos = 0;
                while (basis[pos] != j) ++pos;
                row.set(pos, true);
            }
            dep.row(i) = row;
        }
    };
    build(code.x_gens, true, code.x_basis, code.x_dep);
    build(code.z_gens, false, code.z_basis, code.z_dep);
}

namespace {

// Representatives of ker(low) modulo the span of the columns of `im`; both
// maps act on chains of length n.
std::vector<BitChain> homology_reps(const Z2Matrix& low, const Z2Matrix& im) {
    SpanBasis span(low.cols());
    for (std::size_t c = 0; c < im.cols(); ++c) span.insert(im.column(c));
    std::vector<BitChain> reps;
    for (const BitChain& v : low.nullspace_basis())
        if (span.insert(v)) reps.push_back(v);
    return reps;
}

// Adjust the Z representatives so logical_x[i] anticommutes with
// logical_z[j] exactly when i = j, via the inverse of the Gram matrix.
void pair_logicals(CssCode& code, const std::vector<BitChain>& xs,
                   const std::vector<BitChain>& zs) {
    const std::size_t k = xs.size();
    if (zs.size() != k) throw std::logic_error("homology rank mismatch");
    Z2Matrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            gram.set(i, j, BitChain::and_parity(xs[i], zs[j]));
    for (std::size_t i = 0; i < k; ++i)
        code.logical_x.push_back(Pauli::x_on(code.n, xs[i]));
    for (std::size_t j = 0; j < k; ++j) {
        auto col = gram.solve(Z2Matrix::identity(k).column(j));
        if (!col) throw std::logic_error("degenerate logical pairing");
        BitChain supp(code.n);
        for (std::size_t m : col->indices()) supp ^= zs[m];
        code.logical_z.push_back(Pauli::z_on(code.n, supp));
    }
}

} // namespace

CssCode code_from_complex(const ChainComplex& cx) {
    if (cx.num_groups() != 3) throw std::invalid_argument("code_from_complex: need a three-term complex");
    CssCode code;
    code.n = cx.dim(1);
    const Z2Matrix& d1 = cx.boundary(1); // C_1 -> C_0
    const Z2Matrix& d2 = cx.boundary(2); // C_2 -> C_1
    for (std::size_t p = 0; p < cx.dim(2); ++p)
        code.x_gens.push_back(Pauli::x_on(code.n, d2.column(p)));
    for (std::size_t q = 0; q < cx.dim(0); ++q)
        code.z_gens.push_back(Pauli::z_on(code.n, d1.row(q)));
    finalize_generators(code);
    pair_logicals(code, homology_reps(d1, d2),
                  homology_reps(d2.transposed(), d1.transposed()));
    return code;
}

CssCode toric_code(int D, int L, int d) {
    TorusLattice lat(D, L);
    CssCode code = code_from_complex(lat.toric_complex(d));
    code.lattice = std::make_shared<TorusLattice>(lat);
    code.d = d;
    return code;
}

CssCode color_code(const Colex& cx, int d) {
    if (d < 0 || d > cx.D) throw std::invalid_argument("color_code: d out of range");
    const int dbar = cx.D - d;
    CssCode code;
    code.n = cx.num_vertices();
    for (const ColexCell& c : cx.cells.at(d + 1))
        code.x_gens.push_back(Pauli::x_on(code.n, cx.vertex_chain(c.verts)));
    for (const ColexCell& c : cx.cells.at(dbar + 1))
        code.z_gens.push_back(Pauli::z_on(code.n, cx.vertex_chain(c.verts)));
    finalize_generators(code);
    code.colex = std::make_shared<Colex>(cx);
    code.d = d;
    if (cx.punctured && code.k() == 1) {
        BitChain all = BitChain::from_indices(code.n, {});
        for (std::size_t i = 0; i < code.n; ++i) all.set(i, true);
        code.logical_x.push_back(Pauli::x_on(code.n, all));
        code.logical_z.push_back(Pauli::z_on(code.n, all));
    } else if (code.k() > 0) {
        Z2Matrix zmat(code.z_basis.size(), code.n), xmat(code.x_basis.size(), code.n);
        for (std::size_t i = 0; i < code.z_basis.size(); ++i)
            zmat.row(i) = code.z_gens[code.z_basis[i]].z;
        for (std::size_t i = 0; i < code.x_basis.size(); ++i)
            xmat.row(i) = code.x_gens[code.x_basis[i]].x;
        Z2Matrix xsupp(code.n, code.x_basis.size()), zsupp(code.n, code.z_basis.size());
        xsupp = xmat.transposed();
        zsupp = zmat.transposed();
        pair_logicals(code, homology_reps(zmat, xsupp), homology_reps(xmat, zsupp));
    }
    return code;
}

std::pair<Pauli, Pauli> simplicial_logicals(const CssCode& code) {
    if (!code.colex || !code.colex->punctured)
        throw std::invalid_argument("simplicial_logicals: not a punctured colex code");
    BitChain all(code.n);
    for (std::size_t i = 0; i < code.n; ++i) all.set(i, true);
    Pauli X = Pauli::x_on(code.n, all);
    Pauli Z = Pauli::z_on(code.n, all);
    for (const Pauli& g : code.x_gens)
        if (!commutes(X, g) || !commutes(Z, g))
            throw std::logic_error("simplicial logical outside the normalizer");
    for (const Pauli& g : code.z_gens)
        if (!commutes(X, g) || !commutes(Z, g))
            throw std::logic_error("simplicial logical outside the normalizer");
    return {X, Z};
}

namespace {

// Minimum weight of a pure-type logical: supports of weight <= w_max that
// commute with the opposite generators but sit outside the stabilizer span.
std::optional<std::size_t> pure_distance(std::size_t n, const std::vector<Pauli>& own,
                                         const std::vector<Pauli>& other, bool x_type,
                                         std::size_t w_max) {
    SpanBasis span(n);
    for (const Pauli& g : own) span.insert(x_type ? g.x : g.z);
    std::vector<std::size_t> pick;
    for (std::size_t w = 1; w <= w_max; ++w) {
        pick.assign(w, 0);
        for (std::size_t i = 0; i < w; ++i) pick[i] = i;
        while (true) {
            BitChain supp = BitChain::from_indices(n, pick);
            bool ok = true;
            for (const Pauli& g : other) {
                if (BitChain::and_parity(supp, x_type ? g.z : g.x)) { ok = false; break; }
            }
            if (ok && !span.contains(supp)) return w;
            std::size_t i = w;
            while (i > 0 && pick[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < w; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::size_t> distance(const CssCode& code, std::size_t w_max) {
    auto dx = pure_distance(code.n, code.x_gens, code.z_gens, true, w_max);
    auto dz = pure_distance(code.n, code.z_gens, code.x_gens, false, w_max);
    if (!dx) return dz;
    if (!dz) return dx;
    return std::min(*dx, *dz);
}

int s_sign(const CssCode& code, const Pauli& N, const Pauli& E, const Syndrome& b) {
    auto [sx, sz] = syndrome_of(code, E);
    const Syndrome shifted{b.bits ^ (b.type == SyndromeType::X ? sx.bits : sz.bits), b.type};
    auto c1 = code.corr(b);
    auto c2 = code.corr(shifted);
    if (!c1 || !c2) throw std::runtime_error("s_sign: correction map failed");
    return commutes(*c1 * E * *c2, N) ? 1 : -1;
}

bool is_critical(const CssCode& code, const Pauli& N, const Syndrome& b) {
    const auto c1 = code.corr(b);
    if (!c1) return true;
    const bool pure_z = !N.x.any();
    const bool pure_x = !N.z.any();
    for (std::size_t q = 0; q < code.n; ++q) {
        for (int t = 1; t < 4; ++t) {
            const bool xbit = t & 1, zbit = t & 2;
            // For a pure-type observable only opposite-type single-qubit
            // factors can flip the sign; the rest commute through corr.
            if (pure_z && (!xbit || zbit)) continue;
            if (pure_x && (xbit || !zbit)) continue;
            Pauli sigma = Pauli::single(code.n, q, xbit, zbit);
            auto [sx, sz] = syndrome_of(code, sigma);
            const Syndrome shifted{
                b.bits ^ (b.type == SyndromeType::X ? sx.bits : sz.bits), b.type};
            auto c2 = code.corr(shifted);
            if (!c2) return true;
            if (!commutes(*c1 * sigma * *c2, N)) return true;
        }
    }
    return false;
}

} // namespace colexlab
