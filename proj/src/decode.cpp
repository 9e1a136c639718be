#include "colexlab/decode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace colexlab {

namespace {

void link(std::vector<std::vector<std::size_t>>& adj, std::size_t a, std::size_t b) {
    if (a == b) return;
    adj[a].push_back(b);
    adj[b].push_back(a);
}

void dedup(std::vector<std::vector<std::size_t>>& adj) {
    for (auto& v : adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
}

void toric_links(const CssCode& code, SyndromeType type,
                 std::vector<std::vector<std::size_t>>& adj) {
    const TorusLattice& lat = *code.lattice;
    const int d = code.d;
    const int m = (type == SyndromeType::Z) ? d - 1 : d + 1;
    if (type == SyndromeType::Z ? d >= 2 : d + 2 <= lat.D()) {
        // Nodes meet at a shared boundary cell one dimension down, or, for
        // X type, lie in the boundary of a shared cell one dimension up.
        const int via = (type == SyndromeType::Z) ? m : m + 1;
        if (type == SyndromeType::Z) {
            std::map<std::size_t, std::vector<std::size_t>> at;
            for (std::size_t i = 0; i < lat.cell_count(m); ++i)
                for (std::size_t f : lat.boundary_cells(m, i)) at[f].push_back(i);
            for (const auto& [f, cells] : at)
                for (std::size_t a = 0; a < cells.size(); ++a)
                    for (std::size_t b = a + 1; b < cells.size(); ++b)
                        link(adj, cells[a], cells[b]);
        } else {
            for (std::size_t c = 0; c < lat.cell_count(via); ++c) {
                auto faces = lat.boundary_cells(via, c);
                for (std::size_t a = 0; a < faces.size(); ++a)
                    for (std::size_t b = a + 1; b < faces.size(); ++b)
                        link(adj, faces[a], faces[b]);
            }
        }
    } else {
        // Degenerate end of the complex: nodes are linked through a shared
        // incident qubit cell.
        const auto& gens = (type == SyndromeType::Z) ? code.z_gens : code.x_gens;
        for (std::size_t q = 0; q < code.n; ++q) {
            std::vector<std::size_t> touching;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const BitChain& s = (type == SyndromeType::Z) ? gens[i].z : gens[i].x;
                if (s.get(q)) touching.push_back(i);
            }
            for (std::size_t a = 0; a < touching.size(); ++a)
                for (std::size_t b = a + 1; b < touching.size(); ++b)
                    link(adj, touching[a], touching[b]);
        }
    }
}

void color_links(const CssCode& code, SyndromeType type,
                 std::vector<std::vector<std::size_t>>& adj) {
    const Colex& cx = *code.colex;
    const int dbar = cx.D - code.d;
    const int m = (type == SyndromeType::Z) ? dbar + 1 : code.d + 1;
    const std::size_t count = cx.cell_count(m);
    if (m + 1 > cx.D) {
        // The linking cells would be the removed (D+1)-cell of the
        // punctured construction; every pair of nodes shares it.
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b)
                link(adj, a, b);
        return;
    }
    for (const ColexCell& big : cx.cells.at(m + 1)) {
        std::vector<std::size_t> inside;
        for (std::size_t i = 0; i < count; ++i) {
            const ColexCell& c = cx.cell(m, i);
            if ((c.colors & ~big.colors) == 0 && (c.verts & ~big.verts) == 0)
                inside.push_back(i);
        }
        for (std::size_t a = 0; a < inside.size(); ++a)
            for (std::size_t b = a + 1; b < inside.size(); ++b)
                link(adj, inside[a], inside[b]);
    }
}

} // namespace

ExcitationGraph excitation_graph(const CssCode& code, SyndromeType type) {
    if (!code.lattice && !code.colex)
        throw std::invalid_argument("excitation_graph: code lacks geometry");
    ExcitationGraph g;
    g.type = type;
    const auto& gens = (type == SyndromeType::Z) ? code.z_gens : code.x_gens;
    g.num_nodes = gens.size();
    g.adj.assign(g.num_nodes, {});
    if (code.lattice)
        toric_links(code, type, g.adj);
    else
        color_links(code, type, g.adj);
    dedup(g.adj);
    g.touch.assign(code.n, {});
    for (std::size_t q = 0; q < code.n; ++q)
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const BitChain& s = (type == SyndromeType::Z) ? gens[i].z : gens[i].x;
            if (s.get(q)) g.touch[q].push_back(i);
        }
    for (const auto& t : g.touch) g.lambda = std::max(g.lambda, t.size());
    for (const auto& a : g.adj) g.mu = std::max(g.mu, a.size());
    return g;
}

BitChain node_excitations(const CssCode& code, const Syndrome& b) {
    const Z2Matrix& dep = (b.type == SyndromeType::Z) ? code.z_dep : code.x_dep;
    BitChain exc(dep.rows());
    for (std::size_t i = 0; i < dep.rows(); ++i)
        exc.set(i, BitChain::and_parity(dep.row(i), b.bits));
    return exc;
}

std::vector<Cluster> cluster_decompose(const ExcitationGraph& g, const BitChain& exc) {
    std::vector<Cluster> out;
    std::vector<char> seen(g.num_nodes, 0);
    for (std::size_t s = 0; s < g.num_nodes; ++s) {
        if (!exc.get(s) || seen[s]) continue;
        Cluster cl;
        cl.node_chain = BitChain(g.num_nodes);
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            cl.nodes.push_back(u);
            cl.node_chain.set(u, true);
            for (std::size_t w : g.adj[u])
                if (exc.get(w) && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(cl.nodes.begin(), cl.nodes.end());
        out.push_back(std::move(cl));
    }
    return out;
}

bool clusters_linked(const ExcitationGraph& g, const BitChain& a, const BitChain& b) {
    for (std::size_t u = 0; u < g.num_nodes; ++u) {
        if (!a.get(u)) continue;
        if (b.get(u)) return true;
        for (std::size_t w : g.adj[u])
            if (b.get(w)) return true;
    }
    return false;
}

namespace {

struct TorusBox {
    std::vector<int> start, len;
};

// Axis-aligned bounding box of a set of cells on the torus, placed along
// the largest empty circular gap per dimension; ties go to the least
// corner coordinate. nullopt when the cells wrap some dimension fully.
std::optional<TorusBox> bounding_box(const TorusLattice& lat, int m,
                                     const std::vector<std::size_t>& cells) {
    const int D = lat.D(), L = lat.L();
    TorusBox box;
    box.start.assign(D, 0);
    box.len.assign(D, 0);
    for (int u = 0; u < D; ++u) {
        std::vector<char> occ(L, 0);
        for (std::size_t id : cells) {
            TorusLattice::Cell c = lat.cell(m, id);
            const int ext = lat.cell_extent(m, id, u);
            for (int t = 0; t <= ext; ++t) occ[(c.base[u] + t) % L] = 1;
        }
        int best_gap = 0, best_start = 0;
        for (int s = 0; s < L; ++s) {
            if (occ[s] || !occ[(s + L - 1) % L]) continue; // not a gap start
            int g = 0;
            while (g < L && !occ[(s + g) % L]) ++g;
            const int bstart = (s + g) % L;
            if (g > best_gap || (g == best_gap && bstart < best_start)) {
                best_gap = g;
                best_start = bstart;
            }
        }
        if (best_gap == 0) return std::nullopt; // every coordinate occupied
        box.start[u] = best_start;
        box.len[u] = L - best_gap;
    }
    return box;
}

bool in_box(const TorusLattice& lat, const TorusBox& box, int m, std::size_t id) {
    const int L = lat.L();
    TorusLattice::Cell c = lat.cell(m, id);
    for (int u = 0; u < lat.D(); ++u) {
        const int ext = lat.cell_extent(m, id, u);
        for (int t = 0; t <= ext; ++t) {
            const int off = ((c.base[u] + t) % L - box.start[u] + L) % L;
            if (off >= box.len[u]) return false;
        }
    }
    return true;
}

} // namespace

std::optional<Pauli> toric_box_corr(const CssCode& code, SyndromeType type,
                                    const Cluster& cluster) {
    const TorusLattice& lat = *code.lattice;
    const int d = code.d;
    const int m = (type == SyndromeType::Z) ? d - 1 : d + 1;
    auto box = bounding_box(lat, m, cluster.nodes);
    if (!box) return std::nullopt;
    const Z2Matrix full = (type == SyndromeType::Z)
                              ? lat.boundary_matrix(d)
                              : lat.boundary_matrix(d + 1).transposed();
    std::vector<std::size_t> cols;
    for (std::size_t q = 0; q < code.n; ++q)
        if (in_box(lat, *box, d, q)) cols.push_back(q);
    Z2Matrix sub(full.rows(), cols.size());
    for (std::size_t r = 0; r < full.rows(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (full.get(r, cols[c])) sub.set(r, c, true);
    auto x = sub.solve(cluster.node_chain);
    if (!x) return std::nullopt;
    BitChain supp(code.n);
    for (std::size_t c : x->indices()) supp.set(cols[c], true);
    return (type == SyndromeType::Z) ? Pauli::x_on(code.n, supp)
                                     : Pauli::z_on(code.n, supp);
}

std::optional<Pauli> toric_corr(const CssCode& code, const Syndrome& b,
                                const ExcitationGraph& g) {
    Pauli out(code.n);
    for (const Cluster& cl : cluster_decompose(g, node_excitations(code, b))) {
        auto part = toric_box_corr(code, b.type, cl);
        if (!part) return std::nullopt;
        out = out * *part;
    }
    return out;
}

namespace {

std::optional<BitChain> solve_on_support(const Z2Matrix& full,
                                         const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols,
                                         const BitChain& rhs_full) {
    Z2Matrix sub(rows.size(), cols.size());
    BitChain rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        rhs.set(r, rhs_full.get(rows[r]));
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (full.get(rows[r], cols[c])) sub.set(r, c, true);
    }
    auto x = sub.solve(rhs);
    if (!x) return std::nullopt;
    // Prefer the lightest solution in the coset while that stays cheap.
    const auto ns = sub.nullspace_basis();
    if (!ns.empty() && ns.size() <= 14) {
        BitChain best = *x;
        for (std::uint64_t m = 1; m < (1ull << ns.size()); ++m) {
            BitChain cand = *x;
            for (std::size_t i = 0; i < ns.size(); ++i)
                if (m >> i & 1) cand = cand ^ ns[i];
            if (cand.weight() < best.weight()) best = cand;
        }
        x = best;
    }
    BitChain out(full.cols());
    for (std::size_t c : x->indices()) out.set(cols[c], true);
    return out;
}

} // namespace

std::optional<Pauli> color_cluster_corr(const CssCode& code, SyndromeType type,
                                        const Cluster& cluster) {
    const Colex& cx = *code.colex;
    const int gen_dim = (type == SyndromeType::Z) ? cx.D - code.d + 1 : code.d + 1;
    const std::uint32_t q0 = cx.color_set & (~cx.color_set + 1); // first color
    const auto& gens = (type == SyndromeType::Z) ? code.z_gens : code.x_gens;
    Z2Matrix full(gens.size(), code.n);
    for (std::size_t i = 0; i < gens.size(); ++i)
        full.row(i) = (type == SyndromeType::Z) ? gens[i].z : gens[i].x;
    std::vector<std::size_t> rows_q0, rows_all;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        rows_all.push_back(i);
        if (cx.cell(gen_dim, i).colors & q0) rows_q0.push_back(i);
    }
    // Candidate supports: first the cluster's own vertex neighborhood,
    // then the whole colex when the local solve is too constrained.
    std::uint64_t hood = 0;
    for (std::size_t i : cluster.nodes) hood |= cx.cell(gen_dim, i).verts;
    for (const BitChain& verts :
         {cx.vertex_chain(hood), cx.vertex_chain(cx.vertex_mask)}) {
        std::vector<std::size_t> cols = verts.indices();
        // Stage one: kill every excitation whose colors contain q0.
        auto c1 = solve_on_support(full, rows_q0, cols, cluster.node_chain);
        if (!c1) continue;
        BitChain resid = cluster.node_chain ^ full.apply(*c1);
        // Stage two: clear the leftover color combinations without
        // re-exciting the stage-one rows.
        auto c2 = solve_on_support(full, rows_all, cols, resid);
        if (!c2) continue;
        // The stages fix a valid chain; take the lightest one in its
        // solution coset so small errors decode to themselves.
        auto best = solve_on_support(full, rows_all, cols, cluster.node_chain);
        BitChain c = (best && best->weight() < (*c1 ^ *c2).weight()) ? *best
                                                                     : (*c1 ^ *c2);
        return (type == SyndromeType::Z) ? Pauli::x_on(code.n, c)
                                         : Pauli::z_on(code.n, c);
    }
    return std::nullopt;
}

std::optional<Pauli> color_corr(const CssCode& code, const Syndrome& b) {
    const ExcitationGraph g = excitation_graph(code, b.type);
    Pauli out(code.n);
    for (const Cluster& cl : cluster_decompose(g, node_excitations(code, b))) {
        auto part = color_cluster_corr(code, b.type, cl);
        if (!part) return std::nullopt;
        out = out * *part;
    }
    return out;
}

std::optional<Pauli> toric_corr(const CssCode& code, const Syndrome& b) {
    return toric_corr(code, b, excitation_graph(code, b.type));
}

void install_toric_decoder(CssCode& code) {
    auto shared = std::make_shared<CssCode>(code);
    auto gz = std::make_shared<ExcitationGraph>(excitation_graph(code, SyndromeType::Z));
    auto gx = std::make_shared<ExcitationGraph>(excitation_graph(code, SyndromeType::X));
    code.corr_z = [shared, gz](const Syndrome& b) { return toric_corr(*shared, b, *gz); };
    code.corr_x = [shared, gx](const Syndrome& b) { return toric_corr(*shared, b, *gx); };
}

void install_color_decoder(CssCode& code) {
    auto shared = std::make_shared<CssCode>(code);
    code.corr_z = [shared](const Syndrome& b) { return color_corr(*shared, b); };
    code.corr_x = [shared](const Syndrome& b) { return color_corr(*shared, b); };
}

void install_min_weight_decoder(CssCode& code, std::size_t w_max) {
    auto key = [](const BitChain& bits) {
        std::uint64_t k = 0;
        if (!bits.words().empty()) k = bits.words()[0];
        return k;
    };
    auto build = [&](SyndromeType type) {
        const auto& basis_idx = (type == SyndromeType::Z) ? code.z_basis : code.x_basis;
        const auto& gens = (type == SyndromeType::Z) ? code.z_gens : code.x_gens;
        if (basis_idx.size() > 60)
            throw std::invalid_argument("min-weight decoder: basis too large");
        std::unordered_map<std::uint64_t, BitChain> table;
        const std::size_t n = code.n;
        std::vector<std::size_t> pick;
        BitChain zero(basis_idx.size());
        table.emplace(key(zero), BitChain(n));
        for (std::size_t w = 1; w <= w_max && table.size() < (1ull << basis_idx.size()); ++w) {
            pick.assign(w, 0);
            for (std::size_t i = 0; i < w; ++i) pick[i] = i;
            while (true) {
                BitChain supp = BitChain::from_indices(n, pick);
                BitChain synd(basis_idx.size());
                for (std::size_t i = 0; i < basis_idx.size(); ++i) {
                    const BitChain& s = (type == SyndromeType::Z) ? gens[basis_idx[i]].z
                                                                  : gens[basis_idx[i]].x;
                    synd.set(i, BitChain::and_parity(s, supp));
                }
                table.emplace(key(synd), supp);
                std::size_t i = w;
                while (i > 0 && pick[i - 1] == n - w + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < w; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return table;
    };
    auto table_z = build(SyndromeType::Z);
    auto table_x = build(SyndromeType::X);
    const std::size_t n = code.n;
    code.corr_z = [table_z, key, n](const Syndrome& b) -> std::optional<Pauli> {
        auto it = table_z.find(key(b.bits));
        if (it == table_z.end()) return std::nullopt;
        return Pauli::x_on(n, it->second);
    };
    code.corr_x = [table_x, key, n](const Syndrome& b) -> std::optional<Pauli> {
        auto it = table_x.find(key(b.bits));
        if (it == table_x.end()) return std::nullopt;
        return Pauli::z_on(n, it->second);
    };
}

std::size_t count_connected(const ExcitationGraph& g, std::size_t node, std::size_t l) {
    if (l == 0) return 0;
    if (l == 1) return 1;
    std::size_t count = 0;
    std::vector<char> mark(g.num_nodes, 0);
    std::vector<std::size_t> chosen{node};
    mark[node] = 1;
    std::vector<std::size_t> ext;
    for (std::size_t w : g.adj[node]) {
        mark[w] = 1;
        ext.push_back(w);
    }
    // Each connected superset is produced once: a popped candidate stays
    // marked, so later branches at the same level cannot re-add it.
    auto rec = [&](auto&& self, std::vector<std::size_t> frontier) -> void {
        if (chosen.size() == l) {
            ++count;
            return;
        }
        while (!frontier.empty()) {
            std::size_t u = frontier.back();
            frontier.pop_back();
            std::vector<std::size_t> added;
            std::vector<std::size_t> next = frontier;
            for (std::size_t w : g.adj[u])
                if (!mark[w]) {
                    mark[w] = 1;
                    next.push_back(w);
                    added.push_back(w);
                }
            chosen.push_back(u);
            self(self, std::move(next));
            chosen.pop_back();
            for (std::size_t w : added) mark[w] = 0;
        }
    };
    rec(rec, ext);
    return count;
}

double peierls_bound(double gamma_size, double nu, double xi, double L,
                     double lambda, double mu, double beta, double t_min) {
    const double delta = beta * t_min - mu * std::log(2.0);
    if (delta <= 0.0)
        throw std::domain_error("peierls_bound: above critical temperature");
    const double lmin = std::ceil(xi * L / (lambda * mu));
    return std::pow(gamma_size, 2.0 * nu) * std::exp(-delta * lmin) /
           (1.0 - std::exp(-delta));
}

ConditionsReport verify_conditions(int D, int d, const std::vector<int>& Ls,
                                   std::size_t pairs, std::uint64_t seed) {
    ConditionsReport rep;
    std::vector<CssCode> codes;
    for (int L : Ls) {
        CssCode code = toric_code(D, L, d);
        install_toric_decoder(code);
        const ExcitationGraph g = excitation_graph(code, SyndromeType::Z);
        rep.rows.push_back(ConditionsRow{L, g.lambda, g.mu});
        codes.push_back(std::move(code));
    }
    rep.lambda_constant = rep.mu_constant = true;
    for (const ConditionsRow& r : rep.rows) {
        rep.lambda_constant = rep.lambda_constant && r.lambda == rep.rows[0].lambda;
        rep.mu_constant = rep.mu_constant && r.mu == rep.rows[0].mu;
    }
    const CssCode& code = codes.back();
    const ExcitationGraph g = excitation_graph(code, SyndromeType::Z);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_q(0, code.n - 1);
    rep.factorization_ok = true;
    std::size_t done = 0, attempts = 0;
    while (done < pairs && attempts < pairs * 100) {
        ++attempts;
        Pauli e1(code.n), e2(code.n);
        e1.x.set(pick_q(rng), true);
        e2.x.set(pick_q(rng), true);
        const Syndrome b1 = syndrome_of(code, e1).second;
        const Syndrome b2 = syndrome_of(code, e2).second;
        const BitChain exc1 = node_excitations(code, b1);
        const BitChain exc2 = node_excitations(code, b2);
        if (!exc1.any() || !exc2.any()) continue;
        if (clusters_linked(g, exc1, exc2)) continue;
        const Syndrome sum{b1.bits ^ b2.bits, SyndromeType::Z};
        auto c12 = code.corr(sum);
        auto c1 = code.corr(b1);
        auto c2 = code.corr(b2);
        if (!c12 || !c1 || !c2) {
            rep.factorization_ok = false;
            break;
        }
        if (!(*c12 == *c1 * *c2)) rep.factorization_ok = false;
        ++done;
    }
    rep.factorization_checked = done;
    return rep;
}

} // namespace colexlab
