#include "colexlab/colex.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace colexlab {

std::size_t Colex::num_vertices() const {
    return static_cast<std::size_t>(std::popcount(vertex_mask));
}

std::vector<std::size_t> Colex::vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < 64; ++v)
        if (vertex_mask >> v & 1) out.push_back(v);
    return out;
}

BitChain Colex::vertex_chain(std::uint64_t mask) const {
    BitChain c(num_vertices());
    std::size_t idx = 0;
    for (std::size_t v = 0; v < 64; ++v) {
        if (!(vertex_mask >> v & 1)) continue;
        if (mask >> v & 1) c.set(idx, true);
        ++idx;
    }
    return c;
}

std::vector<std::size_t> Colex::color_cells(std::uint32_t q) const {
    const int n = std::popcount(q);
    std::vector<std::size_t> out;
    const auto& layer = cells.at(n);
    for (std::size_t i = 0; i < layer.size(); ++i)
        if (layer[i].colors == q) out.push_back(i);
    return out;
}

std::vector<std::size_t> Colex::subcells(int n, std::size_t id, std::uint32_t s) const {
    const ColexCell& c = cell(n, id);
    if ((s & ~c.colors) != 0) throw std::invalid_argument("subcells: colors not a subset");
    const int m = std::popcount(s);
    std::vector<std::size_t> out;
    const auto& layer = cells.at(m);
    for (std::size_t i = 0; i < layer.size(); ++i) {
        if (layer[i].colors != s) continue;
        if ((layer[i].verts & ~c.verts) == 0) out.push_back(i);
    }
    return out;
}

std::optional<std::size_t> Colex::supercell(int n, std::size_t id, std::uint32_t r) const {
    const ColexCell& c = cell(n, id);
    if ((c.colors & ~r) != 0) throw std::invalid_argument("supercell: colors not a superset");
    const int m = std::popcount(r);
    if (m > D) return std::nullopt;
    const auto& layer = cells.at(m);
    for (std::size_t i = 0; i < layer.size(); ++i) {
        if (layer[i].colors != r) continue;
        if ((c.verts & ~layer[i].verts) == 0) return i;
    }
    return std::nullopt;
}

bool Colex::valence_ok() const {
    for (std::size_t v = 0; v < 64; ++v) {
        if (!(vertex_mask >> v & 1)) continue;
        for (std::uint32_t bit = 1; bit <= color_set; bit <<= 1) {
            if (!(color_set & bit)) continue;
            int count = 0;
            for (const ColexCell& e : cells.at(1))
                if (e.colors == bit && (e.verts >> v & 1)) ++count;
            if (count != 1) return false;
        }
    }
    return true;
}

bool Colex::is_nice() const {
    std::unordered_set<std::uint64_t> cell_verts;
    std::vector<const ColexCell*> all;
    for (const auto& layer : cells)
        for (const ColexCell& c : layer) {
            cell_verts.insert(c.verts);
            all.push_back(&c);
        }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const std::uint64_t m = all[i]->verts & all[j]->verts;
            if (m == 0 || m == all[i]->verts || m == all[j]->verts) continue;
            if (!cell_verts.count(m)) return false;
        }
    return true;
}

Colex build_hypercube_colex(int D) {
    if (D < 1 || D > 5) throw std::invalid_argument("colex dimension out of range");
    const int dirs = D + 1;
    Colex cx;
    cx.D = D;
    cx.color_set = (1u << dirs) - 1;
    const std::uint32_t nverts = 1u << dirs;
    cx.vertex_mask = (nverts == 64) ? ~0ull : ((1ull << nverts) - 1);
    cx.cells.resize(D + 1);
    for (std::uint32_t S = 0; S < (1u << dirs); ++S) {
        const int n = std::popcount(S);
        if (n > D) continue;
        for (std::uint32_t b = 0; b < nverts; ++b) {
            if (b & S) continue;
            ColexCell c;
            c.colors = S;
            // Vertices of the face: base plus any subset of the spanned
            // directions, enumerated via subset iteration over S.
            std::uint32_t t = 0;
            while (true) {
                c.verts |= 1ull << (b | t);
                if (t == S) break;
                t = (t - S) & S;
            }
            cx.cells[n].push_back(c);
        }
    }
    return cx;
}

Colex puncture(const Colex& cx) {
    Colex out;
    out.D = cx.D;
    out.color_set = cx.color_set;
    out.punctured = true;
    const std::uint64_t low = cx.vertex_mask & (~cx.vertex_mask + 1);
    out.vertex_mask = cx.vertex_mask & ~low;
    out.cells.resize(cx.cells.size());
    for (std::size_t n = 0; n < cx.cells.size(); ++n)
        for (const ColexCell& c : cx.cells[n])
            if (!(c.verts & low)) out.cells[n].push_back(c);
    return out;
}

Colex subcolex(const Colex& cx, int n, std::size_t id) {
    const ColexCell& lam = cx.cell(n, id);
    Colex out;
    out.D = n - 1;
    out.color_set = lam.colors;
    out.vertex_mask = lam.verts;
    out.punctured = cx.punctured;
    out.cells.resize(n);
    for (int m = 0; m < n; ++m)
        for (const ColexCell& c : cx.cells.at(m))
            if ((c.colors & ~lam.colors) == 0 && (c.verts & ~lam.verts) == 0)
                out.cells[m].push_back(c);
    return out;
}

} // namespace colexlab
