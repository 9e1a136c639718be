#include "colexlab/lattice.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace colexlab {

TorusLattice::TorusLattice(int D, int L) : D_(D), L_(L) {
    if (D < 1)
        throw std::invalid_argument("TorusLattice: D must be >= 1");
    if (L < 2)
        throw std::invalid_argument("TorusLattice: L must be >= 2 "
                                    "(wraparound is degenerate below that)");
    masks_.resize(D + 1);
    mask_rank_.assign(1u << D, 0);
    for (std::uint32_t m = 0; m < (1u << D); ++m) {
        int n = std::popcount(m);
        mask_rank_[m] = masks_[n].size();
        masks_[n].push_back(m);
    }
    coords_per_mask_ = 1;
    for (int i = 0; i < D; ++i)
        coords_per_mask_ *= static_cast<std::size_t>(L);
}

std::size_t TorusLattice::coord_index(const std::vector<int>& base) const {
    std::size_t idx = 0;
    for (int i = 0; i < D_; ++i)
        idx = idx * static_cast<std::size_t>(L_) + static_cast<std::size_t>(base[i]);
    return idx;
}

std::vector<int> TorusLattice::coords_of(std::size_t idx) const {
    std::vector<int> base(D_);
    for (int i = D_ - 1; i >= 0; --i) {
        base[i] = static_cast<int>(idx % L_);
        idx /= L_;
    }
    return base;
}

std::size_t TorusLattice::cell_count(int n) const {
    if (n < 0 || n > D_)
        return 0;
    return masks_[n].size() * coords_per_mask_;
}

TorusLattice::Cell TorusLattice::cell(int n, std::size_t id) const {
    if (n < 0 || n > D_ || id >= cell_count(n))
        throw std::out_of_range("TorusLattice::cell: bad id");
    Cell c;
    c.dirs = masks_[n][id / coords_per_mask_];
    c.base = coords_of(id % coords_per_mask_);
    return c;
}

std::size_t TorusLattice::cell_id(int n, std::uint32_t dirs,
                                  const std::vector<int>& base) const {
    if (std::popcount(dirs) != n)
        throw std::invalid_argument("cell_id: mask does not match dimension");
    return mask_rank_[dirs] * coords_per_mask_ + coord_index(base);
}

std::vector<std::size_t> TorusLattice::boundary_cells(int n, std::size_t id) const {
    Cell c = cell(n, id);
    std::vector<std::size_t> out;
    for (int u = 0; u < D_; ++u) {
        if (!(c.dirs & (1u << u)))
            continue;
        std::uint32_t facet = c.dirs & ~(1u << u);
        out.push_back(cell_id(n - 1, facet, c.base));
        std::vector<int> shifted(c.base);
        shifted[u] = (shifted[u] + 1) % L_;
        out.push_back(cell_id(n - 1, facet, shifted));
    }
    return out;
}

Z2Matrix TorusLattice::boundary_matrix(int n) const {
    if (n < 1 || n > D_)
        throw std::out_of_range("TorusLattice::boundary_matrix: n out of range");
    Z2Matrix m(cell_count(n - 1), cell_count(n));
    for (std::size_t id = 0; id < cell_count(n); ++id)
        for (std::size_t f : boundary_cells(n, id))
            m.flip(f, id);
    return m;
}

ChainComplex TorusLattice::toric_complex(int d) const {
    if (d < 0 || d > D_)
        throw std::out_of_range("TorusLattice::toric_complex: d out of range");
    std::size_t lo = (d >= 1) ? cell_count(d - 1) : 0;
    std::size_t hi = (d + 1 <= D_) ? cell_count(d + 1) : 0;
    Z2Matrix bd_d = (d >= 1) ? boundary_matrix(d) : Z2Matrix(0, cell_count(d));
    Z2Matrix bd_up = (d + 1 <= D_) ? boundary_matrix(d + 1) : Z2Matrix(cell_count(d), 0);
    return ChainComplex({lo, cell_count(d), hi}, {std::move(bd_d), std::move(bd_up)});
}

int TorusLattice::cell_extent(int n, std::size_t id, int u) const {
    Cell c = cell(n, id);
    return (c.dirs & (1u << u)) ? 1 : 0;
}

} // namespace colexlab
