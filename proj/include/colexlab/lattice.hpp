#pragma once

#include <cstdint>
#include <vector>

#include "colexlab/z2.hpp"

namespace colexlab {

/// Periodic hypercubic lattice in D dimensions with side length L.
/// An n-cell is identified by the set of directions it spans (a bitmask)
/// and the coordinates of its base corner, taken modulo L. Cell ids are
/// dense per dimension, ordered by (direction mask, base coordinates).
class TorusLattice {
  public:
    struct Cell {
        std::uint32_t dirs;     // spanned directions, popcount == dim
        std::vector<int> base;  // base corner, coordinates in [0, L)
    };

    TorusLattice(int D, int L);

    int D() const { return D_; }
    int L() const { return L_; }

    std::size_t cell_count(int n) const;
    Cell cell(int n, std::size_t id) const;
    std::size_t cell_id(int n, std::uint32_t dirs, const std::vector<int>& base) const;

    /// (n-1)-cells on the geometric boundary of an n-cell. Each appears
    /// once; on a torus the two opposite facets in a direction are always
    /// distinct cells.
    std::vector<std::size_t> boundary_cells(int n, std::size_t id) const;

    /// ∂_n as a matrix from n-chains to (n-1)-chains.
    Z2Matrix boundary_matrix(int n) const;

    /// Three-term complex C_{d+1} -> C_d -> C_{d-1} (groups below 0 or
    /// above D are trivial).
    ChainComplex toric_complex(int d) const;

    /// Coordinate interval [lo, lo+extent] (mod L) covered by a cell in
    /// direction u; extent is 1 when u is spanned, else 0.
    int cell_extent(int n, std::size_t id, int u) const;

  private:
    int D_, L_;
    std::vector<std::vector<std::uint32_t>> masks_;   // masks_[n]: sorted dir masks
    std::vector<std::size_t> mask_rank_; // mask -> index within its dim
    std::size_t coords_per_mask_;                     // L^D

    std::size_t coord_index(const std::vector<int>& base) const;
    std::vector<int> coords_of(std::size_t idx) const;
};

} // namespace colexlab
