#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colexlab/bitchain.hpp"

namespace colexlab {

/// One cell of a colex: its color subset and its vertex set, both as
/// bitmasks. Vertices live in a shared index space of at most 64 slots so
/// subcolexes can keep their parent's vertex labels.
struct ColexCell {
    std::uint32_t colors = 0;
    std::uint64_t verts = 0;
};

/// A colored cell lattice whose dual is a simplicial lattice with
/// (D+1)-colored vertices. Only hypercube-derived colexes (closed,
/// punctured, and their subcolexes) are constructed here.
class Colex {
  public:
    int D = 0;                    // lattice dimension
    std::uint32_t color_set = 0;  // available colors, |color_set| == D+1
    std::uint64_t vertex_mask = 0;
    bool punctured = false;
    std::vector<std::vector<ColexCell>> cells; // cells[n] for n = 0..D

    std::size_t num_vertices() const;
    std::vector<std::size_t> vertices() const; // ascending vertex slots

    /// Map a vertex mask to a BitChain over the colex's vertices in
    /// ascending slot order (the qubit numbering used by color codes).
    BitChain vertex_chain(std::uint64_t mask) const;

    const ColexCell& cell(int n, std::size_t id) const { return cells.at(n).at(id); }
    std::size_t cell_count(int n) const { return cells.at(n).size(); }

    /// Ids of n-cells with exactly the color subset q, |q| == n.
    std::vector<std::size_t> color_cells(std::uint32_t q) const;

    /// Subcells of a cell with color subset s (s a subset of the cell's
    /// colors); returns ids into cells[|s|].
    std::vector<std::size_t> subcells(int n, std::size_t id, std::uint32_t s) const;

    /// The unique r-cell containing the given cell, r a superset of its
    /// colors. nullopt when absent (possible in punctured colexes).
    std::optional<std::size_t> supercell(int n, std::size_t id, std::uint32_t r) const;

    /// Every vertex is (D+1)-valent with one edge of each color.
    bool valence_ok() const;

    /// Pairwise cell intersections (in the colored sense) have at most one
    /// element.
    bool is_nice() const;
};

Colex build_hypercube_colex(int D);

/// Remove the lowest vertex and every cell containing it.
Colex puncture(const Colex& cx);

/// The (n-1)-colex forming the boundary of an n-cell, colors restricted to
/// the cell's color set. Vertex slots are shared with the parent.
Colex subcolex(const Colex& cx, int n, std::size_t id);

} // namespace colexlab
