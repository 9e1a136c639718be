#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "colexlab/bitchain.hpp"

namespace colexlab {

/// Dense bit matrix over GF(2), row major.
class Z2Matrix {
  public:
    Z2Matrix() = default;
    Z2Matrix(std::size_t rows, std::size_t cols);

    static Z2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { row_[r].flip(c); }

    const BitChain& row(std::size_t r) const { return row_[r]; }
    BitChain& row(std::size_t r) { return row_[r]; }

    BitChain column(std::size_t c) const;

    /// M x, with x a column vector of length cols().
    BitChain apply(const BitChain& x) const;

    Z2Matrix transposed() const;
    Z2Matrix multiplied(const Z2Matrix& o) const;
    bool is_zero() const;

    std::size_t rank() const;

    /// Some x with Mx = b, free variables pinned to 0, columns pivoted in
    /// index order so the result is deterministic. nullopt when unsolvable.
    std::optional<BitChain> solve(const BitChain& b) const;

    /// Independent spanning set of ker M, size cols() - rank().
    std::vector<BitChain> nullspace_basis() const;

    bool operator==(const Z2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitChain> row_;
};

/// Incremental row-echelon basis with combination tracking: each inserted
/// vector gets an index, and coordinates() expresses a vector as an xor of
/// previously inserted ones.
class SpanBasis {
  public:
    explicit SpanBasis(std::size_t width) : width_(width) {}

    /// Returns true when v enlarges the span.
    bool insert(const BitChain& v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }

    bool contains(const BitChain& v) const;

    /// Combination over inserted-vector indices reproducing v, or nullopt
    /// when v is outside the span.
    std::optional<BitChain> coordinates(const BitChain& v) const;

    /// The reduced vector left after elimination against the basis.
    BitChain residual(const BitChain& v) const;

  private:
    struct Row {
        BitChain vec;
        std::vector<std::size_t> combo; // indices of inserted vectors
        std::size_t pivot;
    };
    std::size_t width_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
};

struct HomologySummary {
    std::size_t cycle_rank;
    std::size_t boundary_rank;
    std::size_t betti; // cycle_rank - boundary_rank
};

/// Sequence of Z2 chain groups with boundary maps composing to zero.
/// boundary(i) maps dimension-i chains to dimension-(i-1) chains.
class ChainComplex {
  public:
    ChainComplex(std::vector<std::size_t> dims, std::vector<Z2Matrix> boundaries);

    std::size_t num_groups() const { return dims_.size(); }
    std::size_t dim(std::size_t i) const { return dims_.at(i); }
    const std::vector<std::size_t>& dims() const { return dims_; }

    /// ∂_i : C_i -> C_{i-1}, valid for 1 <= i < num_groups().
    const Z2Matrix& boundary(std::size_t i) const;

    HomologySummary homology(std::size_t i) const;

    ChainComplex dualized() const;

    bool operator==(const ChainComplex& o) const {
        return dims_ == o.dims_ && boundaries_ == o.boundaries_;
    }

  private:
    std::vector<std::size_t> dims_;
    std::vector<Z2Matrix> boundaries_; // boundaries_[i] = ∂_{i+1}
};

} // namespace colexlab
