#include "colexlab/z2.hpp"

#include <stdexcept>
#include <string>

namespace colexlab {

Z2Matrix::Z2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_(rows, BitChain(cols)) {}

Z2Matrix Z2Matrix::identity(std::size_t n) {
    Z2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitChain Z2Matrix::column(std::size_t c) const {
    BitChain out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (row_[r].get(c))
            out.set(r, true);
    return out;
}

BitChain Z2Matrix::apply(const BitChain& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("Z2Matrix::apply: vector length " +
                                    std::to_string(x.size()) + " != cols " +
                                    std::to_string(cols_));
    BitChain out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (BitChain::and_parity(row_[r], x))
            out.set(r, true);
    return out;
}

Z2Matrix Z2Matrix::transposed() const {
    Z2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_[r].indices())
            t.set(c, r, true);
    return t;
}

Z2Matrix Z2Matrix::multiplied(const Z2Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("Z2Matrix::multiplied: shape mismatch");
    Z2Matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k : row_[r].indices())
            out.row(r) ^= o.row(k);
    return out;
}

bool Z2Matrix::is_zero() const {
    for (const auto& r : row_)
        if (r.any())
            return false;
    return true;
}

std::size_t Z2Matrix::rank() const {
    std::vector<BitChain> work(row_);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work[pivot].get(c))
            ++pivot;
        if (pivot == rows_)
            continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != rank && work[r].get(c))
                work[r] ^= work[rank];
        ++rank;
    }
    return rank;
}

std::optional<BitChain> Z2Matrix::solve(const BitChain& b) const {
    if (b.size() != rows_)
        throw std::invalid_argument("Z2Matrix::solve: rhs length " +
                                    std::to_string(b.size()) + " != rows " +
                                    std::to_string(rows_));
    std::vector<BitChain> work(row_);
    std::vector<char> rhs(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        rhs[r] = b.get(r);
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work[pivot].get(c))
            ++pivot;
        if (pivot == rows_)
            continue;
        std::swap(work[rank], work[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && work[r].get(c)) {
                work[r] ^= work[rank];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows_; ++r)
        if (rhs[r])
            return std::nullopt;
    BitChain x(cols_);
    for (std::size_t r = 0; r < rank; ++r)
        if (rhs[r])
            x.set(pivot_col[r], true);
    return x;
}

std::vector<BitChain> Z2Matrix::nullspace_basis() const {
    std::vector<BitChain> work(row_);
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work[pivot].get(c))
            ++pivot;
        if (pivot == rows_)
            continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != rank && work[r].get(c))
                work[r] ^= work[rank];
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;
    std::vector<BitChain> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        BitChain v(cols_);
        v.set(free, true);
        for (std::size_t r = 0; r < rank; ++r)
            if (work[r].get(free))
                v.set(pivot_col[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool SpanBasis::insert(const BitChain& v) {
    if (v.size() != width_)
        throw std::invalid_argument("SpanBasis::insert: width mismatch");
    BitChain cur(v);
    std::vector<std::size_t> combo{inserted_};
    ++inserted_;
    for (const Row& r : rows_) {
        if (cur.get(r.pivot)) {
            cur ^= r.vec;
            combo.insert(combo.end(), r.combo.begin(), r.combo.end());
        }
    }
    if (!cur.any())
        return false;
    rows_.push_back(Row{std::move(cur), std::move(combo), 0});
    rows_.back().pivot = rows_.back().vec.lowest();
    return true;
}

BitChain SpanBasis::residual(const BitChain& v) const {
    BitChain cur(v);
    for (const Row& r : rows_)
        if (cur.get(r.pivot))
            cur ^= r.vec;
    return cur;
}

bool SpanBasis::contains(const BitChain& v) const {
    return !residual(v).any();
}

std::optional<BitChain> SpanBasis::coordinates(const BitChain& v) const {
    BitChain cur(v);
    BitChain combo(inserted_);
    for (const Row& r : rows_) {
        if (cur.get(r.pivot)) {
            cur ^= r.vec;
            for (std::size_t i : r.combo)
                combo.flip(i);
        }
    }
    if (cur.any())
        return std::nullopt;
    return combo;
}

ChainComplex::ChainComplex(std::vector<std::size_t> dims,
                           std::vector<Z2Matrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (boundaries_.size() + 1 != dims_.size())
        throw std::invalid_argument("ChainComplex: need one boundary per "
                                    "consecutive group pair");
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (boundaries_[i].rows() != dims_[i] || boundaries_[i].cols() != dims_[i + 1])
            throw std::invalid_argument("ChainComplex: boundary " +
                                        std::to_string(i + 1) + " has wrong shape");
    }
    for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i) {
        if (!boundaries_[i].multiplied(boundaries_[i + 1]).is_zero())
            throw std::invalid_argument("ChainComplex: boundary composition "
                                        "is nonzero at index " + std::to_string(i + 1));
    }
}

const Z2Matrix& ChainComplex::boundary(std::size_t i) const {
    if (i == 0 || i >= dims_.size())
        throw std::out_of_range("ChainComplex::boundary index out of range");
    return boundaries_[i - 1];
}

HomologySummary ChainComplex::homology(std::size_t i) const {
    if (i == 0 || i + 1 > dims_.size() || i >= dims_.size())
        throw std::out_of_range("ChainComplex::homology index out of range");
    std::size_t cycle_rank = dims_[i] - boundary(i).rank();
    std::size_t boundary_rank = (i + 1 < dims_.size()) ? boundary(i + 1).rank() : 0;
    return HomologySummary{cycle_rank, boundary_rank, cycle_rank - boundary_rank};
}

ChainComplex ChainComplex::dualized() const {
    std::size_t m = dims_.size();
    std::vector<std::size_t> dual_dims(dims_.rbegin(), dims_.rend());
    std::vector<Z2Matrix> dual_bnd;
    for (std::size_t j = 0; j + 1 < m; ++j)
        dual_bnd.push_back(boundaries_[m - 2 - j].transposed());
    return ChainComplex(std::move(dual_dims), std::move(dual_bnd));
}

} // namespace colexlab
