#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hlmaj {

/// Sparse vector as (column, value) pairs, sorted by column, no zeros.
using SparseVec = std::vector<std::pair<int, mpq_class>>;

SparseVec sparse_from_dense(const std::vector<mpq_class>& dense);

/// Incremental row echelon form over Q. Rows are stored sparse with a
/// leading 1; pivots are restricted to columns below `pivot_limit`, so the
/// trailing columns can carry bookkeeping that is never eliminated.
class Echelon {
public:
    explicit Echelon(std::size_t width) : Echelon(width, width) {}
    Echelon(std::size_t width, std::size_t pivot_limit);

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    /// Subtracts row multiples so that every pivot column of `dense` is 0.
    void reduce(std::vector<mpq_class>& dense) const;
    /// Reduces, then adds the remainder as a new row if it is nonzero in
    /// the pivot range. Returns the new pivot column or -1.
    int insert(std::vector<mpq_class> dense);
    int insert(const SparseVec& v);
    /// Whether v lies in the row span (restricted to the pivot range).
    bool contains(const SparseVec& v) const;

    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivot_cols_; }

    std::vector<mpq_class> to_dense(const SparseVec& v) const;

private:
    std::size_t width_;
    std::size_t limit_;
    std::vector<SparseVec> rows_;
    std::vector<int> pivot_cols_;
    std::vector<int> row_of_pivot_;
};

/// Rank of a family of sparse vectors of the given width.
std::size_t rank_of(const std::vector<SparseVec>& vectors, std::size_t width);

}  // namespace hlmaj
