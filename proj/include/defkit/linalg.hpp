#pragma once

#include <cstddef>
#include <vector>

#include "defkit/rational.hpp"

namespace defkit {

/// One sparse row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental exact row reduction over Q. Pivot rows are kept fully
/// inter-reduced (RREF invariant), so reducing a row against the pivot set is
/// a single pass and the result is independent of reduction order. That makes
/// the OpenMP batch path bit-identical to the serial reference.
class SparseRref {
public:
    explicit SparseRref(std::size_t ncols) : ncols_(ncols), pivot_of_col_(ncols, npos) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Reduce one row against the current pivot set (does not insert).
    SparseRow reduce(const SparseRow& row) const;

    /// Reduce and, if nonzero, insert as a new pivot row. Returns true if the
    /// row enlarged the span.
    bool add_row(const SparseRow& row);

    /// Add a batch of rows. `parallel` reduces the batch against the existing
    /// pivots with OpenMP first; survivors are folded serially in index order,
    /// which reproduces the serial result exactly.
    void add_rows(const std::vector<SparseRow>& rows, bool parallel);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t ncols() const { return ncols_; }

    /// Columns with no pivot (a basis of the cokernel), ascending.
    std::vector<std::size_t> free_columns() const;

private:
    std::size_t ncols_;
    std::vector<SparseRow> pivots_;          // pivots_[k] has leading column lead_[k]
    std::vector<std::size_t> lead_;
    std::vector<std::size_t> pivot_of_col_;  // column -> pivot index or npos

    void insert_pivot(SparseRow reduced);
};

/// rows reduced as one batch; returns the rank. Serial reference when
/// parallel = false.
std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t ncols, bool parallel);

/// Dense exact kernel basis of an m x n matrix (rows of length n).
/// Returns vectors spanning { v : A v = 0 }.
std::vector<std::vector<Rational>> dense_kernel(const std::vector<std::vector<Rational>>& a);

std::size_t dense_rank(const std::vector<std::vector<Rational>>& a);

/// Exact determinant by fraction-free elimination.
Rational dense_det(std::vector<std::vector<Rational>> a);

} // namespace defkit
