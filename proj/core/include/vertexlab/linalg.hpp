#pragma once

#include <cstdint>
#include <vector>

#include "vertexlab/rational.hpp"

namespace vtx {

/// sparse row: (column, coefficient) pairs sorted by column, no zeros
using SparseRow = std::vector<std::pair<int32_t, Rational>>;

/// Exact reduced row echelon form. Rows are combined with
/// denominator-clearing and content stripping between steps so coefficients
/// stay integral (fraction-free in the Bareiss spirit); pivots follow the
/// fixed ascending column order, which makes the result the unique RREF of
/// the row space.
class RowReducer {
  public:
    /// reduce a row against the current pivots and absorb the remainder;
    /// returns true if the row added a new pivot
    bool add_row(SparseRow row);
    int rank() const { return int(pivots_.size()); }
    /// finalize to RREF and return kernel basis vectors (one per free
    /// column), each normalized with entry 1 at its free column
    std::vector<SparseRow> kernel(int32_t ncols);
    const std::vector<std::pair<int32_t, SparseRow>>& pivot_rows() const { return pivots_; }

  private:
    SparseRow reduce(SparseRow row) const;
    // sorted by pivot column
    std::vector<std::pair<int32_t, SparseRow>> pivots_;
};

/// exact right-kernel basis of a dense rational matrix; deterministic
/// (reduced echelon, pivoting in column order)
std::vector<std::vector<Rational>> rational_matrix_kernel(
    const std::vector<std::vector<Rational>>& m);

/// exact rank
int matrix_rank(const std::vector<std::vector<Rational>>& m);

}  // namespace vtx
