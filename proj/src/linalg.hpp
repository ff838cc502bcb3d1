#pragma once

#include <map>
#include <vector>

#include "superband/rational.hpp"

namespace superband::linalg {

// Sparse row vector: column index -> nonzero rational entry.
using SparseRow = std::map<std::size_t, Rat>;

// In-place Gauss-Jordan to reduced row echelon form. Pivot choice is
// deterministic: smallest leading column, ties broken by fewer nonzeros then
// lower original index. Returns rows sorted by pivot column, zero rows
// dropped; pivots[i] is the pivot column of rows[i].
void rref(std::vector<SparseRow>& rows, std::vector<std::size_t>& pivots);

// Kernel of the linear map whose rows (over `cols` columns) are given.
// Basis vectors are the standard RREF kernel vectors, one per free column,
// in ascending free-column order.
std::vector<SparseRow> kernel_basis(std::vector<SparseRow> rows,
                                    std::size_t cols);

}  // namespace superband::linalg
