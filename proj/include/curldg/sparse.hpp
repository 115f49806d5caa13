#pragma once

#include <iosfwd>
#include <vector>

namespace curldg {

// Compressed sparse row matrix with sorted column indices per row.
// Assembled operators are structurally and numerically symmetric.
struct SparseMatrixCSR {
    int n = 0;
    std::vector<int> row_offsets;  // size n + 1
    std::vector<int> cols;
    std::vector<double> vals;

    int nnz() const { return static_cast<int>(cols.size()); }

    std::vector<double> multiply(const std::vector<double>& x) const;

    // max_ij |A_ij - A_ji|; requires structural symmetry
    double symmetry_gap() const;

    double max_abs() const;

    // Matrix Market coordinate format, 1-based indices
    void write_matrix_market(std::ostream& os) const;
};

}  // namespace curldg
