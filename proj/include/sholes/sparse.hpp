#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sholes {

using Index = std::int32_t;

struct Triplet {
  Index row;
  Index col;
  double value;
};

/// Compressed-row matrix. Column indices are strictly increasing within each
/// row and explicit zeros are pruned on construction and by every operation,
/// so the stored support always equals the numerical support.
class SparseMatrix {
 public:
  SparseMatrix() : SparseMatrix(0, 0) {}
  SparseMatrix(Index rows, Index cols);

  /// Builds from unordered triplets. Throws DuplicateEdge on repeated
  /// (row, col) pairs and InvalidArgument on out-of-range indices.
  static SparseMatrix from_triplets(Index rows, Index cols,
                                    std::vector<Triplet> entries);

  /// Builds from ready-made CSR arrays (must be sorted, in range, zero-free).
  static SparseMatrix from_parts(Index rows, Index cols,
                                 std::vector<Index> row_ptr,
                                 std::vector<Index> col_idx,
                                 std::vector<double> values);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index nnz() const { return static_cast<Index>(col_idx_.size()); }

  std::span<const Index> row_cols(Index i) const {
    return {col_idx_.data() + row_ptr_[i],
            static_cast<std::size_t>(row_ptr_[i + 1] - row_ptr_[i])};
  }
  std::span<const double> row_vals(Index i) const {
    return {values_.data() + row_ptr_[i],
            static_cast<std::size_t>(row_ptr_[i + 1] - row_ptr_[i])};
  }
  Index row_nnz(Index i) const { return row_ptr_[i + 1] - row_ptr_[i]; }

  /// Element lookup by binary search; absent entries read as 0.
  double at(Index i, Index j) const;

  const std::vector<Index>& row_ptr() const { return row_ptr_; }
  const std::vector<Index>& col_idx() const { return col_idx_; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const SparseMatrix& other) const = default;

 private:
  Index rows_;
  Index cols_;
  std::vector<Index> row_ptr_;
  std::vector<Index> col_idx_;
  std::vector<double> values_;
};

/// Row-parallelism knob for spmm. Results are identical for every thread
/// count; 1 (the default) keeps everything on the calling thread.
void set_num_threads(int n);
int num_threads();

SparseMatrix spmm(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix hadamard(const SparseMatrix& a, const SparseMatrix& b);
std::vector<double> row_sums(const SparseMatrix& a);
SparseMatrix diag_scale(std::span<const double> y, const SparseMatrix& a);
SparseMatrix transpose(const SparseMatrix& a);
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix drop_diagonal(const SparseMatrix& a);

}  // namespace sholes
