#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wlplab {

/// 0/1 matrix stored as sorted column lists per row; every stored entry is 1.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), row_entries_(rows) {}
  /// Validates ranges, sorts each row and rejects duplicate columns.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<std::vector<std::uint32_t>> entries);

  static SparseMatrix from_dense(const std::vector<std::vector<int>>& dense);
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix all_ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return row_entries_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  const std::vector<std::uint32_t>& row(std::size_t i) const { return row_entries_[i]; }
  bool at(std::size_t i, std::size_t j) const;

  /// Number of stored entries in each column.
  std::vector<std::size_t> column_counts() const;

  SparseMatrix transposed() const;
  /// Row i of the result is row row_perm[i] of this; column j maps to col_perm[j].
  SparseMatrix permuted(const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm) const;
  std::vector<std::vector<int>> to_dense() const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<std::uint32_t>> row_entries_;
};

}  // namespace wlplab
