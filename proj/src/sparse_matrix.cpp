#include "wlplab/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlplab {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<std::vector<std::uint32_t>> entries)
    : cols_(cols), row_entries_(std::move(entries)) {
  if (row_entries_.size() != rows) throw std::invalid_argument("row count mismatch");
  for (auto& r : row_entries_) {
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end())
      throw std::invalid_argument("duplicate column in sparse row");
    if (!r.empty() && r.back() >= cols) throw std::invalid_argument("column index out of range");
  }
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<int>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  std::vector<std::vector<std::uint32_t>> e(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (dense[i][j] != 0 && dense[i][j] != 1) throw std::invalid_argument("entries must be 0 or 1");
      if (dense[i][j]) e[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  return SparseMatrix(dense.size(), cols, std::move(e));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i].push_back(static_cast<std::uint32_t>(i));
  return SparseMatrix(n, n, std::move(e));
}

SparseMatrix SparseMatrix::all_ones(std::size_t rows, std::size_t cols) {
  std::vector<std::uint32_t> full(cols);
  for (std::size_t j = 0; j < cols; ++j) full[j] = static_cast<std::uint32_t>(j);
  return SparseMatrix(rows, cols, std::vector<std::vector<std::uint32_t>>(rows, full));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row_entries_) n += r.size();
  return n;
}

bool SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = row_entries_.at(i);
  return std::binary_search(r.begin(), r.end(), static_cast<std::uint32_t>(j));
}

std::vector<std::size_t> SparseMatrix::column_counts() const {
  std::vector<std::size_t> c(cols_, 0);
  for (const auto& r : row_entries_)
    for (auto j : r) ++c[j];
  return c;
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<std::vector<std::uint32_t>> e(cols_);
  for (std::size_t i = 0; i < row_entries_.size(); ++i)
    for (auto j : row_entries_[i]) e[j].push_back(static_cast<std::uint32_t>(i));
  return SparseMatrix(cols_, rows(), std::move(e));
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows() || col_perm.size() != cols_) throw std::invalid_argument("bad permutation size");
  std::vector<std::vector<std::uint32_t>> e(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (auto j : row_entries_.at(row_perm[i])) e[i].push_back(static_cast<std::uint32_t>(col_perm.at(j)));
  return SparseMatrix(rows(), cols_, std::move(e));
}

std::vector<std::vector<int>> SparseMatrix::to_dense() const {
  std::vector<std::vector<int>> d(rows(), std::vector<int>(cols_, 0));
  for (std::size_t i = 0; i < rows(); ++i)
    for (auto j : row_entries_[i]) d[i][j] = 1;
  return d;
}

}  // namespace wlplab
