#pragma once

#include <map>
#include <optional>
#include <vector>

#include "regge/dense.hpp"
#include "regge/error.hpp"

namespace regge {

/// Row-compressed exact sparse matrix. Zeros are never stored.
class SparseMat {
 public:
  using Row = std::map<int, Rational>;

  SparseMat() = default;
  SparseMat(int rows, int cols);
  static SparseMat identity(int n);
  static SparseMat from_dense(const DenseMat& a, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  /// Accumulates v into (r, c).
  void add(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  const Row& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

  SparseMat transpose() const;
  DenseVec apply(const DenseVec& x) const;
  DenseVec column(int c) const;
  /// A ⊗ I_d, interleaving so that index (i, k) maps to d·i + k.
  SparseMat kron_identity(int d) const;

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator*(const Rational& s, const SparseMat& a);
  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Row> data_;
};

/// Block matrix assembly; null entries are zero blocks. Every block row and
/// block column must have a consistent extent given by row_sizes/col_sizes.
SparseMat block_matrix(const std::vector<std::vector<const SparseMat*>>& blocks,
                       const std::vector<int>& row_sizes, const std::vector<int>& col_sizes);

/// Exact rank by fraction-free elimination on integer-scaled rows with
/// shortest-row / sparsest-column pivoting.
int rank_exact(const SparseMat& m);

/// Some x with A x = b, or nullopt when b is outside the range of A.
std::optional<DenseVec> solve_exact(const SparseMat& a, const DenseVec& b);

/// Basis of ker A (one vector per free column).
std::vector<DenseVec> nullspace_exact(const SparseMat& a);

}  // namespace regge
