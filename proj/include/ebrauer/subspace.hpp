#pragma once

#include <vector>

#include "ebrauer/sparse.hpp"

namespace ebrauer {

// Subspace of Q^ambient_dim held in reduced row echelon form: pivots strictly
// increasing, each pivot column nonzero only in its own row, pivot entries 1.
// RREF is unique per subspace, so operator== is subspace equality.
class OperatorSubspace {
 public:
  OperatorSubspace() = default;
  explicit OperatorSubspace(Index ambient_dim) : ambient_(ambient_dim) {}

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }
  const std::vector<SparseVec>& basis() const { return rows_; }
  const std::vector<Index>& pivot_cols() const { return pivots_; }

  // Residual of v after reduction against the basis; empty iff v is contained.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const;
  bool contains(const SparseOperator& op) const;

  // Extends the basis if v is independent; returns true iff dim grew.
  bool insert(SparseVec v);

  bool operator==(const OperatorSubspace& rhs) const {
    return ambient_ == rhs.ambient_ && pivots_ == rhs.pivots_ && rows_ == rhs.rows_;
  }

 private:
  Index ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<Index> pivots_;
};

OperatorSubspace echelonize(Index ambient_dim, const std::vector<SparseVec>& vectors);

// Span of vectorized operators (all shapes must agree).
OperatorSubspace span_of(const std::vector<SparseOperator>& ops);

bool equal(const OperatorSubspace& a, const OperatorSubspace& b);

// Incremental sparse Gauss-Jordan eliminator for homogeneous systems A x = 0.
// Rows are reduced on arrival; dependent rows are discarded immediately, so
// memory holds only pivot rows. Pivot columns are chosen by lowest occupancy
// (ties by column index) to limit fill. Single-entry rows act as forced zeros:
// eliminated_unit reports columns pinned to zero by such rows, which callers
// may use to skip generating rows supported only on dead columns.
class LinearSystem {
 public:
  explicit LinearSystem(Index num_unknowns);

  Index num_unknowns() const { return ncols_; }
  void force_zero(Index col);  // adds the row x_col = 0
  bool eliminated_unit(Index col) const { return unit_[static_cast<std::size_t>(col)] != 0; }
  void add_row(SparseVec row);
  Index rank() const { return static_cast<Index>(rows_.size()); }

  // Canonical (RREF) basis of the solution space.
  OperatorSubspace kernel() const;

 private:
  void register_support(int row_id, const SparseVec& row);
  void support_diff(int row_id, const SparseVec& before, const SparseVec& after);

  Index ncols_ = 0;
  std::vector<SparseVec> rows_;      // Jordan-reduced: pivot cols appear only in their own row
  std::vector<Index> row_pivot_;     // row id -> pivot col
  std::vector<int> pivot_row_;       // col -> row id or -1
  std::vector<int> col_count_;       // exact occupancy per column
  std::vector<std::vector<int>> col_rows_;  // occupancy lists, lazily compacted
  std::vector<char> unit_;
};

OperatorSubspace nullspace(const SparseOperator& constraints);

}  // namespace ebrauer
