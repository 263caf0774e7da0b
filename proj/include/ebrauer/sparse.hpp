#pragma once

#include <cstdint>
#include <iosfwd>
#include <tuple>
#include <utility>
#include <vector>

#include "ebrauer/rational.hpp"

namespace ebrauer {

using Index = std::int64_t;

// Sparse vector: (position, value) pairs, positions strictly increasing, no
// stored zeros.
using SparseVec = std::vector<std::pair<Index, Rational>>;

// x + a*y
SparseVec sparse_axpy(const SparseVec& x, const Rational& a, const SparseVec& y);
void sparse_scale(SparseVec& x, const Rational& a);
Rational sparse_dot(const SparseVec& x, const SparseVec& y);

// Sparse rational matrix, row-major adjacency. Build with add_entry (entries
// accumulate) and call finalize() before reading; from_triplets and the named
// constructors return finalized operators.
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(Index nrows, Index ncols);

  static SparseOperator identity(Index n);
  static SparseOperator from_triplets(Index nrows, Index ncols,
                                      const std::vector<std::tuple<Index, Index, Rational>>& entries);

  Index nrows() const { return nrows_; }
  Index ncols() const { return ncols_; }
  Index nnz() const;

  void add_entry(Index r, Index c, const Rational& v);
  void finalize();

  const SparseVec& row(Index r) const;
  Rational entry(Index r, Index c) const;
  bool is_zero() const;

  SparseOperator transposed() const;
  SparseOperator compose(const SparseOperator& rhs) const;  // this * rhs
  SparseOperator plus(const SparseOperator& rhs) const;
  SparseOperator minus(const SparseOperator& rhs) const;
  SparseOperator scaled(const Rational& a) const;
  SparseVec apply(const SparseVec& x) const;  // this * x

  bool operator==(const SparseOperator& rhs) const;

  // Row-major flattening into Q^(nrows*ncols): position = row*ncols + col.
  // Every operator-subspace comparison in this project uses this layout.
  SparseVec vectorized() const;

  // Text format: "dims R C" header, then one "row col value" line per entry,
  // row-major order, values as "a" or "a/b".
  void write_triplets(std::ostream& out) const;
  static SparseOperator read_triplets(std::istream& in);

 private:
  Index nrows_ = 0;
  Index ncols_ = 0;
  bool finalized_ = true;
  std::vector<SparseVec> rows_;
};

}  // namespace ebrauer
