#include "ebrauer/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ebrauer {

SparseVec sparse_axpy(const SparseVec& x, const Rational& a, const SparseVec& y) {
  if (a == 0) return x;
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void sparse_scale(SparseVec& x, const Rational& a) {
  if (a == 0) {
    x.clear();
    return;
  }
  for (auto& e : x) e.second *= a;
}

Rational sparse_dot(const SparseVec& x, const SparseVec& y) {
  Rational acc = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      ++i;
    } else if (y[j].first < x[i].first) {
      ++j;
    } else {
      acc += x[i].second * y[j].second;
      ++i;
      ++j;
    }
  }
  return acc;
}

SparseOperator::SparseOperator(Index nrows, Index ncols)
    : nrows_(nrows), ncols_(ncols), rows_(static_cast<std::size_t>(nrows)) {
  assert(nrows >= 0 && ncols >= 0);
}

SparseOperator SparseOperator::identity(Index n) {
  SparseOperator m(n, n);
  for (Index i = 0; i < n; ++i) m.rows_[i].emplace_back(i, 1);
  return m;
}

SparseOperator SparseOperator::from_triplets(
    Index nrows, Index ncols, const std::vector<std::tuple<Index, Index, Rational>>& entries) {
  SparseOperator m(nrows, ncols);
  for (const auto& [r, c, v] : entries) m.add_entry(r, c, v);
  m.finalize();
  return m;
}

Index SparseOperator::nnz() const {
  assert(finalized_);
  Index total = 0;
  for (const auto& row : rows_) total += static_cast<Index>(row.size());
  return total;
}

void SparseOperator::add_entry(Index r, Index c, const Rational& v) {
  assert(r >= 0 && r < nrows_ && c >= 0 && c < ncols_);
  if (v == 0) return;
  rows_[r].emplace_back(c, v);
  finalized_ = false;
}

void SparseOperator::finalize() {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec merged;
    merged.reserve(row.size());
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
        if (merged.back().second == 0) merged.pop_back();
      } else {
        merged.push_back(std::move(e));
      }
    }
    row = std::move(merged);
  }
  finalized_ = true;
}

const SparseVec& SparseOperator::row(Index r) const {
  assert(finalized_ && r >= 0 && r < nrows_);
  return rows_[r];
}

Rational SparseOperator::entry(Index r, Index c) const {
  const SparseVec& rw = row(r);
  auto it = std::lower_bound(rw.begin(), rw.end(), c,
                             [](const auto& e, Index col) { return e.first < col; });
  if (it != rw.end() && it->first == c) return it->second;
  return 0;
}

bool SparseOperator::is_zero() const {
  assert(finalized_);
  for (const auto& row : rows_) {
    if (!row.empty()) return false;
  }
  return true;
}

SparseOperator SparseOperator::transposed() const {
  assert(finalized_);
  SparseOperator t(ncols_, nrows_);
  for (Index r = 0; r < nrows_; ++r) {
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
  }
  // Row scan in increasing r keeps each transposed row sorted.
  return t;
}

SparseOperator SparseOperator::compose(const SparseOperator& rhs) const {
  assert(finalized_ && rhs.finalized_);
  if (ncols_ != rhs.nrows_) throw std::invalid_argument("compose: shape mismatch");
  SparseOperator out(nrows_, rhs.ncols_);
  for (Index r = 0; r < nrows_; ++r) {
    std::map<Index, Rational> acc;
    for (const auto& [k, v] : rows_[r]) {
      for (const auto& [c, w] : rhs.rows_[k]) {
        Rational& slot = acc[c];
        slot += v * w;
        if (slot == 0) acc.erase(c);
      }
    }
    out.rows_[r].assign(acc.begin(), acc.end());
  }
  return out;
}

SparseOperator SparseOperator::plus(const SparseOperator& rhs) const {
  assert(finalized_ && rhs.finalized_);
  if (nrows_ != rhs.nrows_ || ncols_ != rhs.ncols_) {
    throw std::invalid_argument("plus: shape mismatch");
  }
  SparseOperator out(nrows_, ncols_);
  for (Index r = 0; r < nrows_; ++r) out.rows_[r] = sparse_axpy(rows_[r], 1, rhs.rows_[r]);
  return out;
}

SparseOperator SparseOperator::minus(const SparseOperator& rhs) const {
  assert(finalized_ && rhs.finalized_);
  if (nrows_ != rhs.nrows_ || ncols_ != rhs.ncols_) {
    throw std::invalid_argument("minus: shape mismatch");
  }
  SparseOperator out(nrows_, ncols_);
  for (Index r = 0; r < nrows_; ++r) out.rows_[r] = sparse_axpy(rows_[r], -1, rhs.rows_[r]);
  return out;
}

SparseOperator SparseOperator::scaled(const Rational& a) const {
  assert(finalized_);
  SparseOperator out(nrows_, ncols_);
  if (a == 0) return out;
  for (Index r = 0; r < nrows_; ++r) {
    out.rows_[r] = rows_[r];
    for (auto& e : out.rows_[r]) e.second *= a;
  }
  return out;
}

SparseVec SparseOperator::apply(const SparseVec& x) const {
  assert(finalized_);
  SparseVec out;
  for (Index r = 0; r < nrows_; ++r) {
    Rational v = sparse_dot(rows_[r], x);
    if (v != 0) out.emplace_back(r, std::move(v));
  }
  return out;
}

bool SparseOperator::operator==(const SparseOperator& rhs) const {
  assert(finalized_ && rhs.finalized_);
  return nrows_ == rhs.nrows_ && ncols_ == rhs.ncols_ && rows_ == rhs.rows_;
}

SparseVec SparseOperator::vectorized() const {
  assert(finalized_);
  SparseVec out;
  out.reserve(static_cast<std::size_t>(nnz()));
  for (Index r = 0; r < nrows_; ++r) {
    for (const auto& [c, v] : rows_[r]) out.emplace_back(r * ncols_ + c, v);
  }
  return out;
}

void SparseOperator::write_triplets(std::ostream& out) const {
  assert(finalized_);
  out << "dims " << nrows_ << " " << ncols_ << "\n";
  for (Index r = 0; r < nrows_; ++r) {
    for (const auto& [c, v] : rows_[r]) {
      out << r << " " << c << " " << to_string(v) << "\n";
    }
  }
}

SparseOperator SparseOperator::read_triplets(std::istream& in) {
  std::string tag;
  Index nrows = 0, ncols = 0;
  if (!(in >> tag) || tag != "dims" || !(in >> nrows >> ncols)) {
    throw std::invalid_argument("triplet stream: missing 'dims R C' header");
  }
  SparseOperator m(nrows, ncols);
  Index r = 0, c = 0;
  std::string value;
  while (in >> r >> c >> value) {
    if (r < 0 || r >= nrows || c < 0 || c >= ncols) {
      throw std::invalid_argument("triplet stream: entry out of bounds");
    }
    m.add_entry(r, c, rational_from_string(value));
  }
  m.finalize();
  return m;
}

}  // namespace ebrauer
