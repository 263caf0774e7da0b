#include "ebrauer/subspace.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace ebrauer {

namespace {

bool row_contains(const SparseVec& row, Index col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, Index c) { return e.first < c; });
  return it != row.end() && it->first == col;
}

Rational coeff_at(const SparseVec& row, Index col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, Index c) { return e.first < c; });
  if (it != row.end() && it->first == col) return it->second;
  return 0;
}

}  // namespace

SparseVec OperatorSubspace::reduce(SparseVec v) const {
  // Pivot columns appear only in their own basis row, so subtracting a basis
  // row cannot create entries at other pivot columns: one collection pass.
  std::vector<std::pair<std::size_t, Rational>> hits;
  for (const auto& [col, val] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it != pivots_.end() && *it == col) {
      hits.emplace_back(static_cast<std::size_t>(it - pivots_.begin()), val);
    }
  }
  for (const auto& [row_idx, val] : hits) v = sparse_axpy(v, -val, rows_[row_idx]);
  return v;
}

bool OperatorSubspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool OperatorSubspace::contains(const SparseOperator& op) const {
  return contains(op.vectorized());
}

bool OperatorSubspace::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Index pivot = v.front().first;
  assert(pivot < ambient_);
  Rational lead = v.front().second;
  if (lead != 1) {
    Rational inv = 1 / lead;
    sparse_scale(v, inv);
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational c = coeff_at(rows_[i], pivot);
    if (c != 0) rows_[i] = sparse_axpy(rows_[i], -c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

OperatorSubspace echelonize(Index ambient_dim, const std::vector<SparseVec>& vectors) {
  OperatorSubspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

OperatorSubspace span_of(const std::vector<SparseOperator>& ops) {
  if (ops.empty()) return OperatorSubspace(0);
  Index ambient = ops.front().nrows() * ops.front().ncols();
  OperatorSubspace s(ambient);
  for (const auto& op : ops) {
    assert(op.nrows() == ops.front().nrows() && op.ncols() == ops.front().ncols());
    s.insert(op.vectorized());
  }
  return s;
}

bool equal(const OperatorSubspace& a, const OperatorSubspace& b) { return a == b; }

LinearSystem::LinearSystem(Index num_unknowns)
    : ncols_(num_unknowns),
      pivot_row_(static_cast<std::size_t>(num_unknowns), -1),
      col_count_(static_cast<std::size_t>(num_unknowns), 0),
      col_rows_(static_cast<std::size_t>(num_unknowns)),
      unit_(static_cast<std::size_t>(num_unknowns), 0) {}

void LinearSystem::force_zero(Index col) { add_row({{col, Rational(1)}}); }

void LinearSystem::register_support(int row_id, const SparseVec& row) {
  for (const auto& [c, v] : row) {
    (void)v;
    ++col_count_[static_cast<std::size_t>(c)];
    col_rows_[static_cast<std::size_t>(c)].push_back(row_id);
  }
}

void LinearSystem::support_diff(int row_id, const SparseVec& before, const SparseVec& after) {
  std::size_t i = 0, j = 0;
  while (i < before.size() || j < after.size()) {
    if (j == after.size() || (i < before.size() && before[i].first < after[j].first)) {
      --col_count_[static_cast<std::size_t>(before[i].first)];
      ++i;
    } else if (i == before.size() || after[j].first < before[i].first) {
      ++col_count_[static_cast<std::size_t>(after[j].first)];
      col_rows_[static_cast<std::size_t>(after[j].first)].push_back(row_id);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
}

void LinearSystem::add_row(SparseVec row) {
  // Reduce against current pivots; Jordan invariant makes one pass enough.
  std::vector<std::pair<int, Rational>> hits;
  for (const auto& [col, val] : row) {
    int pr = pivot_row_[static_cast<std::size_t>(col)];
    if (pr >= 0) hits.emplace_back(pr, val);
  }
  for (const auto& [pr, val] : hits) row = sparse_axpy(row, -val, rows_[static_cast<std::size_t>(pr)]);
  if (row.empty()) return;

  // Fill-aware pivot choice: lowest current occupancy, then lowest column.
  Index pivot = row.front().first;
  int best = col_count_[static_cast<std::size_t>(pivot)];
  for (const auto& [c, v] : row) {
    (void)v;
    int occ = col_count_[static_cast<std::size_t>(c)];
    if (occ < best) {
      best = occ;
      pivot = c;
    }
  }

  Rational lead = coeff_at(row, pivot);
  if (lead != 1) {
    Rational inv = 1 / lead;
    sparse_scale(row, inv);
  }

  int row_id = static_cast<int>(rows_.size());

  // Eliminate the pivot column from every row that carries it.
  auto& occ_list = col_rows_[static_cast<std::size_t>(pivot)];
  std::vector<int> holders;
  holders.reserve(occ_list.size());
  for (int id : occ_list) {
    if (row_contains(rows_[static_cast<std::size_t>(id)], pivot)) holders.push_back(id);
  }
  occ_list.clear();
  std::sort(holders.begin(), holders.end());
  holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
  for (int id : holders) {
    SparseVec before = std::move(rows_[static_cast<std::size_t>(id)]);
    Rational c = coeff_at(before, pivot);
    SparseVec after = sparse_axpy(before, -c, row);
    support_diff(id, before, after);
    rows_[static_cast<std::size_t>(id)] = std::move(after);
    if (rows_[static_cast<std::size_t>(id)].size() == 1) {
      unit_[static_cast<std::size_t>(row_pivot_[static_cast<std::size_t>(id)])] = 1;
    }
  }

  rows_.push_back(std::move(row));
  row_pivot_.push_back(pivot);
  pivot_row_[static_cast<std::size_t>(pivot)] = row_id;
  register_support(row_id, rows_.back());
  if (rows_.back().size() == 1) unit_[static_cast<std::size_t>(pivot)] = 1;
}

OperatorSubspace LinearSystem::kernel() const {
  // Pivot rows read x_p = -sum_f c_f x_f over free columns f; each free column
  // yields one kernel vector. Canonicalize at the end.
  std::map<Index, SparseVec> contributions;  // free col -> (pivot col, -coef) list
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Index p = row_pivot_[i];
    for (const auto& [c, v] : rows_[i]) {
      if (c == p) continue;
      contributions[c].emplace_back(p, -v);
    }
  }
  std::vector<SparseVec> vectors;
  for (Index col = 0; col < ncols_; ++col) {
    if (pivot_row_[static_cast<std::size_t>(col)] >= 0) continue;
    SparseVec v;
    auto it = contributions.find(col);
    if (it != contributions.end()) v = it->second;
    v.emplace_back(col, 1);
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    vectors.push_back(std::move(v));
  }
  return echelonize(ncols_, vectors);
}

OperatorSubspace nullspace(const SparseOperator& constraints) {
  LinearSystem sys(constraints.ncols());
  for (Index r = 0; r < constraints.nrows(); ++r) {
    if (!constraints.row(r).empty()) sys.add_row(constraints.row(r));
  }
  return sys.kernel();
}

}  // namespace ebrauer
