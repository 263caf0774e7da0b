#include "ebrauer/duality.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace ebrauer {

namespace {

bool is_diagonal(const SparseOperator& m) {
  for (Index r = 0; r < m.nrows(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      (void)v;
      if (c != r) return false;
    }
  }
  return true;
}

std::string scenario_name(const char* check, Form f, int n, int r) {
  std::ostringstream out;
  out << check << "(" << form_tag(f) << "," << n << "," << r << ")";
  return out.str();
}

GroupSpec group_for(Form f, int n) {
  return f == Form::orthogonal ? make_orthogonal(n) : make_symplectic(n);
}

// Streams the equations of [X, M] = 0 for every constraint, diagonal
// constraints first, into one eliminator. Unknown (a,b) sits at a*dim + b,
// matching SparseOperator::vectorized.
OperatorSubspace solve_commutant(const std::vector<SparseOperator>& constraints, Index dim,
                                 const std::function<bool(Index, Index)>& allow) {
  LinearSystem sys(dim * dim);
  if (allow) {
    for (Index a = 0; a < dim; ++a) {
      for (Index b = 0; b < dim; ++b) {
        if (!allow(a, b)) sys.force_zero(a * dim + b);
      }
    }
  }

  std::vector<const SparseOperator*> ordered;
  for (const auto& m : constraints) {
    if (is_diagonal(m)) ordered.push_back(&m);
  }
  for (const auto& m : constraints) {
    if (!is_diagonal(m)) ordered.push_back(&m);
  }

  std::vector<Index> idx;
  SparseVec row;
  for (const SparseOperator* m : ordered) {
    SparseOperator mt = m->transposed();
    for (Index a = 0; a < dim; ++a) {
      const SparseVec& row_a = m->row(a);
      for (Index b = 0; b < dim; ++b) {
        const SparseVec& col_b = mt.row(b);
        if (row_a.empty() && col_b.empty()) continue;
        // Entries: X_{ac} M_{cb} - M_{ac} X_{cb}.
        idx.clear();
        bool alive = false;
        for (const auto& [c, v] : col_b) {
          (void)v;
          idx.push_back(a * dim + c);
        }
        for (const auto& [c, v] : row_a) {
          (void)v;
          idx.push_back(c * dim + b);
        }
        for (Index u : idx) {
          if (!sys.eliminated_unit(u)) {
            alive = true;
            break;
          }
        }
        if (!alive) continue;
        row.clear();
        for (const auto& [c, v] : col_b) row.emplace_back(a * dim + c, v);
        for (const auto& [c, v] : row_a) row.emplace_back(c * dim + b, -v);
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseVec merged;
        for (auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
            if (merged.back().second == 0) merged.pop_back();
          } else {
            merged.push_back(std::move(e));
          }
        }
        if (!merged.empty()) sys.add_row(std::move(merged));
      }
    }
  }
  return sys.kernel();
}

}  // namespace

ConstraintSet group_constraints(const GroupSpec& g, const TensorSpace& space) {
  ConstraintSet cs{space, {}, {}};
  for (const auto& x : g.lie_basis) {
    cs.lie.push_back(dphi(space.enhanced ? lift_endo(x) : x, space).op);
  }
  for (const auto& rep : g.component_reps) {
    cs.group.push_back(phi(space.enhanced ? lift_group(rep) : rep, space).op);
  }
  return cs;
}

void add_torus_constraint(ConstraintSet& cs) {
  assert(cs.space.enhanced);
  cs.lie.push_back(dphi(make_enhanced_generators(cs.space.n).torus, cs.space).op);
}

void add_nilpotent_constraints(ConstraintSet& cs) {
  assert(cs.space.enhanced);
  for (const auto& nmat : make_enhanced_generators(cs.space.n).nilpotents) {
    cs.lie.push_back(dphi(nmat, cs.space).op);
  }
}

ConstraintSet gl_constraints(const TensorSpace& space) {
  ConstraintSet cs{space, {}, {}};
  int d = space.letter_dim();
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) cs.lie.push_back(dphi(mat_unit(d, i, j), space).op);
  }
  return cs;
}

OperatorSubspace commutant(const ConstraintSet& cs) {
  return commutant_masked(cs, nullptr);
}

OperatorSubspace commutant_masked(const ConstraintSet& cs,
                                  const std::function<bool(Index, Index)>& allow) {
  std::vector<SparseOperator> all;
  all.reserve(cs.group.size() + cs.lie.size());
  for (const auto& m : cs.group) all.push_back(m);
  for (const auto& m : cs.lie) all.push_back(m);
  return solve_commutant(all, cs.space.dim(), allow);
}

OperatorSubspace hom_space(const ConstraintSet& cs, const ComponentIndex& I,
                           const ComponentIndex& J) {
  const TensorSpace& space = cs.space;
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(space.dim()));
  for (Index k = 0; k < space.dim(); ++k) masks[static_cast<std::size_t>(k)] = space.component_mask(k);
  auto allow = [&](Index row, Index col) {
    return masks[static_cast<std::size_t>(row)] == J.mask &&
           masks[static_cast<std::size_t>(col)] == I.mask;
  };
  return commutant_masked(cs, allow);
}

SparseOperator devectorize(const SparseVec& v, Index nrows, Index ncols) {
  SparseOperator op(nrows, ncols);
  for (const auto& [pos, val] : v) op.add_entry(pos / ncols, pos % ncols, val);
  op.finalize();
  return op;
}

DualityReport verify_plain_commutant(Form f, int n, int r) {
  DualityReport rep;
  rep.scenario = scenario_name("plain", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  TensorSpace space{n, r, false};
  ConstraintSet cs = group_constraints(group_for(f, n), space);
  OperatorSubspace comm = commutant(cs);
  SpannedAlgebra alg = span_plain_brauer(rep.epsilon, n, r);
  rep.sides.push_back({"commutant", comm.dim()});
  rep.sides.push_back({"diagram_span", alg.span.dim()});
  rep.equal = equal(comm, alg.span);
  return rep;
}

DualityReport verify_restricted(Form f, int n, int r) {
  DualityReport rep;
  rep.scenario = scenario_name("restricted", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  TensorSpace space{n, r, true};
  ConstraintSet cs = group_constraints(group_for(f, n), space);
  OperatorSubspace comm = commutant(cs);

  OperatorSubspace constructed(space.dim() * space.dim());
  bool blocks_ok = true;
  for (int s = 0; s <= r; ++s) {
    for (int t = 0; t <= r; ++t) {
      for (const auto& I : subsets_of_size(r, s)) {
        for (const auto& J : subsets_of_size(r, t)) {
          SpannedAlgebra block = span_block(rep.epsilon, n, I, J);
          for (const auto& gen : block.generators) constructed.insert(gen.op.vectorized());
          OperatorSubspace solved = hom_space(cs, I, J);
          if ((s + t) % 2 != 0) {
            blocks_ok = blocks_ok && solved.dim() == 0 && block.span.dim() == 0;
          } else {
            blocks_ok = blocks_ok && equal(solved, block.span);
          }
        }
      }
    }
  }
  rep.sides.push_back({"commutant", comm.dim()});
  rep.sides.push_back({"constructed", constructed.dim()});
  rep.equal = blocks_ok && equal(comm, constructed);
  return rep;
}

DualityReport verify_levi(Form f, int n, int r) {
  DualityReport rep;
  rep.scenario = scenario_name("levi", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  TensorSpace space{n, r, true};
  ConstraintSet cs = group_constraints(group_for(f, n), space);
  add_torus_constraint(cs);
  OperatorSubspace comm = commutant(cs);
  SpannedAlgebra alg = span_enhanced(rep.epsilon, n, r);
  rep.sides.push_back({"commutant", comm.dim()});
  rep.sides.push_back({"enhanced_algebra", alg.span.dim()});
  bool ok = equal(comm, alg.span);

  // Level-block-diagonality: no commutant vector couples different levels.
  std::vector<int> levels(static_cast<std::size_t>(space.dim()));
  for (Index k = 0; k < space.dim(); ++k) levels[static_cast<std::size_t>(k)] = space.level(k);
  for (const auto& vec : comm.basis()) {
    for (const auto& [pos, val] : vec) {
      (void)val;
      if (levels[static_cast<std::size_t>(pos / space.dim())] !=
          levels[static_cast<std::size_t>(pos % space.dim())]) {
        ok = false;
      }
    }
  }

  // Same answer whether or not the solver exploits the grading.
  auto graded = [&](Index row, Index col) {
    return levels[static_cast<std::size_t>(row)] == levels[static_cast<std::size_t>(col)];
  };
  ok = ok && equal(commutant_masked(cs, graded), comm);

  for (int l = 0; l <= r; ++l) {
    auto level_mask = [&](Index row, Index col) {
      return levels[static_cast<std::size_t>(row)] == l && levels[static_cast<std::size_t>(col)] == l;
    };
    OperatorSubspace lhs = commutant_masked(cs, level_mask);
    SpannedAlgebra rhs = span_enhanced_level(rep.epsilon, n, r, l);
    LevelEntry entry{l, lhs.dim(), rhs.span.dim(), equal(lhs, rhs.span)};
    ok = ok && entry.match;
    rep.per_level.push_back(entry);
  }
  rep.equal = ok;
  return rep;
}

DualityReport verify_parabolic(Form f, int n, int r) {
  DualityReport rep;
  rep.scenario = scenario_name("parabolic", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  TensorSpace space{n, r, true};
  FormSpec form = make_form(rep.epsilon, n);

  ConstraintSet cs = group_constraints(group_for(f, n), space);
  add_torus_constraint(cs);
  add_nilpotent_constraints(cs);
  OperatorSubspace comm = commutant(cs);

  // Nilpotent centralizer taken inside the enhanced algebra.
  SpannedAlgebra alg = span_enhanced(rep.epsilon, n, r);
  std::vector<SparseOperator> basis_ops;
  for (const auto& vec : alg.span.basis()) {
    basis_ops.push_back(devectorize(vec, space.dim(), space.dim()));
  }
  std::vector<SparseOperator> nilpotents;
  for (const auto& nmat : make_enhanced_generators(n).nilpotents) {
    nilpotents.push_back(dphi(nmat, space).op);
  }
  LinearSystem inside(static_cast<Index>(basis_ops.size()));
  for (const auto& nop : nilpotents) {
    std::map<Index, SparseVec> rows;  // ambient position -> (basis index, coef)
    for (std::size_t i = 0; i < basis_ops.size(); ++i) {
      SparseOperator bracket = basis_ops[i].compose(nop).minus(nop.compose(basis_ops[i]));
      for (const auto& [pos, val] : bracket.vectorized()) {
        rows[pos].emplace_back(static_cast<Index>(i), val);
      }
    }
    for (auto& [pos, row] : rows) {
      (void)pos;
      inside.add_row(std::move(row));
    }
  }
  OperatorSubspace coeffs = inside.kernel();
  OperatorSubspace centralizer(space.dim() * space.dim());
  for (const auto& cvec : coeffs.basis()) {
    SparseVec combo;
    for (const auto& [i, c] : cvec) {
      combo = sparse_axpy(combo, c, alg.span.basis()[static_cast<std::size_t>(i)]);
    }
    centralizer.insert(std::move(combo));
  }

  // rho image of the plain diagram algebra.
  OperatorSubspace rho_image(space.dim() * space.dim());
  for (const auto& w : canonical_words(r)) {
    rho_image.insert(rho_word(w, form, space).op.vectorized());
  }

  rep.sides.push_back({"commutant", comm.dim()});
  rep.sides.push_back({"nilpotent_centralizer", centralizer.dim()});
  rep.sides.push_back({"rho_image", rho_image.dim()});
  bool ok = equal(comm, centralizer) && equal(comm, rho_image);

  // The place permutations always land inside.
  for (const auto& s : Permutation::all(r)) {
    ok = ok && comm.contains(psi(s, space).op);
  }
  rep.equal = ok;
  return rep;
}

DualityReport verify_filtration(Form f, int n, int r) {
  DualityReport rep;
  rep.scenario = scenario_name("filtration", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  TensorSpace space{n, r, true};
  ConstraintSet cs = group_constraints(group_for(f, n), space);
  add_nilpotent_constraints(cs);
  OperatorSubspace comm = commutant(cs);
  rep.sides.push_back({"commutant", comm.dim()});

  auto raises_levels = [&](const SparseOperator& op) {
    for (Index row = 0; row < op.nrows(); ++row) {
      for (const auto& [col, val] : op.row(row)) {
        (void)val;
        if (space.level(row) < space.level(col)) return false;
      }
    }
    return true;
  };

  bool ok = true;
  for (const auto& vec : comm.basis()) {
    ok = ok && raises_levels(devectorize(vec, space.dim(), space.dim()));
  }

  // Negative control: an operator dropping a level-2 column onto a level-1
  // row must fail the same test.
  if (r >= 2) {
    std::vector<int> hi(static_cast<std::size_t>(r), space.eta());
    hi[0] = 1;
    hi[1] = 1;
    std::vector<int> lo(static_cast<std::size_t>(r), space.eta());
    lo[0] = 1;
    SparseOperator bad(space.dim(), space.dim());
    bad.add_entry(space.flat(lo), space.flat(hi), 1);
    bad.finalize();
    ok = ok && !raises_levels(bad);
  }
  rep.equal = ok;
  return rep;
}

DualityReport verify_annihilation(Form f, int n, int r) {
  DualityReport rep;
  rep.scenario = scenario_name("annihilation", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  TensorSpace space{n, r, true};
  FormSpec form = make_form(rep.epsilon, n);
  std::vector<BrauerWord> words = canonical_words(r);
  std::vector<SparseOperator> rho_ops;
  for (const auto& w : words) rho_ops.push_back(rho_word(w, form, space).op);

  bool ok = true;
  Index solution_dims = 0;
  std::uint32_t full = ComponentIndex::full(r).mask;
  for (std::uint32_t mask = 0; mask < full; ++mask) {  // every proper subset
    ComponentIndex J{r, mask};
    LinearSystem sys(static_cast<Index>(words.size()));
    for (Index v_flat : component_basis(space, J)) {
      SparseVec v{{v_flat, Rational(1)}};
      for (int t = 1; t <= n; ++t) {
        for (int m = 1; m <= r + 1; ++m) {
          std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
          w[static_cast<std::size_t>(t - 1)] = m;
          SparseVec probe = difference_vector(v, w, space);
          std::map<Index, SparseVec> rows;
          for (std::size_t k = 0; k < rho_ops.size(); ++k) {
            for (const auto& [pos, val] : rho_ops[k].apply(probe)) {
              rows[pos].emplace_back(static_cast<Index>(k), val);
            }
          }
          for (auto& [pos, row] : rows) {
            (void)pos;
            sys.add_row(std::move(row));
          }
        }
      }
    }
    OperatorSubspace sol = sys.kernel();
    solution_dims += sol.dim();
    for (const auto& cvec : sol.basis()) {
      FormalBrauer x{r, {}};
      for (const auto& [k, c] : cvec) {
        x.terms.emplace_back(words[static_cast<std::size_t>(k)], c);
      }
      if (!rho_component(x, J, form, space).op.is_zero()) ok = false;
    }
  }
  rep.sides.push_back({"solution_dims", solution_dims});
  rep.equal = ok;
  return rep;
}

DualityReport verify_gl_sanity(Form f, int n, int r) {
  DualityReport rep;
  rep.scenario = scenario_name("sanity-gl", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  TensorSpace space{n, r, true};
  OperatorSubspace comm = commutant(gl_constraints(space));
  OperatorSubspace perms(space.dim() * space.dim());
  for (const auto& s : Permutation::all(r)) perms.insert(psi(s, space).op.vectorized());
  rep.sides.push_back({"commutant", comm.dim()});
  rep.sides.push_back({"permutation_span", perms.dim()});
  rep.equal = equal(comm, perms);
  return rep;
}

DualityReport verify_dims(Form f, int n, int r) {
  DualityReport rep;
  rep.scenario = scenario_name("dims", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  DimensionTable t = dimension_table(rep.epsilon, n, r);
  for (const auto& ld : t.levels) {
    rep.per_level.push_back(LevelEntry{ld.l, ld.dim, ld.expected, ld.match});
  }
  rep.sides.push_back({"total", t.total});
  rep.sides.push_back({"expected_total", t.applicable ? t.expected_total : t.total});
  rep.equal = t.rank_additive && t.all_match;
  return rep;
}

DualityReport verify_mulformula(Form f, int n, int r, Index samples, std::uint64_t seed) {
  DualityReport rep;
  rep.scenario = scenario_name("mulformula", f, n, r);
  rep.epsilon = epsilon_of(f);
  rep.n = n;
  rep.r = r;
  MulFormulaReport m = verify_multiplication_formula(rep.epsilon, n, r, samples, seed);
  rep.sides.push_back({"products_checked", m.checked});
  rep.equal = m.ok;
  return rep;
}

}  // namespace ebrauer
