#include "ebrauer/enhanced_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace ebrauer {

Index binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  Index acc = 1;
  for (int k = 1; k <= b; ++k) acc = acc * (a - b + k) / k;
  return acc;
}

Index double_factorial_odd(int t) {
  Index acc = 1;
  for (int k = 3; k <= 2 * t - 1; k += 2) acc *= k;
  return acc;
}

std::vector<BrauerWord> canonical_words(int r) {
  std::vector<BrauerWord> out;
  for (const auto& d : enumerate_diagrams(r)) out.push_back(factorize(d));
  return out;
}

namespace {

TensorSpace plain_space(int n, int r) { return TensorSpace{n, r, false}; }
TensorSpace enhanced_space(int n, int r) { return TensorSpace{n, r, true}; }

std::string mask_text(const ComponentIndex& I) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int s : I.slots()) {
    if (!first) out << ",";
    first = false;
    out << s;
  }
  out << "}";
  return out.str();
}

std::string word_text(const BrauerWord& w) { return render(build(w)); }

}  // namespace

SpannedAlgebra span_plain_brauer(int epsilon, int n, int r) {
  FormSpec form = make_form(epsilon, n);
  TensorSpace space = plain_space(n, r);
  SpannedAlgebra out{epsilon, n, r, space, {}, OperatorSubspace(space.dim() * space.dim())};
  for (const auto& w : canonical_words(r)) {
    SpanningOp gen{word_operator(w, form, space).op, word_text(w)};
    out.span.insert(gen.op.vectorized());
    out.generators.push_back(std::move(gen));
  }
  return out;
}

SpannedAlgebra span_enhanced_level(int epsilon, int n, int r, int l) {
  FormSpec form = make_form(epsilon, n);
  TensorSpace space = enhanced_space(n, r);
  TensorSpace local = plain_space(n, l);
  SpannedAlgebra out{epsilon, n, r, space, {}, OperatorSubspace(space.dim() * space.dim())};
  std::vector<BrauerWord> words = canonical_words(l);
  for (const auto& J : subsets_of_size(r, l)) {
    for (const auto& I : subsets_of_size(r, l)) {
      LabeledOperator e = transfer(J, I, space);
      for (const auto& w : words) {
        SparseOperator op = e.op.compose(embed_sigma(word_operator(w, form, local).op, I, space).op);
        SpanningOp gen{std::move(op),
                       "E" + mask_text(J) + mask_text(I) + " " + word_text(w)};
        out.span.insert(gen.op.vectorized());
        out.generators.push_back(std::move(gen));
      }
    }
  }
  return out;
}

SpannedAlgebra span_enhanced(int epsilon, int n, int r) {
  TensorSpace space = enhanced_space(n, r);
  SpannedAlgebra out{epsilon, n, r, space, {}, OperatorSubspace(space.dim() * space.dim())};
  for (int l = 0; l <= r; ++l) {
    SpannedAlgebra level = span_enhanced_level(epsilon, n, r, l);
    for (auto& gen : level.generators) {
      out.span.insert(gen.op.vectorized());
      out.generators.push_back(std::move(gen));
    }
  }
  return out;
}

SpannedAlgebra span_block(int epsilon, int n, const ComponentIndex& I, const ComponentIndex& J) {
  assert(I.r == J.r);
  int r = I.r;
  int s = I.size(), t = J.size();
  FormSpec form = make_form(epsilon, n);
  TensorSpace space = enhanced_space(n, r);
  SpannedAlgebra out{epsilon, n, r, space, {}, OperatorSubspace(space.dim() * space.dim())};
  auto push = [&](SparseOperator op, std::string desc) {
    out.span.insert(op.vectorized());
    out.generators.push_back(SpanningOp{std::move(op), std::move(desc)});
  };

  if ((s + t) % 2 != 0) return out;  // odd blocks vanish

  if (s == t) {
    TensorSpace local = plain_space(n, s);
    LabeledOperator e = transfer(J, I, space);
    for (const auto& w : canonical_words(s)) {
      push(e.op.compose(embed_sigma(word_operator(w, form, local).op, I, space).op),
           "E" + mask_text(J) + mask_text(I) + " " + word_text(w));
    }
    return out;
  }

  if (s < t) {
    // Insert (t-s)/2 form pairs into a size-t superset of I, permute its
    // slots, then carry it to J.
    TensorSpace local_t = plain_space(n, t);
    TensorSpace local_s = plain_space(n, s);
    auto perms = Permutation::all(t);
    auto zs = enumerate_normalized(s);
    for (const auto& Jp : subsets_of_size(r, t)) {
      if (!I.subset_of(Jp)) continue;
      LabeledOperator carry = transfer(J, Jp, space);
      for (const auto& p : perms) {
        SparseOperator pj = embed_sigma(psi(p, local_t).op, Jp, space).op;
        for (const auto& U : pairings_between(I, Jp)) {
          SparseOperator du = expand_pairing(U, I, Jp, form, space).op;
          SparseOperator left = carry.op.compose(pj).compose(du);
          for (const auto& z : zs) {
            SparseOperator tz = embed_sigma(tau_diagram(z, form, local_s).op, I, space).op;
            push(left.compose(tz), "E" + mask_text(J) + mask_text(Jp) + " psi D tau");
          }
        }
      }
    }
    return out;
  }

  // s > t: contract (s-t)/2 form pairs of I down to a size-t subset, act
  // there, then carry it to J.
  TensorSpace local_t = plain_space(n, t);
  auto perms = Permutation::all(t);
  auto zs = enumerate_normalized(t);
  for (const auto& Jp : subsets_of_size(r, t)) {
    if (!Jp.subset_of(I)) continue;
    LabeledOperator carry = transfer(J, Jp, space);
    for (const auto& p : perms) {
      SparseOperator pj = embed_sigma(psi(p, local_t).op, Jp, space).op;
      for (const auto& z : zs) {
        SparseOperator tz = embed_sigma(tau_diagram(z, form, local_t).op, Jp, space).op;
        SparseOperator left = carry.op.compose(pj).compose(tz);
        for (const auto& U : pairings_between(Jp, I)) {
          SparseOperator cu = contract_pairing(U, Jp, I, form, space).op;
          push(left.compose(cu), "E" + mask_text(J) + mask_text(Jp) + " psi tau C");
        }
      }
    }
  }
  return out;
}

SpannedAlgebra span_block_pair(int epsilon, int n, int r, int s, int t) {
  TensorSpace space = enhanced_space(n, r);
  SpannedAlgebra out{epsilon, n, r, space, {}, OperatorSubspace(space.dim() * space.dim())};
  for (const auto& I : subsets_of_size(r, s)) {
    for (const auto& J : subsets_of_size(r, t)) {
      SpannedAlgebra block = span_block(epsilon, n, I, J);
      for (auto& gen : block.generators) {
        out.span.insert(gen.op.vectorized());
        out.generators.push_back(std::move(gen));
      }
    }
  }
  return out;
}

Index level_dimension_expected(int r, int l) {
  return binomial(r, l) * binomial(r, l) * double_factorial_odd(l);
}

DimensionTable dimension_table(int epsilon, int n, int r) {
  DimensionTable t;
  t.epsilon = epsilon;
  t.n = n;
  t.r = r;
  t.applicable = n >= 2 * r;
  Index total_expected = 0;
  Index dim_sum = 0;
  t.all_match = true;
  for (int l = 0; l <= r; ++l) {
    SpannedAlgebra level = span_enhanced_level(epsilon, n, r, l);
    LevelDim ld;
    ld.l = l;
    ld.dim = level.span.dim();
    ld.expected = level_dimension_expected(r, l);
    ld.match = !t.applicable || ld.dim == ld.expected;
    t.all_match = t.all_match && ld.match;
    total_expected += ld.expected;
    dim_sum += ld.dim;
    t.levels.push_back(ld);
  }
  SpannedAlgebra whole = span_enhanced(epsilon, n, r);
  t.total = whole.span.dim();
  t.expected_total = total_expected;
  t.rank_additive = t.total == dim_sum;
  if (t.applicable && t.total != t.expected_total) t.all_match = false;
  return t;
}

std::string dimension_table_json(const DimensionTable& t) {
  std::ostringstream out;
  out << "{\"epsilon\":" << t.epsilon << ",\"n\":" << t.n << ",\"r\":" << t.r << ",\"levels\":[";
  for (std::size_t k = 0; k < t.levels.size(); ++k) {
    const auto& ld = t.levels[k];
    if (k) out << ",";
    out << "{\"l\":" << ld.l << ",\"dim\":" << ld.dim;
    if (t.applicable) {
      out << ",\"expected\":" << ld.expected << ",\"match\":" << (ld.match ? "true" : "false");
    } else {
      out << ",\"expected\":null,\"match\":null";
    }
    out << "}";
  }
  out << "],\"total\":" << t.total;
  if (t.applicable) {
    out << ",\"expected_total\":" << t.expected_total;
  } else {
    out << ",\"expected_total\":null";
  }
  out << "}";
  return out.str();
}

std::string dimension_table_csv(const DimensionTable& t) {
  std::ostringstream out;
  out << "epsilon,n,r,l,dim,expected,match\n";
  for (const auto& ld : t.levels) {
    out << t.epsilon << "," << t.n << "," << t.r << "," << ld.l << "," << ld.dim << ",";
    if (t.applicable) {
      out << ld.expected << "," << (ld.match ? "true" : "false");
    } else {
      out << ",n/a";
    }
    out << "\n";
  }
  return out.str();
}

MulFormulaReport verify_multiplication_formula(int epsilon, int n, int r, Index samples,
                                               std::uint64_t seed) {
  FormSpec form = make_form(epsilon, n);
  TensorSpace space = enhanced_space(n, r);
  MulFormulaReport report;

  // Pool of labeled level elements (I, J, sigma): E_{IJ} sigma^J maps
  // V-bar_J -> V-bar_I.
  struct Element {
    ComponentIndex I, J;
    SparseOperator local;     // sigma on V^(tensor |J|)
    SparseOperator realized;  // E_{IJ} sigma^J on the enhanced space
  };
  std::vector<Element> pool;
  for (int l = 0; l <= r; ++l) {
    TensorSpace local = plain_space(n, l);
    std::vector<SparseOperator> words;
    for (const auto& w : canonical_words(l)) words.push_back(word_operator(w, form, local).op);
    for (const auto& I : subsets_of_size(r, l)) {
      for (const auto& J : subsets_of_size(r, l)) {
        for (const auto& sigma : words) {
          SparseOperator realized =
              transfer(I, J, space).op.compose(embed_sigma(sigma, J, space).op);
          pool.push_back(Element{I, J, sigma, std::move(realized)});
        }
      }
    }
  }

  auto check = [&](const Element& x, const Element& y) {
    SparseOperator lhs = x.realized.compose(y.realized);
    SparseOperator rhs(space.dim(), space.dim());
    rhs.finalize();
    if (x.J == y.I) {
      SparseOperator prod = x.local.compose(y.local);
      rhs = transfer(x.I, y.J, space).op.compose(embed_sigma(prod, y.J, space).op);
    }
    ++report.checked;
    if (!(lhs == rhs)) {
      report.ok = false;
      if (report.first_failure.empty()) {
        report.first_failure = "I=" + mask_text(x.I) + " J=" + mask_text(x.J) +
                               " K=" + mask_text(y.I) + " L=" + mask_text(y.J);
      }
    }
  };

  if (r <= 2) {
    for (const auto& x : pool) {
      for (const auto& y : pool) check(x, y);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (Index k = 0; k < samples; ++k) check(pool[pick(rng)], pool[pick(rng)]);
  }
  return report;
}

bool verify_rho_decomposition(int epsilon, int n, int r) {
  FormSpec form = make_form(epsilon, n);
  TensorSpace space = enhanced_space(n, r);
  std::vector<BrauerWord> words = canonical_words(r);
  OperatorSubspace total(space.dim() * space.dim());
  Index dim_sum = 0;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    ComponentIndex I{r, mask};
    OperatorSubspace part(space.dim() * space.dim());
    for (const auto& w : words) {
      SparseVec v = rho_component_word(w, I, form, space).op.vectorized();
      part.insert(v);
      total.insert(v);
    }
    dim_sum += part.dim();
  }
  if (total.dim() != dim_sum) return false;
  return equal(total, span_enhanced(epsilon, n, r).span);
}

}  // namespace ebrauer
