#include "ebrauer/tensor_ops.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

namespace ebrauer {

Index TensorSpace::dim() const {
  Index d = 1;
  for (int k = 0; k < r; ++k) d *= letter_dim();
  return d;
}

Index TensorSpace::flat(const std::vector<int>& tuple) const {
  assert(static_cast<int>(tuple.size()) == r);
  Index acc = 0;
  for (int k = 0; k < r; ++k) {
    assert(tuple[static_cast<std::size_t>(k)] >= 1 &&
           tuple[static_cast<std::size_t>(k)] <= letter_dim());
    acc = acc * letter_dim() + (tuple[static_cast<std::size_t>(k)] - 1);
  }
  return acc;
}

std::vector<int> TensorSpace::tuple(Index flat) const {
  std::vector<int> t(static_cast<std::size_t>(r));
  for (int k = r - 1; k >= 0; --k) {
    t[static_cast<std::size_t>(k)] = static_cast<int>(flat % letter_dim()) + 1;
    flat /= letter_dim();
  }
  return t;
}

std::uint32_t TensorSpace::component_mask(Index flat) const {
  std::uint32_t mask = 0;
  for (int k = r - 1; k >= 0; --k) {
    int letter = static_cast<int>(flat % letter_dim()) + 1;
    flat /= letter_dim();
    if (letter <= n) mask |= 1u << k;
  }
  return mask;
}

int TensorSpace::level(Index flat) const { return std::popcount(component_mask(flat)); }

int ComponentIndex::size() const { return std::popcount(mask); }

std::vector<int> ComponentIndex::slots() const {
  std::vector<int> out;
  for (int k = 1; k <= r; ++k) {
    if (contains_slot(k)) out.push_back(k);
  }
  return out;
}

ComponentIndex ComponentIndex::of_slots(int r, const std::vector<int>& slots) {
  ComponentIndex I{r, 0};
  for (int s : slots) {
    assert(s >= 1 && s <= r);
    I.mask |= 1u << (s - 1);
  }
  return I;
}

std::vector<ComponentIndex> subsets_of_size(int r, int l) {
  std::vector<ComponentIndex> out;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    if (std::popcount(mask) == l) out.push_back(ComponentIndex{r, mask});
  }
  return out;
}

std::vector<Index> component_basis(const TensorSpace& space, const ComponentIndex& I) {
  assert(I.r == space.r);
  assert(space.enhanced || I.mask == ComponentIndex::full(space.r).mask);
  std::vector<int> t(static_cast<std::size_t>(space.r), space.enhanced ? space.eta() : 1);
  std::vector<int> vslots = I.slots();
  std::vector<Index> out;
  Index count = 1;
  for (std::size_t k = 0; k < vslots.size(); ++k) count *= space.n;
  out.reserve(static_cast<std::size_t>(count));
  // Odometer over the V-slots, most significant first: ascending local order.
  for (int s : vslots) t[static_cast<std::size_t>(s - 1)] = 1;
  for (;;) {
    out.push_back(space.flat(t));
    int k = static_cast<int>(vslots.size()) - 1;
    while (k >= 0) {
      int& letter = t[static_cast<std::size_t>(vslots[static_cast<std::size_t>(k)] - 1)];
      if (letter < space.n) {
        ++letter;
        break;
      }
      letter = 1;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

ComponentIndex permute_component(const Permutation& s, const ComponentIndex& I) {
  ComponentIndex out{I.r, 0};
  for (int slot : I.slots()) out.mask |= 1u << (s(slot) - 1);
  return out;
}

bool LabeledOperator::respects_components() const {
  for (Index r = 0; r < op.nrows(); ++r) {
    for (const auto& [c, v] : op.row(r)) {
      (void)v;
      if (codomain_component && codomain.component_mask(r) != codomain_component->mask) {
        return false;
      }
      if (domain_component && domain.component_mask(c) != domain_component->mask) {
        return false;
      }
    }
  }
  return true;
}

namespace {

using Option = std::pair<int, Rational>;  // (letter, coefficient)

// Cartesian product over per-slot options; emits (tuple, value) pairs.
void expand_options(const std::vector<std::vector<Option>>& options, std::vector<int>& tuple,
                    const std::vector<int>& slots, std::size_t k, const Rational& value,
                    const std::function<void(const std::vector<int>&, const Rational&)>& emit) {
  if (k == options.size()) {
    emit(tuple, value);
    return;
  }
  for (const auto& [letter, coef] : options[k]) {
    tuple[static_cast<std::size_t>(slots[k] - 1)] = letter;
    expand_options(options, tuple, slots, k + 1, value * coef, emit);
  }
}

std::vector<Option> mat_column(const Mat& m, int col) {
  std::vector<Option> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i][static_cast<std::size_t>(col - 1)] != 0) {
      out.emplace_back(static_cast<int>(i) + 1, m[i][static_cast<std::size_t>(col - 1)]);
    }
  }
  return out;
}

}  // namespace

LabeledOperator phi(const Mat& g, const TensorSpace& space) {
  assert(static_cast<int>(g.size()) == space.letter_dim());
  Index d = space.dim();
  SparseOperator op(d, d);
  std::vector<int> slots(static_cast<std::size_t>(space.r));
  for (int k = 0; k < space.r; ++k) slots[static_cast<std::size_t>(k)] = k + 1;
  for (Index c = 0; c < d; ++c) {
    std::vector<int> t = space.tuple(c);
    std::vector<std::vector<Option>> options;
    options.reserve(static_cast<std::size_t>(space.r));
    bool dead = false;
    for (int k = 0; k < space.r; ++k) {
      options.push_back(mat_column(g, t[static_cast<std::size_t>(k)]));
      if (options.back().empty()) dead = true;
    }
    if (dead) continue;
    std::vector<int> row_tuple(static_cast<std::size_t>(space.r));
    expand_options(options, row_tuple, slots, 0, Rational(1),
                   [&](const std::vector<int>& rt, const Rational& v) {
                     op.add_entry(space.flat(rt), c, v);
                   });
  }
  op.finalize();
  return {std::move(op), space, space, std::nullopt, std::nullopt, "phi"};
}

LabeledOperator dphi(const Mat& x, const TensorSpace& space) {
  assert(static_cast<int>(x.size()) == space.letter_dim());
  Index d = space.dim();
  SparseOperator op(d, d);
  for (Index c = 0; c < d; ++c) {
    std::vector<int> t = space.tuple(c);
    for (int k = 1; k <= space.r; ++k) {
      for (const auto& [letter, coef] : mat_column(x, t[static_cast<std::size_t>(k - 1)])) {
        std::vector<int> rt = t;
        rt[static_cast<std::size_t>(k - 1)] = letter;
        op.add_entry(space.flat(rt), c, coef);
      }
    }
  }
  op.finalize();
  return {std::move(op), space, space, std::nullopt, std::nullopt, "dphi"};
}

LabeledOperator psi(const Permutation& s, const TensorSpace& space) {
  assert(s.degree() == space.r);
  Permutation sinv = s.inverse();
  Index d = space.dim();
  SparseOperator op(d, d);
  std::vector<int> rt(static_cast<std::size_t>(space.r));
  for (Index c = 0; c < d; ++c) {
    std::vector<int> t = space.tuple(c);
    for (int k = 1; k <= space.r; ++k) {
      rt[static_cast<std::size_t>(k - 1)] = t[static_cast<std::size_t>(sinv(k) - 1)];
    }
    op.add_entry(space.flat(rt), c, 1);
  }
  op.finalize();
  return {std::move(op), space, space, std::nullopt, std::nullopt, "psi"};
}

LabeledOperator contraction(int i, int j, const FormSpec& form, const TensorSpace& space) {
  assert(!space.enhanced && 1 <= i && i < j && j <= space.r && space.n == form.n);
  TensorSpace target{space.n, space.r - 2, false};
  SparseOperator op(target.dim(), space.dim());
  for (Index c = 0; c < space.dim(); ++c) {
    std::vector<int> t = space.tuple(c);
    Rational coef = form.omega_basis(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(j - 1)]);
    if (coef == 0) continue;
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(space.r - 2));
    for (int k = 1; k <= space.r; ++k) {
      if (k != i && k != j) rest.push_back(t[static_cast<std::size_t>(k - 1)]);
    }
    op.add_entry(target.flat(rest), c, coef);
  }
  op.finalize();
  return {std::move(op), space, target, std::nullopt, std::nullopt, "contraction"};
}

LabeledOperator expansion(int i, int j, const FormSpec& form, const TensorSpace& space) {
  assert(!space.enhanced && 1 <= i && i < j && j <= space.r && space.n == form.n);
  TensorSpace source{space.n, space.r - 2, false};
  SparseOperator op(space.dim(), source.dim());
  for (Index c = 0; c < source.dim(); ++c) {
    std::vector<int> rest = source.tuple(c);
    std::vector<int> rt(static_cast<std::size_t>(space.r));
    std::size_t next = 0;
    for (int k = 1; k <= space.r; ++k) {
      if (k != i && k != j) rt[static_cast<std::size_t>(k - 1)] = rest[next++];
    }
    for (int p = 1; p <= form.n; ++p) {
      for (int q = 1; q <= form.n; ++q) {
        const Rational& w = form.dual[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
        if (w == 0) continue;
        rt[static_cast<std::size_t>(i - 1)] = p;
        rt[static_cast<std::size_t>(j - 1)] = q;
        op.add_entry(space.flat(rt), c, w);
      }
    }
  }
  op.finalize();
  return {std::move(op), source, space, std::nullopt, std::nullopt, "expansion"};
}

LabeledOperator tau_pair(int i, int j, const FormSpec& form, const TensorSpace& space) {
  assert(1 <= i && i < j && j <= space.r && space.n == form.n);
  Index d = space.dim();
  SparseOperator op(d, d);
  for (Index c = 0; c < d; ++c) {
    std::vector<int> t = space.tuple(c);
    int a = t[static_cast<std::size_t>(i - 1)], b = t[static_cast<std::size_t>(j - 1)];
    if (a > form.n || b > form.n) continue;  // eta letters annihilate
    Rational coef = form.omega_basis(a, b);
    if (coef == 0) continue;
    std::vector<int> rt = t;
    for (int p = 1; p <= form.n; ++p) {
      for (int q = 1; q <= form.n; ++q) {
        const Rational& w = form.dual[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
        if (w == 0) continue;
        rt[static_cast<std::size_t>(i - 1)] = p;
        rt[static_cast<std::size_t>(j - 1)] = q;
        op.add_entry(space.flat(rt), c, coef * w);
      }
    }
  }
  op.finalize();
  return {std::move(op), space, space, std::nullopt, std::nullopt, "tau"};
}

LabeledOperator tau_diagram(const NormalizedDiagram& z, const FormSpec& form,
                            const TensorSpace& space) {
  assert(z.r == space.r);
  SparseOperator op = SparseOperator::identity(space.dim());
  for (const auto& [i, j] : z.bars) op = tau_pair(i, j, form, space).op.compose(op);
  return {std::move(op), space, space, std::nullopt, std::nullopt, "tau_z"};
}

LabeledOperator word_operator(const BrauerWord& w, const FormSpec& form,
                              const TensorSpace& space) {
  SparseOperator op = psi(w.s, space).op.compose(tau_diagram(w.z, form, space).op);
  return {std::move(op), space, space, std::nullopt, std::nullopt, "word"};
}

LabeledOperator embed_sigma(const SparseOperator& sigma, const ComponentIndex& I,
                            const TensorSpace& space) {
  assert(space.enhanced && I.r == space.r);
  std::vector<Index> basis = component_basis(space, I);
  assert(sigma.nrows() == static_cast<Index>(basis.size()) && sigma.ncols() == sigma.nrows());
  Index d = space.dim();
  SparseOperator op(d, d);
  for (Index lr = 0; lr < sigma.nrows(); ++lr) {
    for (const auto& [lc, v] : sigma.row(lr)) {
      op.add_entry(basis[static_cast<std::size_t>(lr)], basis[static_cast<std::size_t>(lc)], v);
    }
  }
  op.finalize();
  return {std::move(op), space, space, I, I, "embed"};
}

LabeledOperator restrict_to(const LabeledOperator& sigma, const ComponentIndex& I) {
  const TensorSpace& space = sigma.domain;
  assert(space == sigma.codomain && I.r == space.r);
  SparseOperator op(space.dim(), space.dim());
  for (Index r = 0; r < space.dim(); ++r) {
    for (const auto& [c, v] : sigma.op.row(r)) {
      if (space.component_mask(c) == I.mask) op.add_entry(r, c, v);
    }
  }
  op.finalize();
  return {std::move(op), space, space, I, std::nullopt, sigma.tag + "_restricted"};
}

LabeledOperator transfer(const ComponentIndex& J, const ComponentIndex& I,
                         const TensorSpace& space) {
  assert(space.enhanced && J.size() == I.size());
  std::vector<Index> bi = component_basis(space, I);
  std::vector<Index> bj = component_basis(space, J);
  Index d = space.dim();
  SparseOperator op(d, d);
  for (std::size_t t = 0; t < bi.size(); ++t) op.add_entry(bj[t], bi[t], 1);
  op.finalize();
  return {std::move(op), space, space, I, J, "transfer"};
}

LabeledOperator projection(const ComponentIndex& I, const TensorSpace& space) {
  Index d = space.dim();
  SparseOperator op(d, d);
  for (Index b : component_basis(space, I)) op.add_entry(b, b, 1);
  op.finalize();
  return {std::move(op), space, space, I, I, "projection"};
}

LabeledOperator level_projection(int l, const TensorSpace& space) {
  Index d = space.dim();
  SparseOperator op(d, d);
  for (Index b = 0; b < d; ++b) {
    if (space.level(b) == l) op.add_entry(b, b, 1);
  }
  op.finalize();
  return {std::move(op), space, space, std::nullopt, std::nullopt, "level_projection"};
}

LabeledOperator rho_component_word(const BrauerWord& w, const ComponentIndex& I,
                                   const FormSpec& form, const TensorSpace& space) {
  assert(space.enhanced && w.s.degree() == space.r && I.r == space.r);
  ComponentIndex target = permute_component(w.s, I);
  if ((w.z.support_mask() & ~I.mask) != 0) {
    SparseOperator zero(space.dim(), space.dim());
    zero.finalize();
    return {std::move(zero), space, space, I, target, "rho_component"};
  }
  SparseOperator op = projection(I, space).op;
  for (const auto& [i, j] : w.z.bars) op = tau_pair(i, j, form, space).op.compose(op);
  op = psi(w.s, space).op.compose(op);
  return {std::move(op), space, space, I, target, "rho_component"};
}

LabeledOperator rho_word(const BrauerWord& w, const FormSpec& form, const TensorSpace& space) {
  Index d = space.dim();
  SparseOperator acc(d, d);
  acc.finalize();
  std::uint32_t support = w.z.support_mask();
  std::uint32_t full = ComponentIndex::full(space.r).mask;
  std::uint32_t rest = full & ~support;
  // All I containing the bars: support | (submask of rest), ascending.
  std::uint32_t sub = 0;
  for (;;) {
    acc = acc.plus(rho_component_word(w, ComponentIndex{space.r, support | sub}, form, space).op);
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
  return {std::move(acc), space, space, std::nullopt, std::nullopt, "rho"};
}

LabeledOperator rho_component(const FormalBrauer& x, const ComponentIndex& I,
                              const FormSpec& form, const TensorSpace& space) {
  Index d = space.dim();
  SparseOperator acc(d, d);
  acc.finalize();
  for (const auto& [w, coef] : x.terms) {
    acc = acc.plus(rho_component_word(w, I, form, space).op.scaled(coef));
  }
  return {std::move(acc), space, space, I, std::nullopt, "rho_component"};
}

LabeledOperator rho(const FormalBrauer& x, const FormSpec& form, const TensorSpace& space) {
  Index d = space.dim();
  SparseOperator acc(d, d);
  acc.finalize();
  for (const auto& [w, coef] : x.terms) {
    acc = acc.plus(rho_word(w, form, space).op.scaled(coef));
  }
  return {std::move(acc), space, space, std::nullopt, std::nullopt, "rho"};
}

LabeledOperator expand_step(int i, int j, const ComponentIndex& I, const ComponentIndex& J,
                            const FormSpec& form, const TensorSpace& space) {
  assert(space.enhanced && i < j && !I.contains_slot(i) && !I.contains_slot(j));
  assert(J.mask == (I.mask | (1u << (i - 1)) | (1u << (j - 1))));
  Index d = space.dim();
  SparseOperator op(d, d);
  for (Index c : component_basis(space, I)) {
    std::vector<int> t = space.tuple(c);
    for (int p = 1; p <= form.n; ++p) {
      for (int q = 1; q <= form.n; ++q) {
        const Rational& w = form.dual[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
        if (w == 0) continue;
        t[static_cast<std::size_t>(i - 1)] = p;
        t[static_cast<std::size_t>(j - 1)] = q;
        op.add_entry(space.flat(t), c, w);
      }
    }
    t[static_cast<std::size_t>(i - 1)] = space.eta();
    t[static_cast<std::size_t>(j - 1)] = space.eta();
  }
  op.finalize();
  return {std::move(op), space, space, I, J, "expand"};
}

LabeledOperator contract_step(int i, int j, const ComponentIndex& I, const ComponentIndex& J,
                              const FormSpec& form, const TensorSpace& space) {
  assert(space.enhanced && i < j && J.contains_slot(i) && J.contains_slot(j));
  assert(I.mask == (J.mask & ~((1u << (i - 1)) | (1u << (j - 1)))));
  Index d = space.dim();
  SparseOperator op(d, d);
  for (Index c : component_basis(space, J)) {
    std::vector<int> t = space.tuple(c);
    Rational coef = form.omega_basis(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(j - 1)]);
    if (coef == 0) continue;
    t[static_cast<std::size_t>(i - 1)] = space.eta();
    t[static_cast<std::size_t>(j - 1)] = space.eta();
    op.add_entry(space.flat(t), c, coef);
  }
  op.finalize();
  return {std::move(op), space, space, J, I, "contract"};
}

std::vector<Pairing> pairings_between(const ComponentIndex& K, const ComponentIndex& L) {
  assert(K.subset_of(L));
  std::vector<int> elems;
  for (int s = 1; s <= L.r; ++s) {
    if (L.contains_slot(s) && !K.contains_slot(s)) elems.push_back(s);
  }
  std::vector<Pairing> out;
  if (elems.size() % 2 != 0) return out;
  Pairing acc;
  std::vector<char> used(elems.size(), 0);
  std::function<void()> rec = [&]() {
    std::size_t first = 0;
    while (first < elems.size() && used[first]) ++first;
    if (first == elems.size()) {
      out.push_back(acc);
      return;
    }
    used[first] = 1;
    for (std::size_t second = first + 1; second < elems.size(); ++second) {
      if (used[second]) continue;
      used[second] = 1;
      acc.emplace_back(elems[first], elems[second]);
      rec();
      acc.pop_back();
      used[second] = 0;
    }
    used[first] = 0;
  };
  rec();
  return out;
}

LabeledOperator expand_pairing(const Pairing& pi, const ComponentIndex& I,
                               const ComponentIndex& J, const FormSpec& form,
                               const TensorSpace& space) {
  SparseOperator op = projection(I, space).op;
  ComponentIndex cur = I;
  for (const auto& [a, b] : pi) {
    ComponentIndex next{cur.r, cur.mask | (1u << (a - 1)) | (1u << (b - 1))};
    op = expand_step(a, b, cur, next, form, space).op.compose(op);
    cur = next;
  }
  assert(cur == J);
  (void)J;
  return {std::move(op), space, space, I, J, "expand_pairing"};
}

LabeledOperator contract_pairing(const Pairing& pi, const ComponentIndex& I,
                                 const ComponentIndex& J, const FormSpec& form,
                                 const TensorSpace& space) {
  SparseOperator op = projection(J, space).op;
  ComponentIndex cur = J;
  for (std::size_t k = pi.size(); k-- > 0;) {
    const auto& [a, b] = pi[k];
    ComponentIndex prev{cur.r, cur.mask & ~((1u << (a - 1)) | (1u << (b - 1)))};
    op = contract_step(a, b, prev, cur, form, space).op.compose(op);
    cur = prev;
  }
  assert(cur == I);
  (void)I;
  return {std::move(op), space, space, J, I, "contract_pairing"};
}

SparseVec difference_vector(const SparseVec& v, const std::vector<Rational>& w,
                            const TensorSpace& space) {
  assert(space.enhanced && static_cast<int>(w.size()) == space.n);
  std::map<Index, Rational> acc;
  for (const auto& [flat, val] : v) {
    std::vector<int> t = space.tuple(flat);
    std::vector<int> eta_slots;
    for (int k = 1; k <= space.r; ++k) {
      if (t[static_cast<std::size_t>(k - 1)] == space.eta()) eta_slots.push_back(k);
    }
    std::vector<std::vector<Option>> options;
    for (std::size_t s = 0; s < eta_slots.size(); ++s) {
      std::vector<Option> opt{{space.eta(), Rational(1)}};
      for (int letter = 1; letter <= space.n; ++letter) {
        if (w[static_cast<std::size_t>(letter - 1)] != 0) {
          opt.emplace_back(letter, w[static_cast<std::size_t>(letter - 1)]);
        }
      }
      options.push_back(std::move(opt));
    }
    std::vector<int> rt = t;
    expand_options(options, rt, eta_slots, 0, val,
                   [&](const std::vector<int>& tup, const Rational& x) {
                     Rational& slot = acc[space.flat(tup)];
                     slot += x;
                   });
  }
  for (const auto& [flat, val] : v) {
    Rational& slot = acc[flat];
    slot -= val;
  }
  SparseVec out;
  for (const auto& [k, x] : acc) {
    if (x != 0) out.emplace_back(k, x);
  }
  return out;
}

}  // namespace ebrauer
