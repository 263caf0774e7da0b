#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ebrauer/diagrams.hpp"
#include "ebrauer/forms_groups.hpp"
#include "ebrauer/sparse.hpp"

namespace ebrauer {

// Basis of V^(tensor r) or V-bar^(tensor r): tuples over letters 1..d where
// d = n (plain) or n+1 (enhanced, letter n+1 = eta). Flat index is
// lexicographic with slot 1 most significant: sum (j_k - 1) d^(r-k).
struct TensorSpace {
  int n = 0;
  int r = 0;
  bool enhanced = false;

  int letter_dim() const { return enhanced ? n + 1 : n; }
  int eta() const { return n + 1; }
  Index dim() const;

  Index flat(const std::vector<int>& tuple) const;
  std::vector<int> tuple(Index flat) const;

  // Slots carrying V-letters, as bits 0..r-1 for slots 1..r.
  std::uint32_t component_mask(Index flat) const;
  int level(Index flat) const;  // popcount of the mask

  bool operator==(const TensorSpace& rhs) const {
    return n == rhs.n && r == rhs.r && enhanced == rhs.enhanced;
  }
};

// Subset I of {1..r} naming the slots that carry V-letters.
struct ComponentIndex {
  int r = 0;
  std::uint32_t mask = 0;

  int size() const;
  bool contains_slot(int slot) const { return (mask >> (slot - 1)) & 1u; }
  std::vector<int> slots() const;  // ascending, 1-based

  static ComponentIndex full(int r) { return {r, r == 32 ? ~0u : ((1u << r) - 1u)}; }
  static ComponentIndex empty(int r) { return {r, 0}; }
  static ComponentIndex of_slots(int r, const std::vector<int>& slots);

  bool subset_of(const ComponentIndex& rhs) const { return (mask & ~rhs.mask) == 0; }
  bool operator==(const ComponentIndex& rhs) const { return r == rhs.r && mask == rhs.mask; }
  bool operator<(const ComponentIndex& rhs) const { return mask < rhs.mask; }
};

// All size-l subsets, ascending mask order.
std::vector<ComponentIndex> subsets_of_size(int r, int l);

// Basis of the component V-bar_I inside the enhanced space: global flat
// indices, ordered by the local tuple in {1..n}^|I| (which is also ascending
// global order). For the plain space use I = full.
std::vector<Index> component_basis(const TensorSpace& space, const ComponentIndex& I);

// Image of s on slot subsets.
ComponentIndex permute_component(const Permutation& s, const ComponentIndex& I);

// Operator together with the spaces it acts between and, when meaningful, the
// components its support is confined to. tag records which construction
// produced it (for report text only; no logic reads it).
struct LabeledOperator {
  SparseOperator op;
  TensorSpace domain;
  TensorSpace codomain;
  std::optional<ComponentIndex> domain_component;
  std::optional<ComponentIndex> codomain_component;
  std::string tag;

  // Columns outside domain_component and rows outside codomain_component must
  // be empty; returns false if any entry escapes.
  bool respects_components() const;
};

// --- letterwise actions ---------------------------------------------------

// Kronecker r-th power of g (letter_dim x letter_dim).
LabeledOperator phi(const Mat& g, const TensorSpace& space);
// Leibniz action: sum over slots of x acting in one slot.
LabeledOperator dphi(const Mat& x, const TensorSpace& space);
// Place permutation: slot k of the output carries slot s^{-1}(k) of the input.
LabeledOperator psi(const Permutation& s, const TensorSpace& space);

// --- form contractions on slot pairs --------------------------------------

// C_ij: V^r -> V^(r-2), pairing slots i < j by omega.
LabeledOperator contraction(int i, int j, const FormSpec& form, const TensorSpace& space);
// D_ij: V^(r-2) -> V^r, inserting sum_p f_p at slot i and f^p at slot j.
LabeledOperator expansion(int i, int j, const FormSpec& form, const TensorSpace& space);
// tau_ij = D_ij C_ij as an endomorphism, acting in place on slots i, j.
// On the enhanced space, columns with eta at slot i or j are annihilated.
LabeledOperator tau_pair(int i, int j, const FormSpec& form, const TensorSpace& space);
// tau_z: product of tau_pair over the bars of z (disjoint slots commute).
LabeledOperator tau_diagram(const NormalizedDiagram& z, const FormSpec& form,
                            const TensorSpace& space);
// Psi(s) tau_z on the plain space V^(tensor r).
LabeledOperator word_operator(const BrauerWord& w, const FormSpec& form,
                              const TensorSpace& space);

// --- component plumbing on the enhanced space ------------------------------

// sigma^I: sigma on V^(tensor l) acting through the V-slots of I, supported on
// V-bar_I x V-bar_I and zero elsewhere.
LabeledOperator embed_sigma(const SparseOperator& sigma, const ComponentIndex& I,
                            const TensorSpace& space);
// sigma^{[I]}: columns restricted to V-bar_I.
LabeledOperator restrict_to(const LabeledOperator& sigma, const ComponentIndex& I);
// E_{J,I}: V-bar_I -> V-bar_J carrying the k-th V-slot of I to the k-th of J.
LabeledOperator transfer(const ComponentIndex& J, const ComponentIndex& I,
                         const TensorSpace& space);
// Pr_I: projection onto V-bar_I.
LabeledOperator projection(const ComponentIndex& I, const TensorSpace& space);
// Projection onto the sum of components of size l.
LabeledOperator level_projection(int l, const TensorSpace& space);

// --- the rho family ---------------------------------------------------------

// rho_I(Psi(s) tau_z): zero unless the bars of z sit inside I; otherwise the
// bar actions on V-bar_I followed by Psi(s). Codomain component is s(I).
LabeledOperator rho_component_word(const BrauerWord& w, const ComponentIndex& I,
                                   const FormSpec& form, const TensorSpace& space);
// rho = sum over components I containing the bars.
LabeledOperator rho_word(const BrauerWord& w, const FormSpec& form, const TensorSpace& space);

// Formal rational combination of words, for linearity arguments.
struct FormalBrauer {
  int r = 0;
  std::vector<std::pair<BrauerWord, Rational>> terms;
};
LabeledOperator rho_component(const FormalBrauer& x, const ComponentIndex& I,
                              const FormSpec& form, const TensorSpace& space);
LabeledOperator rho(const FormalBrauer& x, const FormSpec& form, const TensorSpace& space);

// --- expansion / contraction between components -----------------------------

// D_ij^{IJ}: V-bar_I -> V-bar_J for J = I + {i,j}, filling slots i, j with the
// form's dual tensor.
LabeledOperator expand_step(int i, int j, const ComponentIndex& I, const ComponentIndex& J,
                            const FormSpec& form, const TensorSpace& space);
// C_ij^{IJ}: V-bar_J -> V-bar_I, pairing the letters at slots i, j by omega.
LabeledOperator contract_step(int i, int j, const ComponentIndex& I, const ComponentIndex& J,
                              const FormSpec& form, const TensorSpace& space);

// Pairings of L - K into unordered pairs, canonical order (each pair (i < j),
// lists sorted, smallest-first recursion). K = L yields the single empty
// pairing, and expand/contract of it act as the identity on the component.
using Pairing = std::vector<std::pair<int, int>>;
std::vector<Pairing> pairings_between(const ComponentIndex& K, const ComponentIndex& L);

LabeledOperator expand_pairing(const Pairing& pi, const ComponentIndex& I,
                               const ComponentIndex& J, const FormSpec& form,
                               const TensorSpace& space);
LabeledOperator contract_pairing(const Pairing& pi, const ComponentIndex& I,
                                 const ComponentIndex& J, const FormSpec& form,
                                 const TensorSpace& space);

// --- probe vectors ----------------------------------------------------------

// D_v^w = Phi(e^w) v - v for v in the enhanced space and w a coordinate vector
// of V.
SparseVec difference_vector(const SparseVec& v, const std::vector<Rational>& w,
                            const TensorSpace& space);

}  // namespace ebrauer
