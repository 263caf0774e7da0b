#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ebrauer/subspace.hpp"
#include "ebrauer/tensor_ops.hpp"

namespace ebrauer {

Index binomial(int a, int b);
Index double_factorial_odd(int t);  // (2t-1)!!, 1 for t = 0

// Canonical factorizations of all (2r-1)!! diagrams, in diagram enumeration
// order. These words give one spanning operator per diagram.
std::vector<BrauerWord> canonical_words(int r);

struct SpanningOp {
  SparseOperator op;
  std::string desc;
};

struct SpannedAlgebra {
  int epsilon = 1;
  int n = 0;
  int r = 0;
  TensorSpace space;
  std::vector<SpanningOp> generators;
  OperatorSubspace span;
};

// Operators Psi(s) tau_z on V^(tensor r), one per diagram.
SpannedAlgebra span_plain_brauer(int epsilon, int n, int r);

// Level-l part on the enhanced space: E_{J,I} (Psi(s) tau_z)^I over all
// components I, J of size l and canonical words of length l.
SpannedAlgebra span_enhanced_level(int epsilon, int n, int r, int l);

// All levels together.
SpannedAlgebra span_enhanced(int epsilon, int n, int r);

// The block V-bar_I -> V-bar_J, realized inside End(V-bar^(tensor r)):
// equal sizes transfer a level; unequal sizes insert or contract form pairs
// through every intermediate component. Odd size sums span zero.
SpannedAlgebra span_block(int epsilon, int n, const ComponentIndex& I, const ComponentIndex& J);

// Direct sum over all components of sizes s (domain) and t (codomain).
SpannedAlgebra span_block_pair(int epsilon, int n, int r, int s, int t);

Index level_dimension_expected(int r, int l);

struct LevelDim {
  int l = 0;
  Index dim = 0;
  Index expected = 0;  // meaningful only when applicable
  bool match = false;
};

struct DimensionTable {
  int epsilon = 1;
  int n = 0;
  int r = 0;
  bool applicable = false;  // dimension formula needs n >= 2r
  std::vector<LevelDim> levels;
  Index total = 0;
  Index expected_total = 0;
  bool rank_additive = false;  // total == sum of level dims
  bool all_match = false;
};

DimensionTable dimension_table(int epsilon, int n, int r);
std::string dimension_table_json(const DimensionTable& t);
std::string dimension_table_csv(const DimensionTable& t);

// (E_{IJ} sigma^J)(E_{KL} lambda^L) = [J = K] E_{IL} (sigma lambda)^L, checked
// over concrete operators. r = 2 admits the full product table; larger r is
// sampled with the given seed.
struct MulFormulaReport {
  bool ok = true;
  Index checked = 0;
  std::string first_failure;
};
MulFormulaReport verify_multiplication_formula(int epsilon, int n, int r, Index samples,
                                               std::uint64_t seed);

// B splits as the direct sum over components I of rho_I applied to the plain
// algebra: summed spans reproduce span_enhanced and dimensions add up.
bool verify_rho_decomposition(int epsilon, int n, int r);

}  // namespace ebrauer
