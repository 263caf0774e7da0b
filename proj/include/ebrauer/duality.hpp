#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ebrauer/enhanced_algebra.hpp"
#include "ebrauer/forms_groups.hpp"
#include "ebrauer/subspace.hpp"
#include "ebrauer/tensor_ops.hpp"

namespace ebrauer {

enum class Form { orthogonal, symplectic };

inline int epsilon_of(Form f) { return f == Form::orthogonal ? 1 : -1; }
inline const char* form_tag(Form f) { return f == Form::orthogonal ? "O" : "Sp"; }

// Commutation requirements [X, op] = 0 defining an endomorphism algebra.
// Diagonal operators give single-unknown equations, so the solver processes
// them first; lie/group is bookkeeping only.
struct ConstraintSet {
  TensorSpace space;
  std::vector<SparseOperator> lie;
  std::vector<SparseOperator> group;
};

// Constraints for the form-preserving group acting letterwise; on the
// enhanced space generators are lifted (eta fixed, eta killed).
ConstraintSet group_constraints(const GroupSpec& g, const TensorSpace& space);
void add_torus_constraint(ConstraintSet& cs);       // dPhi(E_{eta,eta})
void add_nilpotent_constraints(ConstraintSet& cs);  // dPhi(E_{i,eta}), i = 1..n
ConstraintSet gl_constraints(const TensorSpace& space);  // full matrix algebra on letters

// {X : [X, M] = 0 for all M}, as vectorized operators in Q^(dim^2).
// allow, when set, additionally pins X to the positions it admits.
OperatorSubspace commutant(const ConstraintSet& cs);
OperatorSubspace commutant_masked(const ConstraintSet& cs,
                                  const std::function<bool(Index, Index)>& allow);

// Intertwiners V-bar_I -> V-bar_J under the constraints, embedded in
// End(V-bar^(tensor r)) with zero outside the block.
OperatorSubspace hom_space(const ConstraintSet& cs, const ComponentIndex& I,
                           const ComponentIndex& J);

SparseOperator devectorize(const SparseVec& v, Index nrows, Index ncols);

struct SideDim {
  std::string name;
  Index dim = 0;
};

struct LevelEntry {
  int l = 0;
  Index lhs = 0;
  Index rhs = 0;
  bool match = false;
};

struct DualityReport {
  std::string scenario;
  int epsilon = 1;
  int n = 0;
  int r = 0;
  std::vector<SideDim> sides;
  bool equal = false;  // every assertion of the check
  std::vector<LevelEntry> per_level;
  std::int64_t elapsed_ms = 0;
};

// End_G(V^(tensor r)) against the span of the Psi(s) tau_z operators.
DualityReport verify_plain_commutant(Form f, int n, int r);

// End_G(V-bar^(tensor r)) against the sum of all even blocks; every block
// compared individually against its construction, odd blocks against zero.
DualityReport verify_restricted(Form f, int n, int r);

// End_{G x torus} against the enhanced algebra, with per-level dimensions,
// level-block-diagonality, and the masked/unmasked solver cross-check.
DualityReport verify_levi(Form f, int n, int r);

// End of the full enhanced group against both the nilpotent-centralizer
// inside the enhanced algebra and the rho image of the plain algebra.
DualityReport verify_parabolic(Form f, int n, int r);

// Every element of End_{G rtimes translations} raises levels; includes a
// corrupted-operator negative control.
DualityReport verify_filtration(Form f, int n, int r);

// Probe systems: coefficients annihilating all D_v^w with v over a component
// basis force the component image of the element to vanish.
DualityReport verify_annihilation(Form f, int n, int r);

// End_{GL}(enhanced space) equals the place-permutation span.
DualityReport verify_gl_sanity(Form f, int n, int r);

// Dimension-formula check wrapped as a report.
DualityReport verify_dims(Form f, int n, int r);

// Product-formula check wrapped as a report.
DualityReport verify_mulformula(Form f, int n, int r, Index samples, std::uint64_t seed);

}  // namespace ebrauer
