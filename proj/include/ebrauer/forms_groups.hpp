#pragma once

#include <vector>

#include "ebrauer/rational.hpp"

namespace ebrauer {

// Small dense rational matrices for group/Lie generators on V and V-bar.
using Mat = std::vector<std::vector<Rational>>;

Mat mat_zero(int nrows, int ncols);
Mat mat_identity(int n);
Mat mat_unit(int n, int r, int c);  // E_rc, 1-based
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const Rational& c);
Mat mat_transpose(const Mat& a);
Mat mat_inverse(const Mat& a);  // throws std::invalid_argument if singular
bool mat_is_zero(const Mat& a);

// Bilinear form on V = Q^n: omega(u, v) = u^T gram v. epsilon = +1 symmetric
// (gram = I), epsilon = -1 skew (gram = [[0, I_m], [-I_m, 0]], n = 2m).
// dual[q] holds f^q = gram^{-1} e_q, the basis dual to f_p = e_p in the sense
// omega(f_p, f^q) = delta_pq.
struct FormSpec {
  int epsilon = 1;
  int n = 0;
  Mat gram;
  Mat dual;  // dual[q-1][p-1] = p-th coordinate of f^q

  Rational omega_basis(int p, int q) const { return gram[p - 1][q - 1]; }
};

FormSpec make_form(int epsilon, int n);

// Form-preserving group data: Lie algebra basis {X : X^T gram + gram X = 0}
// and the finite generators needed on top of the identity component.
struct GroupSpec {
  FormSpec form;
  std::vector<Mat> lie_basis;
  std::vector<Mat> component_reps;  // orthogonal: coordinate reflections; symplectic: none
};

GroupSpec make_orthogonal(int n);
GroupSpec make_symplectic(int n);

// V-bar = V + Q eta: endomorphisms of V extend by zero on eta, group elements
// by fixing eta.
Mat lift_endo(const Mat& x);
Mat lift_group(const Mat& g);

// Unipotent translation e^v: u -> u, eta -> v + eta.
Mat enhanced_translation(const std::vector<Rational>& v);

// Scaling c on eta only: diag(1, .., 1, c) of size n+1.
Mat enhanced_scaling(int n, const Rational& c);

// Generators of the enhanced part: nilpotents N_i = E_{i, n+1} spanning the
// translation directions, torus generator E_{n+1, n+1}.
struct EnhancedGenerators {
  std::vector<Mat> nilpotents;
  Mat torus;
};
EnhancedGenerators make_enhanced_generators(int n);

// Cayley element (I - S)^{-1} (I + S) for S = A - gram^{-1} A^T gram, a dense
// rational point of the identity component; used for group-level spot checks.
Mat cayley_element(const FormSpec& form, const Mat& a);

}  // namespace ebrauer
