#include "ebrauer/forms_groups.hpp"

#include <cassert>
#include <stdexcept>

namespace ebrauer {

Mat mat_zero(int nrows, int ncols) {
  return Mat(static_cast<std::size_t>(nrows),
             std::vector<Rational>(static_cast<std::size_t>(ncols), Rational(0)));
}

Mat mat_identity(int n) {
  Mat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

Mat mat_unit(int n, int r, int c) {
  Mat m = mat_zero(n, n);
  m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  assert(a.empty() || a[0].size() == k);
  Mat out(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
      }
    }
  }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  }
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  }
  return out;
}

Mat mat_scale(const Mat& a, const Rational& c) {
  Mat out = a;
  for (auto& row : out) {
    for (auto& v : row) v *= c;
  }
  return out;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat out(a[0].size(), std::vector<Rational>(a.size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

Mat mat_inverse(const Mat& a) {
  std::size_t n = a.size();
  Mat work = a;
  Mat inv = mat_identity(static_cast<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("mat_inverse: singular matrix");
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      Rational f = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= f * work[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a) {
    for (const auto& v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

FormSpec make_form(int epsilon, int n) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  FormSpec f;
  f.epsilon = epsilon;
  f.n = n;
  if (epsilon == 1) {
    f.gram = mat_identity(n);
  } else {
    if (n % 2 != 0) throw std::invalid_argument("skew form needs even n");
    int m = n / 2;
    f.gram = mat_zero(n, n);
    for (int p = 1; p <= m; ++p) {
      f.gram[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(m + p - 1)] = 1;
      f.gram[static_cast<std::size_t>(m + p - 1)][static_cast<std::size_t>(p - 1)] = -1;
    }
  }
  Mat gram_inv = mat_inverse(f.gram);
  // f^q = gram^{-1} e_q is the q-th column of gram^{-1}.
  f.dual = mat_transpose(gram_inv);
  return f;
}

GroupSpec make_orthogonal(int n) {
  GroupSpec g;
  g.form = make_form(1, n);
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      g.lie_basis.push_back(mat_sub(mat_unit(n, p, q), mat_unit(n, q, p)));
    }
  }
  // Coordinate reflections all lie in O(V); having each one available keeps
  // commutant systems diagonal-heavy (see LinearSystem::eliminated_unit).
  for (int i = 1; i <= n; ++i) {
    Mat refl = mat_identity(n);
    refl[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = -1;
    g.component_reps.push_back(std::move(refl));
  }
  return g;
}

GroupSpec make_symplectic(int n) {
  if (n % 2 != 0) throw std::invalid_argument("symplectic group needs even n");
  int m = n / 2;
  GroupSpec g;
  g.form = make_form(-1, n);
  auto embed = [&](const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
    Mat x = mat_zero(n, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + j)] = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(m + j)] = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    return x;
  };
  Mat zero = mat_zero(m, m);
  // Blocks [[A, B], [C, -A^T]] with B, C symmetric span the Lie algebra.
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      Mat a = mat_unit(m, i, j);
      g.lie_basis.push_back(embed(a, zero, zero, mat_scale(mat_transpose(a), Rational(-1))));
    }
  }
  std::vector<Mat> sym;
  for (int i = 1; i <= m; ++i) sym.push_back(mat_unit(m, i, i));
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) sym.push_back(mat_add(mat_unit(m, i, j), mat_unit(m, j, i)));
  }
  for (const auto& s : sym) g.lie_basis.push_back(embed(zero, s, zero, zero));
  for (const auto& s : sym) g.lie_basis.push_back(embed(zero, zero, s, zero));
  return g;
}

Mat lift_endo(const Mat& x) {
  int n = static_cast<int>(x.size());
  Mat out = mat_zero(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return out;
}

Mat lift_group(const Mat& g) {
  Mat out = lift_endo(g);
  out[g.size()][g.size()] = 1;
  return out;
}

Mat enhanced_translation(const std::vector<Rational>& v) {
  int n = static_cast<int>(v.size());
  Mat out = mat_identity(n + 1);
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = v[static_cast<std::size_t>(i)];
  }
  return out;
}

Mat enhanced_scaling(int n, const Rational& c) {
  Mat out = mat_identity(n + 1);
  out[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = c;
  return out;
}

EnhancedGenerators make_enhanced_generators(int n) {
  EnhancedGenerators gen;
  for (int i = 1; i <= n; ++i) gen.nilpotents.push_back(mat_unit(n + 1, i, n + 1));
  gen.torus = mat_unit(n + 1, n + 1, n + 1);
  return gen;
}

Mat cayley_element(const FormSpec& form, const Mat& a) {
  Mat gram_inv = mat_inverse(form.gram);
  Mat s = mat_sub(a, mat_mul(gram_inv, mat_mul(mat_transpose(a), form.gram)));
  Mat i_minus = mat_sub(mat_identity(form.n), s);
  Mat i_plus = mat_add(mat_identity(form.n), s);
  return mat_mul(mat_inverse(i_minus), i_plus);
}

}  // namespace ebrauer
