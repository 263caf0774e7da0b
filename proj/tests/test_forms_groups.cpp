#include <doctest.h>

#include <ebrauer/forms_groups.hpp>

#include <random>
#include <stdexcept>

using namespace ebrauer;

TEST_CASE("matrix helpers behave") {
    Mat a = mat_unit(3, 1, 2);
    Mat b = mat_unit(3, 2, 3);
    CHECK(mat_mul(a, b) == mat_unit(3, 1, 3));
    CHECK(mat_is_zero(mat_mul(b, b)));
    CHECK(mat_transpose(a) == mat_unit(3, 2, 1));
    CHECK(mat_sub(a, a) == mat_zero(3, 3));

    Mat m = {{rat(2), rat(1)}, {rat(1), rat(1)}};
    Mat mi = mat_inverse(m);
    CHECK(mat_mul(m, mi) == mat_identity(2));
    CHECK(mat_mul(mi, m) == mat_identity(2));
    CHECK_THROWS_AS(mat_inverse(mat_zero(2, 2)), std::invalid_argument);
}

TEST_CASE("symmetric form: gram is the identity and the dual basis is itself") {
    FormSpec f = make_form(1, 5);
    CHECK(f.gram == mat_identity(5));
    CHECK(f.dual == mat_identity(5));
    CHECK(f.omega_basis(2, 2) == rat(1));
    CHECK(f.omega_basis(1, 2) == rat(0));
}

TEST_CASE("skew form: gram blocks, dual signs, and the delta property") {
    FormSpec f = make_form(-1, 6);
    const int m = 3;
    CHECK(f.omega_basis(1, 4) == rat(1));
    CHECK(f.omega_basis(4, 1) == rat(-1));
    CHECK(f.omega_basis(1, 2) == rat(0));
    CHECK(f.omega_basis(2, 2) == rat(0));

    // f^p = f_{p+m} for p <= m, f^p = -f_{p-m} for p > m.
    for (int p = 1; p <= m; ++p) {
        CHECK(f.dual[p - 1][p + m - 1] == rat(1));
        CHECK(f.dual[p + m - 1][p - 1] == rat(-1));
    }

    CHECK_THROWS_AS(make_form(-1, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_form(2, 4), std::invalid_argument);
}

TEST_CASE("dual basis satisfies omega(f_p, f^q) = delta exactly") {
    for (int eps : {1, -1}) {
        int n = eps == 1 ? 5 : 6;
        FormSpec f = make_form(eps, n);
        // omega(f_p, f^q) = e_p^T gram f^q; stacking over p gives gram * (f^q),
        // so gram * dual^T must be the identity.
        CHECK(mat_mul(f.gram, mat_transpose(f.dual)) == mat_identity(n));

        // sum_p omega(f_p, f^p) counts the dimension for both signs.
        Rational trace = rat(0);
        for (int p = 1; p <= n; ++p)
            for (int k = 1; k <= n; ++k) trace += f.omega_basis(p, k) * f.dual[p - 1][k - 1];
        CHECK(trace == rat(n));
    }
}

static void check_infinitesimal_invariance(const GroupSpec& g) {
    for (const Mat& x : g.lie_basis) {
        Mat lhs = mat_add(mat_mul(mat_transpose(x), g.form.gram), mat_mul(g.form.gram, x));
        CHECK(mat_is_zero(lhs));
    }
}

TEST_CASE("orthogonal group data") {
    GroupSpec g = make_orthogonal(4);
    CHECK(g.lie_basis.size() == 6);  // n(n-1)/2
    check_infinitesimal_invariance(g);

    CHECK(g.component_reps.size() == 4);
    for (const Mat& s : g.component_reps) {
        CHECK(mat_mul(mat_transpose(s), mat_mul(g.form.gram, s)) == g.form.gram);
        CHECK(mat_mul(s, s) == mat_identity(4));
    }
}

TEST_CASE("symplectic group data") {
    GroupSpec g = make_symplectic(6);
    CHECK(g.lie_basis.size() == 21);  // n(n+1)/2
    check_infinitesimal_invariance(g);
    CHECK(g.component_reps.empty());
}

TEST_CASE("cayley elements land in the group") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int eps : {1, -1}) {
        int n = 4;
        FormSpec f = make_form(eps, n);
        for (int trial = 0; trial < 5; ++trial) {
            Mat a = mat_zero(n, n);
            for (auto& row : a)
                for (auto& e : row) e = rat(val(rng), 3);
            Mat g = cayley_element(f, a);
            CHECK(mat_mul(mat_transpose(g), mat_mul(f.gram, g)) == f.gram);
        }
    }
}

TEST_CASE("enhanced space lifts") {
    Mat x = mat_unit(3, 1, 3);
    Mat lx = lift_endo(x);
    CHECK(lx.size() == 4);
    CHECK(lx[0][2] == rat(1));
    for (int i = 0; i < 4; ++i) {
        CHECK(lx[3][i] == rat(0));
        CHECK(lx[i][3] == rat(0));
    }

    Mat g = mat_identity(3);
    Mat lg = lift_group(g);
    CHECK(lg == mat_identity(4));

    std::vector<Rational> v = {rat(1), rat(-2), rat(1, 2)};
    Mat t = enhanced_translation(v);
    // eta column picks up v, letter columns untouched.
    CHECK(t[0][3] == rat(1));
    CHECK(t[1][3] == rat(-2));
    CHECK(t[2][3] == rat(1, 2));
    CHECK(t[3][3] == rat(1));
    CHECK(t[0][0] == rat(1));
    CHECK(t[1][0] == rat(0));

    Mat sc = enhanced_scaling(3, rat(7));
    CHECK(sc[3][3] == rat(7));
    CHECK(sc[0][0] == rat(1));
    CHECK(sc[0][3] == rat(0));

    EnhancedGenerators eg = make_enhanced_generators(3);
    CHECK(eg.nilpotents.size() == 3);
    CHECK(eg.nilpotents[0] == mat_unit(4, 1, 4));
    CHECK(eg.torus == mat_unit(4, 4, 4));
}
