#include <doctest.h>

#include <ebrauer/tensor_ops.hpp>

#include <random>

using namespace ebrauer;

namespace {

Mat random_mat(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> val(-2, 2);
    Mat m = mat_zero(n, n);
    for (auto& row : m)
        for (auto& e : row) e = rat(val(rng));
    return m;
}

Mat commutator(const Mat& a, const Mat& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

}  // namespace

TEST_CASE("flat index layout: slot 1 most significant") {
    TensorSpace plain{3, 2, false};
    CHECK(plain.dim() == 9);
    CHECK(plain.flat({1, 1}) == 0);
    CHECK(plain.flat({1, 2}) == 1);
    CHECK(plain.flat({2, 1}) == 3);
    CHECK(plain.tuple(5) == std::vector<int>{2, 3});

    TensorSpace enh{3, 2, true};
    CHECK(enh.dim() == 16);
    CHECK(enh.flat({4, 4}) == 15);  // eta eta
    CHECK(enh.component_mask(enh.flat({1, 4})) == 0b01u);
    CHECK(enh.component_mask(enh.flat({4, 2})) == 0b10u);
    CHECK(enh.level(enh.flat({4, 4})) == 0);
    CHECK(enh.level(enh.flat({2, 3})) == 2);
}

TEST_CASE("component indices and bases") {
    CHECK(subsets_of_size(3, 2).size() == 3);
    ComponentIndex I = ComponentIndex::of_slots(3, {1, 3});
    CHECK(I.mask == 0b101u);
    CHECK(I.slots() == std::vector<int>{1, 3});
    CHECK(I.subset_of(ComponentIndex::full(3)));
    CHECK_FALSE(ComponentIndex::full(3).subset_of(I));

    TensorSpace enh{2, 3, true};
    std::vector<Index> basis = component_basis(enh, I);
    CHECK(basis.size() == 4);  // n^|I| = 2^2
    // Local order (1,1) (1,2) (2,1) (2,2) with eta fixed in slot 2.
    CHECK(enh.tuple(basis[0]) == std::vector<int>{1, 3, 1});
    CHECK(enh.tuple(basis[1]) == std::vector<int>{1, 3, 2});
    CHECK(enh.tuple(basis[2]) == std::vector<int>{2, 3, 1});
    CHECK(enh.tuple(basis[3]) == std::vector<int>{2, 3, 2});
    for (std::size_t k = 1; k < basis.size(); ++k) CHECK(basis[k - 1] < basis[k]);

    Permutation s = Permutation::transposition(3, 1, 2);
    CHECK(permute_component(s, I) == ComponentIndex::of_slots(3, {2, 3}));
}

TEST_CASE("phi is multiplicative and dphi is a Lie homomorphism") {
    std::mt19937_64 rng(11);
    TensorSpace plain{3, 2, false};
    for (int trial = 0; trial < 4; ++trial) {
        Mat a = random_mat(3, rng);
        Mat b = random_mat(3, rng);
        CHECK(phi(mat_mul(a, b), plain).op == phi(a, plain).op.compose(phi(b, plain).op));
        SparseOperator da = dphi(a, plain).op;
        SparseOperator db = dphi(b, plain).op;
        CHECK(dphi(commutator(a, b), plain).op == da.compose(db).minus(db.compose(da)));
        CHECK(dphi(mat_add(a, b), plain).op == da.plus(db));
    }
    CHECK(phi(mat_identity(3), plain).op == SparseOperator::identity(9));
    CHECK(dphi(mat_zero(3, 3), plain).op.is_zero());
}

TEST_CASE("psi is a homomorphism and permutes slots contravariantly") {
    TensorSpace plain{3, 3, false};
    for (const Permutation& s : Permutation::all(3))
        for (const Permutation& t : Permutation::all(3))
            CHECK(psi(Permutation::compose(s, t), plain).op ==
                  psi(s, plain).op.compose(psi(t, plain).op));

    // s = cycle 1->2->3->1: slot k of output = slot s^{-1}(k) of input.
    Permutation s({2, 3, 1});
    SparseOperator p = psi(s, plain).op;
    SparseVec image = p.apply({{plain.flat({1, 2, 3}), rat(1)}});
    REQUIRE(image.size() == 1);
    CHECK(image[0].first == plain.flat({3, 1, 2}));
}

TEST_CASE("contraction against expansion: C D = n id and tau squared = n tau") {
    for (int eps : {1, -1}) {
        int n = 4;
        FormSpec form = make_form(eps, n);
        TensorSpace plain{n, 2, false};
        SparseOperator c = contraction(1, 2, form, plain).op;
        SparseOperator d = expansion(1, 2, form, plain).op;
        CHECK(c.compose(d) == SparseOperator::identity(1).scaled(rat(n)));

        SparseOperator tau = tau_pair(1, 2, form, plain).op;
        CHECK(tau == d.compose(c));
        CHECK(tau.compose(tau) == tau.scaled(rat(n)));

        // The normalized contraction is an idempotent.
        SparseOperator p = tau.scaled(rat(1, n));
        CHECK(p.compose(p) == p);

        TensorSpace enh{n, 2, true};
        SparseOperator taue = tau_pair(1, 2, form, enh).op;
        CHECK(taue.compose(taue) == taue.scaled(rat(n)));
        // Columns with eta in a contracted slot die.
        CHECK(taue.apply({{enh.flat({1, n + 1}), rat(1)}}).empty());
        CHECK(taue.apply({{enh.flat({n + 1, n + 1}), rat(1)}}).empty());
    }
}

TEST_CASE("tau factors act on their own slots and commute when disjoint") {
    FormSpec form = make_form(1, 2);
    TensorSpace plain{2, 4, false};
    SparseOperator t12 = tau_pair(1, 2, form, plain).op;
    SparseOperator t34 = tau_pair(3, 4, form, plain).op;
    CHECK(t12.compose(t34) == t34.compose(t12));

    NormalizedDiagram z{4, {{1, 2}, {3, 4}}};
    CHECK(tau_diagram(z, form, plain).op == t12.compose(t34));
}

TEST_CASE("word operators multiply like diagrams with the loop factor n") {
    // For the skew form the untwisted operators realize each product only up
    // to sign (sum_p f^p(x)f_p = -sum_p f_p(x)f^p), so demand exact agreement
    // for the symmetric form and agreement up to sign otherwise.
    for (int eps : {1, -1}) {
        int n = 4;
        FormSpec form = make_form(eps, n);
        TensorSpace plain{n, 2, false};
        std::vector<BrauerDiagram> diagrams = enumerate_diagrams(2);
        for (const BrauerDiagram& d1 : diagrams)
            for (const BrauerDiagram& d2 : diagrams) {
                ComposeResult res = compose(d1, d2);
                SparseOperator lhs = word_operator(factorize(d1), form, plain)
                                         .op.compose(word_operator(factorize(d2), form, plain).op);
                SparseOperator rhs = word_operator(factorize(res.diagram), form, plain).op;
                Rational scale = rat(1);
                for (int k = 0; k < res.loops; ++k) scale *= rat(n);
                bool plus = lhs == rhs.scaled(scale);
                bool minus = lhs == rhs.scaled(-scale);
                if (eps == 1)
                    CHECK(plus);
                else
                    CHECK((plus || minus));
            }
    }
}

TEST_CASE("embedding a permutation through a component matches conjugation") {
    FormSpec form = make_form(1, 2);
    TensorSpace enh{2, 3, true};
    ComponentIndex I = ComponentIndex::of_slots(3, {1, 3});
    TensorSpace local{2, 2, false};

    Permutation swap2({2, 1});
    SparseOperator sigma = psi(swap2, local).op;
    LabeledOperator emb = embed_sigma(sigma, I, enh);
    CHECK(emb.respects_components());

    // tau_I sends 1,2 to the slots of I; conjugating the straight embedding
    // sigma^{1,2} by psi(tau_I) gives sigma^I.
    Permutation tau_I({1, 3, 2});  // slots(I) = {1,3}: 1->1, 2->3
    ComponentIndex head = ComponentIndex::of_slots(3, {1, 2});
    LabeledOperator emb_head = embed_sigma(sigma, head, enh);
    SparseOperator conj = psi(tau_I, enh).op.compose(
        emb_head.op.compose(psi(tau_I.inverse(), enh).op));
    CHECK(emb.op == conj);
}

TEST_CASE("transfers intertwine embeddings and compose transitively") {
    FormSpec form = make_form(1, 2);
    TensorSpace enh{2, 3, true};
    ComponentIndex I = ComponentIndex::of_slots(3, {1, 2});
    ComponentIndex J = ComponentIndex::of_slots(3, {2, 3});
    TensorSpace local{2, 2, false};

    LabeledOperator e_ji = transfer(J, I, enh);
    CHECK(e_ji.respects_components());

    // E_{J,I} carries the k-th V-slot of I to the k-th of J.
    std::vector<Index> bi = component_basis(enh, I);
    std::vector<Index> bj = component_basis(enh, J);
    REQUIRE(bi.size() == bj.size());
    for (std::size_t k = 0; k < bi.size(); ++k) {
        SparseVec im = e_ji.op.apply({{bi[k], rat(1)}});
        REQUIRE(im.size() == 1);
        CHECK(im[0].first == bj[k]);
    }

    for (const Permutation& s : Permutation::all(2)) {
        SparseOperator sigma = psi(s, local).op;
        CHECK(e_ji.op.compose(embed_sigma(sigma, I, enh).op) ==
              embed_sigma(sigma, J, enh).op.compose(e_ji.op));
    }

    ComponentIndex K = ComponentIndex::of_slots(3, {1, 3});
    CHECK(transfer(K, J, enh).op.compose(e_ji.op) == transfer(K, I, enh).op);
    CHECK(transfer(I, I, enh).op == projection(I, enh).op);
}

TEST_CASE("restriction matches transfer of the local part") {
    FormSpec form = make_form(1, 2);
    TensorSpace enh{2, 3, true};
    // s = (1 2 3): take I = {1,3}; s(I) = {1,2}.
    Permutation s({2, 3, 1});
    ComponentIndex I = ComponentIndex::of_slots(3, {1, 3});
    ComponentIndex sI = permute_component(s, I);

    LabeledOperator full = psi(s, enh);
    LabeledOperator restr = restrict_to(full, I);
    CHECK(restr.respects_components());

    // The local permutation: slot positions within I map to positions in s(I).
    // I = {1,3}, s: 1->2, 3->1, so position 1 -> position of 2 in {1,2} = 2,
    // position 2 -> position of 1 = 1: the swap.
    TensorSpace local{2, 2, false};
    SparseOperator local_sigma = psi(Permutation({2, 1}), local).op;
    SparseOperator expect = transfer(sI, I, enh).op.compose(embed_sigma(local_sigma, I, enh).op);
    CHECK(restr.op == expect);
}

TEST_CASE("rho fixes permutation operators and kills words with escaping bars") {
    FormSpec form = make_form(1, 2);
    TensorSpace enh{2, 3, true};
    for (const Permutation& s : Permutation::all(3)) {
        BrauerWord w{s, NormalizedDiagram{3, {}}};
        CHECK(rho_word(w, form, enh).op == psi(s, enh).op);
    }

    BrauerWord barred{Permutation(3), NormalizedDiagram{3, {{1, 2}}}};
    ComponentIndex off = ComponentIndex::of_slots(3, {1, 3});
    CHECK(rho_component_word(barred, off, form, enh).op.is_zero());

    ComponentIndex on = ComponentIndex::of_slots(3, {1, 2});
    LabeledOperator r_on = rho_component_word(barred, on, form, enh);
    CHECK_FALSE(r_on.op.is_zero());
    CHECK(r_on.respects_components());
    CHECK(r_on.codomain_component == on);  // s = id keeps the component
}

TEST_CASE("rho on the full component reproduces the plain word action") {
    for (int eps : {1, -1}) {
        FormSpec form = make_form(eps, 2);
        TensorSpace enh{2, 2, true};
        ComponentIndex full = ComponentIndex::full(2);
        for (const BrauerDiagram& d : enumerate_diagrams(2)) {
            BrauerWord w = factorize(d);
            SparseOperator lhs = rho_component_word(w, full, form, enh).op;
            SparseOperator rhs =
                word_operator(w, form, enh).op.compose(projection(full, enh).op);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rho is linear in formal combinations") {
    FormSpec form = make_form(1, 2);
    TensorSpace enh{2, 2, true};
    BrauerWord w1{Permutation(2), NormalizedDiagram{2, {{1, 2}}}};
    BrauerWord w2{Permutation({2, 1}), NormalizedDiagram{2, {}}};
    FormalBrauer x{2, {{w1, rat(2, 3)}, {w2, rat(-1)}}};
    SparseOperator expect = rho_word(w1, form, enh).op.scaled(rat(2, 3)).plus(
        rho_word(w2, form, enh).op.scaled(rat(-1)));
    CHECK(rho(x, form, enh).op == expect);
}

TEST_CASE("pairings between component indices") {
    ComponentIndex K = ComponentIndex::empty(4);
    ComponentIndex L = ComponentIndex::full(4);
    std::vector<Pairing> ps = pairings_between(K, L);
    CHECK(ps.size() == 3);
    CHECK(ps[0] == Pairing{{1, 2}, {3, 4}});

    CHECK(pairings_between(L, L) == std::vector<Pairing>{{}});
    // Odd gaps admit no pairing.
    CHECK(pairings_between(ComponentIndex::of_slots(4, {1}), L).empty());
}

TEST_CASE("expansion steps between components commute and match tau products") {
    FormSpec form = make_form(1, 2);
    TensorSpace enh{2, 4, true};
    ComponentIndex none = ComponentIndex::empty(4);
    ComponentIndex full = ComponentIndex::full(4);
    ComponentIndex half12 = ComponentIndex::of_slots(4, {1, 2});
    ComponentIndex half34 = ComponentIndex::of_slots(4, {3, 4});

    // Two routes from the bottom component to the top: fill (1,2) then (3,4),
    // or the other way round.
    SparseOperator route1 = expand_step(3, 4, half12, full, form, enh)
                                .op.compose(expand_step(1, 2, none, half12, form, enh).op);
    SparseOperator route2 = expand_step(1, 2, half34, full, form, enh)
                                .op.compose(expand_step(3, 4, none, half34, form, enh).op);
    CHECK(route1 == route2);

    Pairing pi{{1, 2}, {3, 4}};
    CHECK(expand_pairing(pi, none, full, form, enh).op == route1);

    // Expanding then contracting the same pairing is the product of the taus
    // restricted to the source component.
    SparseOperator dc = expand_pairing(pi, none, full, form, enh)
                            .op.compose(contract_pairing(pi, none, full, form, enh).op);
    NormalizedDiagram z{4, {{1, 2}, {3, 4}}};
    SparseOperator taus = tau_diagram(z, form, enh).op.compose(projection(full, enh).op);
    CHECK(dc == taus);

    // Contracting then expanding scales by n per pair.
    SparseOperator cd = contract_pairing(pi, none, full, form, enh)
                            .op.compose(expand_pairing(pi, none, full, form, enh).op);
    CHECK(cd == projection(none, enh).op.scaled(rat(4)));

    // The empty pairing is the identity on the component.
    CHECK(expand_pairing({}, full, full, form, enh).op == projection(full, enh).op);
}

TEST_CASE("difference vectors agree with the translation action") {
    FormSpec form = make_form(1, 3);
    TensorSpace enh{3, 2, true};
    std::vector<Rational> w = {rat(1), rat(0), rat(-2)};
    SparseOperator trans = phi(enhanced_translation(w), enh).op;

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        SparseVec v;
        for (Index i = 0; i < enh.dim(); ++i) {
            int c = val(rng);
            if (c != 0) v.push_back({i, rat(c)});
        }
        SparseVec expect = sparse_axpy(trans.apply(v), rat(-1), v);
        CHECK(difference_vector(v, w, enh) == expect);
    }

    // A pure letter tuple is fixed by the translation, so the difference dies.
    CHECK(difference_vector({{enh.flat({1, 2}), rat(1)}}, w, enh).empty());
}
