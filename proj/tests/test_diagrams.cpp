#include <doctest.h>

#include <ebrauer/diagrams.hpp>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

using namespace ebrauer;

TEST_CASE("permutation composition and inverse") {
    Permutation s = Permutation::transposition(3, 1, 2);
    Permutation t = Permutation::transposition(3, 2, 3);
    Permutation st = Permutation::compose(s, t);  // acts as s after t
    CHECK(st(1) == 2);
    CHECK(st(2) == 3);
    CHECK(st(3) == 1);
    CHECK(Permutation::compose(st, st.inverse()) == Permutation(3));
    CHECK(Permutation::all(4).size() == 24);
    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
}

TEST_CASE("diagram counts match the double factorial") {
    const std::size_t expected[] = {1, 1, 3, 15, 105};
    for (int r = 0; r <= 4; ++r)
        CHECK(enumerate_diagrams(r).size() == expected[r]);
}

static std::size_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t v = 1;
    for (int i = 0; i < k; ++i) v = v * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    return v;
}

static std::size_t dfac(int m) {  // (2m-1)!!
    std::size_t v = 1;
    for (int i = 1; i <= m; ++i) v *= static_cast<std::size_t>(2 * i - 1);
    return v;
}

TEST_CASE("normalized diagram counts per bar number") {
    for (int r = 0; r <= 5; ++r) {
        std::size_t total = 0;
        for (int t = 0; 2 * t <= r; ++t) {
            std::size_t cnt = enumerate_normalized(r, t).size();
            CHECK(cnt == binom(r, 2 * t) * dfac(t));
            total += cnt;
        }
        CHECK(enumerate_normalized(r).size() == total);
    }
}

TEST_CASE("composing a single-bar diagram with itself closes one loop") {
    NormalizedDiagram z{2, {{1, 2}}};
    BrauerDiagram d = BrauerDiagram::from_normalized(z);
    ComposeResult res = compose(d, d);
    CHECK(res.diagram == d);
    CHECK(res.loops == 1);
}

TEST_CASE("permutation diagrams compose without loops") {
    for (const Permutation& s : Permutation::all(3))
        for (const Permutation& t : Permutation::all(3)) {
            ComposeResult res = compose(BrauerDiagram::from_permutation(s),
                                        BrauerDiagram::from_permutation(t));
            CHECK(res.loops == 0);
            CHECK(res.diagram == BrauerDiagram::from_permutation(Permutation::compose(s, t)));
        }
}

TEST_CASE("diagram composition is associative including loop counts") {
    std::mt19937_64 rng(7);
    std::vector<BrauerDiagram> all = enumerate_diagrams(4);
    for (int trial = 0; trial < 60; ++trial) {
        const BrauerDiagram& a = all[rng() % all.size()];
        const BrauerDiagram& b = all[rng() % all.size()];
        const BrauerDiagram& c = all[rng() % all.size()];
        ComposeResult ab = compose(a, b);
        ComposeResult ab_c = compose(ab.diagram, c);
        ComposeResult bc = compose(b, c);
        ComposeResult a_bc = compose(a, bc.diagram);
        CHECK(ab_c.diagram == a_bc.diagram);
        CHECK(ab.loops + ab_c.loops == bc.loops + a_bc.loops);
    }
}

TEST_CASE("factorize inverts build on every diagram") {
    for (int r = 1; r <= 4; ++r) {
        std::set<BrauerDiagram> seen;
        for (const BrauerDiagram& d : enumerate_diagrams(r)) {
            BrauerWord w = factorize(d);
            CHECK(build(w) == d);
            CHECK(seen.insert(d).second);
        }
    }
}

TEST_CASE("factorization picks the canonical section") {
    // T1~T2, B1~B2, T3~B3: one bar top and bottom, third strand straight.
    BrauerDiagram d{3, {1, 0, 5, 4, 3, 2}};
    BrauerWord w = factorize(d);
    CHECK(w.z.bars == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(w.s(1) == 1);
    CHECK(w.s(2) == 2);
    CHECK(w.s(3) == 3);

    // Crossed bar ends: T2~T3, B1~B2, T1~B3. Bottom bar (1,2) maps onto top
    // bar (2,3) min end to min end, and the free strand B3 goes to T1.
    BrauerDiagram x{3, {5, 2, 1, 4, 3, 0}};
    BrauerWord wx = factorize(x);
    CHECK(wx.z.bars == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(wx.s(1) == 2);
    CHECK(wx.s(2) == 3);
    CHECK(wx.s(3) == 1);
    CHECK(build(wx) == x);
}

TEST_CASE("every diagram has the predicted number of word preimages") {
    const int r = 3;
    std::map<BrauerDiagram, int> fiber;
    for (const Permutation& s : Permutation::all(r))
        for (const NormalizedDiagram& z : enumerate_normalized(r)) fiber[build({s, z})]++;
    CHECK(fiber.size() == 15);
    for (const auto& [d, cnt] : fiber) {
        int t = factorize(d).z.bar_count();
        int expected = 1;
        for (int i = 1; i <= t; ++i) expected *= 2 * i;  // 2^t * t!
        CHECK(cnt == expected);
    }
}

TEST_CASE("diagram rendering round trips") {
    BrauerDiagram d = parse_diagram("T1-B1 T2-T3 B2-B3");
    CHECK(render(d) == "T1-B1 T2-T3 B2-B3");
    for (const BrauerDiagram& x : enumerate_diagrams(3)) CHECK(parse_diagram(render(x)) == x);
    CHECK_THROWS_AS(parse_diagram("T1-B2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("T1-T1 B1-B1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("T1:B1"), std::invalid_argument);
}
