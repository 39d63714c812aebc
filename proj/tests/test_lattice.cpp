#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6/lattice.hpp"
#include "e6/ratmat.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace e6;

namespace {

PicVector pv(std::initializer_list<int> v) {
    PicVector p;
    int i = 0;
    for (int x : v) p.c[i++] = x;
    return p;
}

PicVector random_vec(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    PicVector p;
    for (int i = 0; i < 7; ++i) p.c[i] = coeff(rng);
    return p;
}

}  // namespace

TEST_CASE("pairing is the diagonal (1,-1^6) form") {
    PicVector h = pv({1, 0, 0, 0, 0, 0, 0});
    PicVector e1 = pv({0, 1, 0, 0, 0, 0, 0});
    CHECK(pairing(h, h) == 1);
    CHECK(pairing(e1, e1) == -1);
    // (a1, c12) = (e1, h - e1 - e2)
    CHECK(pairing(e1, pv({1, -1, -1, 0, 0, 0, 0})) == 1);

    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        PicVector x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
        CHECK(pairing(x, y) == pairing(y, x));
        CHECK(pairing(x + z, y) == pairing(x, y) + pairing(z, y));
    }
}

TEST_CASE("canonical class") {
    CHECK(canonical_class() == pv({-3, 1, 1, 1, 1, 1, 1}));
    CHECK(pairing(canonical_class(), canonical_class()) == 3);
}

TEST_CASE("the 27 lines, canonical order and brute-force oracle") {
    CHECK(lines().size() == 27);
    CHECK(lines()[0] == pv({0, 1, 0, 0, 0, 0, 0}));  // a1
    CHECK(line_names()[0] == "a1");
    CHECK(line_names()[5] == "a6");
    CHECK(line_names()[6] == "b1");
    CHECK(line_names()[12] == "c12");
    CHECK(line_names()[26] == "c56");

    for (const PicVector& l : lines()) {
        CHECK(pairing(l, l) == -1);
        CHECK(pairing(l, canonical_class()) == -1);
    }

    // Exhaustive sweep over a box that contains every solution with
    // h-coefficient in [-3,3]: x.x = x.K = -1 forces small coordinates.
    std::set<PicVector> found;
    std::array<int, 7> lo{-3, -2, -2, -2, -2, -2, -2}, hi{3, 2, 2, 2, 2, 2, 2};
    PicVector x;
    std::array<int, 7> cur = lo;
    while (true) {
        for (int i = 0; i < 7; ++i) x.c[i] = cur[i];
        if (pairing(x, x) == -1 && pairing(x, canonical_class()) == -1) found.insert(x);
        int i = 6;
        while (i >= 0 && cur[i] == hi[i]) cur[i--] = lo[i];
        if (i < 0) break;
        ++cur[i];
    }
    CHECK(found.size() == 27);
    for (const PicVector& l : lines()) CHECK(found.count(l) == 1);
}

TEST_CASE("each line meets 10 lines and misses 16") {
    for (int i = 0; i < 27; ++i) {
        int ones = 0, zeros = 0;
        for (int j = 0; j < 27; ++j) {
            if (i == j) continue;
            Int p = pairing(lines()[i], lines()[j]);
            if (p == 1) ++ones;
            if (p == 0) ++zeros;
        }
        CHECK(ones == 10);
        CHECK(zeros == 16);
    }
}

TEST_CASE("incidence") {
    int a1 = line_index_of_name("a1"), b1 = line_index_of_name("b1");
    int c12 = line_index_of_name("c12");
    CHECK_FALSE(incident(a1, b1));
    CHECK(incident(a1, c12));
    CHECK_THROWS_AS(incident(a1, a1), input_error);
    for (int i = 0; i < 27; ++i) {
        int row = 0;
        for (int j = 0; j < 27; ++j) row += incidence_matrix()[i][j];
        CHECK(row == 10);
    }
}

TEST_CASE("72 roots, sign normalization") {
    CHECK(roots().size() == 36);
    CHECK(all_root_vectors().size() == 72);

    std::set<PicVector> sweep;
    std::array<int, 7> lo{-3, -2, -2, -2, -2, -2, -2}, hi{3, 2, 2, 2, 2, 2, 2};
    std::array<int, 7> cur = lo;
    PicVector x;
    while (true) {
        for (int i = 0; i < 7; ++i) x.c[i] = cur[i];
        if (pairing(x, x) == -2 && pairing(x, canonical_class()) == 0) sweep.insert(x);
        int i = 6;
        while (i >= 0 && cur[i] == hi[i]) cur[i--] = lo[i];
        if (i < 0) break;
        ++cur[i];
    }
    CHECK(sweep.size() == 72);
    for (const PicVector& v : all_root_vectors()) CHECK(sweep.count(v) == 1);

    for (const Root& r : roots()) {
        int plus = 0, minus = 0, zero = 0;
        for (const PicVector& l : lines()) {
            Int p = pairing(l, r.v);
            CHECK((p == -1 || p == 0 || p == 1));
            if (p == 1) ++plus;
            if (p == -1) ++minus;
            if (p == 0) ++zero;
        }
        CHECK(plus == 6);
        CHECK(minus == 6);
        CHECK(zero == 15);
    }

    CHECK_THROWS_AS(Root(pv({1, 0, 0, 0, 0, 0, 0})), input_error);
}

TEST_CASE("reflection formula") {
    Root a12(pv({0, 1, -1, 0, 0, 0, 0}));
    CHECK(reflect(a12, a12.v) == -a12.v);
    // alpha12 swaps a1 and a2
    CHECK(reflect(a12, lines()[0]) == lines()[1]);
    CHECK(reflect(a12, lines()[1]) == lines()[0]);

    std::mt19937 rng(11);
    for (const Root& r : roots()) {
        CHECK(reflect(r, canonical_class()) == canonical_class());
        for (int t = 0; t < 5; ++t) {
            PicVector x = random_vec(rng), y = random_vec(rng);
            CHECK(reflect(r, reflect(r, x)) == x);
            CHECK(pairing(reflect(r, x), reflect(r, y)) == pairing(x, y));
            if (pairing(x, r.v) == 0) CHECK(reflect(r, x) == x);
        }
    }
}

TEST_CASE("double sixers") {
    Root a12(pv({0, 1, -1, 0, 0, 0, 0}));
    auto ds = double_sixer(a12);
    std::set<std::pair<int, int>> got;
    for (auto [a, b] : ds) {
        CHECK(pairing(lines()[a], a12.v) == 1);  // a-side convention
        got.insert({std::min(a, b), std::max(a, b)});
    }
    auto li = [](const char* n) { return line_index_of_name(n); };
    std::set<std::pair<int, int>> want = {
        {li("a1"), li("a2")},   {li("b1"), li("b2")},   {li("c13"), li("c23")},
        {li("c14"), li("c24")}, {li("c15"), li("c25")}, {li("c16"), li("c26")}};
    CHECK(got == want);

    for (const Root& r : roots()) {
        auto pairs = double_sixer(r);
        std::set<int> touched;
        for (auto [a, b] : pairs) {
            touched.insert(a);
            touched.insert(b);
        }
        CHECK(touched.size() == 12);

        // negating the root swaps the two sides
        auto swapped = double_sixer(Root(-r.v));
        std::set<std::pair<int, int>> fwd, rev;
        for (auto [a, b] : pairs) fwd.insert({a, b});
        for (auto [a, b] : swapped) rev.insert({b, a});
        CHECK(fwd == rev);
    }
}

TEST_CASE("reflection permutations") {
    for (const Root& r : roots()) {
        Perm27 p = perm_of_reflection(r);
        CHECK(perm_compose(p, p) == perm_identity());
        CHECK(perm_fixed_points(p) == 15);
        auto ct = perm_cycle_type(p);
        CHECK(std::count(ct.begin(), ct.end(), 2) == 6);
        CHECK(std::count(ct.begin(), ct.end(), 1) == 15);

        // conjugating the incidence matrix by the permutation fixes it
        for (int i = 0; i < 27; ++i)
            for (int j = 0; j < 27; ++j)
                CHECK(incidence_matrix()[p[i]][p[j]] == incidence_matrix()[i][j]);
    }
}

TEST_CASE("fundamental roots") {
    const auto& fr = fundamental_roots();
    CHECK(fr[5].v == pv({1, -1, -1, -1, 0, 0, 0}));
    for (const Root& r : fr) CHECK(pairing(r.v, r.v) == -2);
    CHECK(fr[0].v == pv({0, 1, -1, 0, 0, 0, 0}));
}

TEST_CASE("incidence matrix eigenvalues 10, 1, -5 with multiplicities 1, 20, 6") {
    auto rank_of_m_minus = [](int lambda) {
        QMat m(27, 27);
        for (int i = 0; i < 27; ++i)
            for (int j = 0; j < 27; ++j)
                m.at(i, j) = incidence_matrix()[i][j] - (i == j ? lambda : 0);
        return rank(std::move(m));
    };
    CHECK(27 - rank_of_m_minus(10) == 1);
    CHECK(27 - rank_of_m_minus(1) == 20);
    CHECK(27 - rank_of_m_minus(-5) == 6);
    CHECK(rank_of_m_minus(0) == 27);
}

TEST_CASE("root aliases") {
    CHECK(*parse_root_alias("a135") == pv({1, -1, 0, -1, 0, -1, 0}));
    CHECK(*parse_root_alias("alpha12") == pv({0, 1, -1, 0, 0, 0, 0}));
    CHECK(*parse_root_alias("amax") == pv({2, -1, -1, -1, -1, -1, -1}));
    CHECK_FALSE(parse_root_alias("a11").has_value());
    CHECK_FALSE(parse_root_alias("q12").has_value());
}

TEST_CASE("lattice matrices of reflections") {
    for (const Root& r : roots()) {
        Mat7 m = lattice_matrix(perm_of_reflection(r));
        CHECK(mat7_det(m) == -1);
        CHECK(mat7_trace(m) == 5);  // 1 (on K) + 4 = chi_6(2c) + 1
    }
    CHECK(mat7_det(lattice_matrix(perm_identity())) == 1);
    CHECK(mat7_trace(lattice_matrix(perm_identity())) == 7);
}
