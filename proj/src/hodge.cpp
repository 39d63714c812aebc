#include "e6/hodge.hpp"

#include "e6/ratmat.hpp"

#include <numeric>

namespace e6 {

std::string divisor_str(const DivisorClass& c) {
    return "(" + rat_str(c.d0) + ", " + rat_str(c.dsyz) + ", " + rat_str(c.dazy) + ")";
}

DivisorClass lambda_from_avec(long a2c, long a2b, long a3b) {
    Rat base = Rat(66 * a2c, 23);
    return DivisorClass{Rat(11 * a2c, 92), (base - Rat(3 * a2b, 2)) / 6,
                        (base - Rat(8 * a3b, 3)) / 8};
}

DivisorClass lambda_subgroup(const RamificationProfile& p) {
    return lambda_from_avec(p.a2c, p.a2b, p.a3b);
}

Rat e_class_coefficient(long a, long d, int i, const std::vector<long>& mu) {
    if (i < 2 || i > 12) throw input_error("i must lie in 2..12");
    long sum = 0, l = 1;
    Rat inv_mu = 0;
    for (long part : mu) {
        if (part <= 0) throw input_error("partition parts must be positive");
        sum += part;
        l = std::lcm(l, part);
        inv_mu += Rat(1, part);
    }
    if (sum != d) throw input_error("mu is not a partition of d");
    return Rat(l, 12) * (Rat(3 * a, 2) * Rat(i * (24 - i), 23) - d + inv_mu);
}

long invariant_dim(const GroupTable& t, int chi, const Subgroup& g) {
    long s = 0;
    for (int m : g.members) s += kCharTable[chi][t.class_of(m)];
    if (s % g.order() != 0)
        throw consistency_error("invariant dimension not integral for " +
                                std::string(kCharNames[chi]));
    long dim = s / g.order();
    if (dim < 0) throw consistency_error("negative invariant dimension");
    return dim;
}

MultMatrix mult_matrix(const GroupTable& t) {
    MultMatrix m{};
    for (int alpha = 0; alpha < 25; ++alpha) {
        Subgroup w = cyclic_subgroup(t, alpha);
        for (int i = 0; i < 25; ++i) m[i][alpha] = invariant_dim(t, i, w);
    }
    return m;
}

Int mult_matrix_det(const MultMatrix& m) {
    std::vector<std::vector<Int>> a(25, std::vector<Int>(25));
    for (int i = 0; i < 25; ++i)
        for (int j = 0; j < 25; ++j) a[i][j] = m[i][j];
    return det_int(std::move(a));
}

namespace {

// Paper Table 1: rank, (D0, Dsyz, Dazy), (a2c, a2b, a3b) per character.
struct GoldenRow {
    const char* name;
    long rank;
    const char *l0, *l1, *l2;
    long a0, a1, a2;
};

constexpr GoldenRow kGolden[25] = {
    {"1", 0, "0", "0", "0", 0, 0, 0},
    {"1~", 11, "11/92", "11/23", "33/92", 1, 0, 0},
    {"10", 50, "55/92", "32/23", "127/276", 5, 4, 4},
    {"6", 6, "11/92", "-1/46", "7/276", 1, 2, 1},
    {"6~", 54, "55/92", "87/46", "403/276", 5, 2, 1},
    {"20a", 100, "55/46", "41/23", "73/46", 10, 12, 6},
    {"15a", 45, "55/92", "9/23", "127/276", 5, 8, 4},
    {"15a~", 105, "55/46", "64/23", "311/138", 10, 8, 4},
    {"15b", 45, "55/92", "41/46", "35/276", 5, 6, 5},
    {"15b~", 105, "55/46", "151/46", "265/138", 10, 6, 5},
    {"20b", 40, "55/92", "9/23", "35/276", 5, 8, 5},
    {"20b~", 160, "165/92", "119/23", "1025/276", 15, 8, 5},
    {"24", 96, "55/46", "41/23", "127/138", 10, 12, 8},
    {"24~", 144, "77/46", "85/23", "325/138", 14, 12, 8},
    {"30", 90, "55/46", "59/46", "27/46", 10, 14, 9},
    {"30~", 210, "55/23", "279/46", "96/23", 20, 14, 9},
    {"60a", 300, "165/46", "169/23", "473/138", 30, 28, 22},
    {"80", 400, "110/23", "210/23", "346/69", 40, 40, 28},
    {"90", 450, "495/92", "219/23", "565/92", 45, 48, 30},
    {"60b", 240, "275/92", "114/23", "181/92", 25, 28, 21},
    {"60b~", 360, "385/92", "224/23", "511/92", 35, 28, 21},
    {"64", 224, "66/23", "80/23", "134/69", 24, 32, 20},
    {"64~", 416, "110/23", "256/23", "530/69", 40, 32, 20},
    {"81", 351, "99/23", "309/46", "90/23", 36, 42, 27},
    {"81~", 459, "495/92", "507/46", "657/92", 45, 42, 27},
};

long to_long(const Rat& r, const char* what) {
    if (denominator(r) != 1) throw consistency_error(std::string(what) + " not integral");
    return static_cast<long>(numerator(r));
}

}  // namespace

const std::array<Table1Row, 25>& golden_table1() {
    static const std::array<Table1Row, 25> rows = [] {
        std::array<Table1Row, 25> out;
        for (int i = 0; i < 25; ++i) {
            const GoldenRow& g = kGolden[i];
            out[i] = Table1Row{g.name,
                               g.rank,
                               {parse_rat(g.l0), parse_rat(g.l1), parse_rat(g.l2)},
                               g.a0,
                               g.a1,
                               g.a2};
        }
        return out;
    }();
    return rows;
}

Table1 solve_table1(const GroupTable& t) {
    Table1 out;
    out.mult = mult_matrix(t);
    if (mult_matrix_det(out.mult) != expected_mult_det())
        throw consistency_error("multiplicity matrix determinant mismatch");

    std::array<DivisorClass, 25> lam_w;
    for (int alpha = 0; alpha < 25; ++alpha) {
        Subgroup w = cyclic_subgroup(t, alpha);
        out.cyclic_profiles[alpha] = profile(t, w);
        out.cyclic_genera[alpha] = genus(out.cyclic_profiles[alpha]);
        lam_w[alpha] = lambda_subgroup(out.cyclic_profiles[alpha]);
    }

    // For each alpha: sum_i mult[i][alpha] x_i = (per-alpha data), so the
    // system matrix is the transpose of the multiplicity matrix.
    QMat mt(25, 25);
    for (int alpha = 0; alpha < 25; ++alpha)
        for (int i = 0; i < 25; ++i) mt.at(alpha, i) = out.mult[i][alpha];
    QMat mt_inv = inverse(mt);

    auto apply = [&](auto&& rhs_of_alpha) {
        std::array<Rat, 25> x{};
        for (int i = 0; i < 25; ++i)
            for (int alpha = 0; alpha < 25; ++alpha)
                x[i] += mt_inv.at(i, alpha) * rhs_of_alpha(alpha);
        return x;
    };

    auto ranks = apply([&](int a) { return Rat(out.cyclic_genera[a]); });
    auto l0 = apply([&](int a) { return lam_w[a].d0; });
    auto l1 = apply([&](int a) { return lam_w[a].dsyz; });
    auto l2 = apply([&](int a) { return lam_w[a].dazy; });
    auto a2c = apply([&](int a) { return Rat(out.cyclic_profiles[a].a2c); });
    auto a2b = apply([&](int a) { return Rat(out.cyclic_profiles[a].a2b); });
    auto a3b = apply([&](int a) { return Rat(out.cyclic_profiles[a].a3b); });

    for (int i = 0; i < 25; ++i) {
        Table1Row& r = out.rows[i];
        r.name = std::string(kCharNames[i]);
        r.rank = to_long(ranks[i], "rank");
        if (r.rank < 0) throw consistency_error("negative rank");
        r.lam = DivisorClass{l0[i], l1[i], l2[i]};
        r.a2c = to_long(a2c[i], "a2c");
        r.a2b = to_long(a2b[i], "a2b");
        r.a3b = to_long(a3b[i], "a3b");
    }
    return out;
}

std::vector<std::string> diff_table1(const std::array<Table1Row, 25>& got) {
    std::vector<std::string> diffs;
    const auto& want = golden_table1();
    for (int i = 0; i < 25; ++i) {
        if (got[i] == want[i]) continue;
        diffs.push_back("row " + std::to_string(i + 1) + " (" + want[i].name +
                        "): got rank=" + std::to_string(got[i].rank) + " lam=" +
                        divisor_str(got[i].lam) + " a=(" + std::to_string(got[i].a2c) +
                        "," + std::to_string(got[i].a2b) + "," + std::to_string(got[i].a3b) +
                        "), want rank=" + std::to_string(want[i].rank) + " lam=" +
                        divisor_str(want[i].lam) + " a=(" + std::to_string(want[i].a2c) +
                        "," + std::to_string(want[i].a2b) + "," +
                        std::to_string(want[i].a3b) + ")");
    }
    return diffs;
}

VerifyReport identity_suite(const GroupTable& t, const Table1& t1) {
    VerifyReport rep;
    const auto& rows = t1.rows;

    auto lam_g27 = lambda_from_avec(6, 10, 6);
    // (i) 6 lam(6) = lam_G27 - (0, 1/2, 0)
    if (!(rows[kCharIdx6].lam * 6 == lam_g27 - DivisorClass{0, Rat(1, 2), 0}))
        rep.fail("6*lam(6) != lam_G27 - (0,1/2,0)");

    // (ii) eigen-sum identities for the 27/36/45 covers (lam(1) = 0).
    const GroupTable& tt = t;
    RamificationProfile p36 = profile(tt, stab_double_six(tt, fundamental_roots()[0]));
    RamificationProfile p45 =
        profile(tt, stab_tritangent(tt, line_index_of_name("a1"), line_index_of_name("b2"),
                                    line_index_of_name("c12")));
    if (!(rows[kCharIdx6].lam + rows[kCharIdx20b].lam == lam_g27))
        rep.fail("lam(6) + lam(20b) != lam_G27");
    if (!(rows[kCharIdx15b].lam + rows[kCharIdx20b].lam == lambda_subgroup(p36)))
        rep.fail("lam(15b) + lam(20b) != lam_G36");
    if (!(rows[kCharIdx24].lam + rows[kCharIdx20b].lam == lambda_subgroup(p45)))
        rep.fail("lam(24) + lam(20b) != lam_G45");

    // (iii) rank formula: rk = 12 a2c - dim + mult_1.
    for (int i = 0; i < 25; ++i) {
        long mult1 = (i == kCharIdx1) ? 1 : 0;
        if (rows[i].rank != 12 * rows[i].a2c - kCharTable[i][kClassIdx1a] + mult1)
            rep.fail("rank formula fails for " + rows[i].name);
    }

    // (iv) twist by the sign character, lambda and a-vector forms.
    for (int i = 0; i < 25; ++i) {
        int j = -1;
        for (int cand = 0; cand < 25; ++cand) {
            bool match = true;
            for (int c = 0; c < 25 && match; ++c)
                match = kCharTable[cand][c] ==
                        kCharTable[i][c] * kCharTable[kCharIdx1Bar][c];
            if (match) {
                j = cand;
                break;
            }
        }
        if (j < 0) {
            rep.fail("no twist partner for " + rows[i].name);
            continue;
        }
        Rat chi2c = kCharTable[i][kClassIdx2c];
        if (!(rows[j].lam == rows[i].lam + rows[kCharIdx1Bar].lam * chi2c))
            rep.fail("lambda twist fails for " + rows[i].name);
        if (rows[j].a2c != rows[i].a2c + kCharTable[i][kClassIdx2c] ||
            rows[j].a2b != rows[i].a2b || rows[j].a3b != rows[i].a3b)
            rep.fail("a-vector twist fails for " + rows[i].name);
    }

    // (v) linearity: lam(chi) = lambda_from_avec(a(chi)).
    for (int i = 0; i < 25; ++i)
        if (!(rows[i].lam == lambda_from_avec(rows[i].a2c, rows[i].a2b, rows[i].a3b)))
            rep.fail("lambda(avec) linearity fails for " + rows[i].name);

    // Genus re-expansion: g(B_alpha) = sum_i mult[i][alpha] rk_i.
    for (int alpha = 0; alpha < 25; ++alpha) {
        long s = 0;
        for (int i = 0; i < 25; ++i) s += t1.mult[i][alpha] * rows[i].rank;
        if (s != t1.cyclic_genera[alpha])
            rep.fail("genus re-expansion fails at class " +
                     std::string(kClassNames[alpha]));
    }
    return rep;
}

}  // namespace e6
