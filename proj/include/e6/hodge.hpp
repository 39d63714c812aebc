#pragma once

#include "e6/cosets.hpp"
#include "e6/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace e6 {

// Exact coefficients on the boundary basis (D0, Dsyz, Dazy), mod junk.
struct DivisorClass {
    Rat d0, dsyz, dazy;

    DivisorClass operator+(const DivisorClass& o) const {
        return {d0 + o.d0, dsyz + o.dsyz, dazy + o.dazy};
    }
    DivisorClass operator-(const DivisorClass& o) const {
        return {d0 - o.d0, dsyz - o.dsyz, dazy - o.dazy};
    }
    DivisorClass operator*(const Rat& k) const { return {d0 * k, dsyz * k, dazy * k}; }
    bool operator==(const DivisorClass&) const = default;
};

std::string divisor_str(const DivisorClass& c);

// Hodge class of the degree-d cover attached to a subgroup with the given
// ramification counts: the three i=2 boundary coefficients with the E/D
// pullback factors (1/2, 1, 1/2) folded in.
DivisorClass lambda_from_avec(long a2c, long a2b, long a3b);
DivisorClass lambda_subgroup(const RamificationProfile& p);

// Raw boundary coefficient of E_{i:mu}: (1/12) lcm(mu) ((3a/2) i(24-i)/23
// - d + sum 1/mu_j). mu must be a partition of d, 2 <= i <= 12.
Rat e_class_coefficient(long a, long d, int i, const std::vector<long>& mu);

// dim of the invariant subspace of chi under G; integrality enforced.
long invariant_dim(const GroupTable& t, int chi, const Subgroup& g);

using MultMatrix = std::array<std::array<long, 25>, 25>;

// entry(i, alpha) = dim rho_i^{W_alpha} over the 25 cyclic subgroups.
MultMatrix mult_matrix(const GroupTable& t);
Int mult_matrix_det(const MultMatrix& m);

inline const Int& expected_mult_det() {
    static const Int d("400771988324352");
    return d;
}

struct Table1Row {
    std::string name;
    long rank = 0;
    DivisorClass lam;
    long a2c = 0, a2b = 0, a3b = 0;
    bool operator==(const Table1Row&) const = default;
};

struct Table1 {
    std::array<Table1Row, 25> rows;
    MultMatrix mult;
    std::array<RamificationProfile, 25> cyclic_profiles;
    std::array<long, 25> cyclic_genera{};
};

// Solve the 25 fundamental Hodge classes from the cyclic-cover data; the
// result must match the embedded golden table (itemized diff on mismatch).
Table1 solve_table1(const GroupTable& t);

const std::array<Table1Row, 25>& golden_table1();

// Itemized diff of computed vs golden rows; empty when they agree.
std::vector<std::string> diff_table1(const std::array<Table1Row, 25>& got);

// The identity battery of Theorems 1.1 / 3.5 and the closing remarks.
VerifyReport identity_suite(const GroupTable& t, const Table1& t1);

}  // namespace e6
