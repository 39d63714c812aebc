#pragma once

#include "e6/numeric.hpp"
#include "e6/perm.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace e6 {

// Vector in the Picard lattice I^{1,6}, coordinates on the basis (h, e1..e6).
// The intersection form is diag(+1, -1, -1, -1, -1, -1, -1).
struct PicVector {
    std::array<Int, 7> c{};

    PicVector() = default;
    explicit PicVector(std::array<Int, 7> coeffs) : c(std::move(coeffs)) {}

    PicVector operator+(const PicVector& o) const;
    PicVector operator-(const PicVector& o) const;
    PicVector operator-() const;
    PicVector operator*(const Int& k) const;
    bool operator==(const PicVector& o) const { return c == o.c; }
    bool operator!=(const PicVector& o) const { return c != o.c; }
    bool operator<(const PicVector& o) const { return c < o.c; }
};

Int pairing(const PicVector& x, const PicVector& y);

// K = -3h + e1 + ... + e6.
const PicVector& canonical_class();

// A root: r.r = -2, r.K = 0. Construction validates.
struct Root {
    PicVector v;
    explicit Root(PicVector vec);
};

// Sign-normalize: first nonzero coordinate in (h,e1..e6) order positive.
Root sign_normalized(const Root& r);

// The 27 lines in the order a1..a6, b1..b6, c12, c13, ..., c56.
const std::array<PicVector, 27>& lines();
const std::array<std::string, 27>& line_names();
int line_index_of(const PicVector& v);             // -1 if not a line
int line_index_of_name(const std::string& name);   // throws input_error
std::string line_name(int index);

// The 36 sign-normalized roots, sorted by coordinate vector.
const std::vector<Root>& roots();
// All 72 root vectors.
std::vector<PicVector> all_root_vectors();

bool incident(int l1, int l2);  // throws input_error when l1 == l2

PicVector reflect(const Root& r, const PicVector& x);

// The 6 node pairs of the reflection s_r: (l, l+r) over the lines with
// l.r = +1, sorted by the first slot's line index.
std::array<std::pair<int, int>, 6> double_sixer(const Root& r);

Perm27 perm_of_reflection(const Root& r);

// omega_i = e_i - e_{i+1} for i=1..5, omega_6 = h - e1 - e2 - e3.
const std::array<Root, 6>& fundamental_roots();

// 27x27 incidence matrix (0/1, zero diagonal).
const std::array<std::array<int, 27>, 27>& incidence_matrix();

// Induced 7x7 lattice matrix of a group element (columns act on (h,e1..e6)).
using Mat7 = std::array<std::array<int64_t, 7>, 7>;
Mat7 lattice_matrix(const Perm27& g);
int64_t mat7_trace(const Mat7& m);
int64_t mat7_det(const Mat7& m);

// Root naming: "a12"/"alpha12" -> e1-e2, "a135" -> h-e1-e3-e5, "amax" ->
// 2h-e1-...-e6. Used for spec files; 7-integer arrays are the primary form.
std::optional<PicVector> parse_root_alias(const std::string& name);

}  // namespace e6
