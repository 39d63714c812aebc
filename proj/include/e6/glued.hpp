#pragma once

#include "e6/lattice.hpp"
#include "e6/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace e6 {

// Branch data of the degenerate cover: n roots with pairwise-distinct
// rational branch points.
struct GluingSpec {
    std::vector<Root> roots;
    std::vector<Rat> points;
};

// The paper's configuration: q_j = j and the 12 roots a135, a12, a23, a34,
// a45, a56, a16, a456, a123, a346, a234, a156.
GluingSpec default_spec();

GluingSpec spec_from_json(const std::string& text);  // throws input_error
std::string spec_to_json(const GluingSpec& spec);

// Order of the subgroup generated by the spec's reflections.
long monodromy_order(const GluingSpec& spec);
bool monodromy_full(const GluingSpec& spec);

struct GluedNode {
    Rat q;
    int a_comp;  // pairing(l, r) = +1 side
    int b_comp;  // a_comp + r
    int root_index;
};

// 27 rational sheets glued along the double sixes of the spec's roots.
struct NodalCover {
    GluingSpec spec;
    std::vector<GluedNode> nodes;
    // Per component: (q, node index) sorted by q; at most one node per point.
    std::array<std::vector<std::pair<Rat, int>>, 27> comp_nodes;
    bool connected = false;

    long arithmetic_genus() const { return static_cast<long>(nodes.size()) - 27 + 1; }
    int node_count(int comp) const { return static_cast<int>(comp_nodes[comp].size()); }
};

NodalCover build(const GluingSpec& spec);

// Residue at the node point q of dt / prod_s (t - q_s) on the component.
Rat residue_coeff(const NodalCover& cover, int comp, const Rat& q);

// Twisted line bundle omega^m(dL): per-component numerators of degree
// <= m(n_i - 2) + d; components below degree 0 carry only zero.
struct BundleSpec {
    int m = 0;
    long d = 0;
};

// Coefficient layout of the numerator tuple plus a kernel basis (RREF form:
// deterministic). Sections are flat coefficient vectors.
struct SectionSpace {
    BundleSpec bundle;
    std::array<long, 27> degree{};  // -1-or-less means the zero block
    std::array<size_t, 27> offset{};
    size_t ncols = 0;
    std::vector<std::vector<Rat>> basis;

    size_t dim() const { return basis.size(); }
    Rat eval(const std::vector<Rat>& section, int comp, const Rat& q) const;
};

SectionSpace section_space(const NodalCover& cover, const BundleSpec& bundle);
long h0(const NodalCover& cover, const BundleSpec& bundle);

// The node-matching condition R_a^m P_a(q) = (-1)^m R_b^m P_b(q), checked
// for an arbitrary coefficient vector.
bool satisfies_node_conditions(const NodalCover& cover, const SectionSpace& space,
                               const std::vector<Rat>& section);

// Residue of an m=1 section on one side of a node.
Rat section_residue(const NodalCover& cover, const SectionSpace& space,
                    const std::vector<Rat>& section, int node_index, char side);

// Sub-spaces of H^0(omega) cut by the a-side residue conditions at each
// branch point: all six equal (-5 eigenspace), or summing to zero (+1).
SectionSpace minus5_subspace(const NodalCover& cover, const SectionSpace& omega);
SectionSpace plus1_subspace(const NodalCover& cover, const SectionSpace& omega);
SectionSpace intersect_eigenspaces(const NodalCover& cover, const SectionSpace& omega);

struct MultImage {
    long dim = 0;
    bool inside_plus1 = false;
};

// Rank of H^0(L) x H^0(omega - L) -> H^0(omega) plus the (+1) containment.
MultImage mult_image(const NodalCover& cover);

bool base_point_free(const NodalCover& cover, const SectionSpace& subspace);

// True iff the pairwise products of the basis are linearly independent in
// H^0(omega^2) (rank k(k+1)/2).
bool sym2_injective(const NodalCover& cover, const SectionSpace& subspace);

// Product of sections of (m1,d1) and (m2,d2) as a section of (m1+m2,d1+d2).
std::vector<Rat> product_section(const SectionSpace& s1, const std::vector<Rat>& v1,
                                 const SectionSpace& s2, const std::vector<Rat>& v2,
                                 const SectionSpace& target);

struct TheoremReport {
    bool refused = false;  // monodromy precondition failed
    std::string refusal_reason;
    long monodromy = 0;
    long nodes = 0;
    bool connected = false;
    long genus = 0;
    long h0_L = -1, h0_omega = -1, h0_omega_minus_L = -1, h0_omega2 = -1,
         h0_2omega_minus_5L = -1;
    long dim_minus5 = -1, dim_plus1 = -1, dim_intersection = -1;
    long mult_image_dim = -1;
    bool mult_image_in_plus1 = false;
    bool bpf = false;
    long sym2_rank = -1;
    bool part1 = false, part2 = false, part3 = false, part4 = false, part5 = false;
    bool thm_5_4 = false;

    bool all_pass() const {
        return !refused && part1 && part2 && part3 && part4 && part5 && thm_5_4;
    }
};

// Runs the five verifications of the glued-cover theorem plus the
// 2omega - 5L vanishing; refuses specs without full monodromy.
TheoremReport theorem_check(const GluingSpec& spec);

}  // namespace e6
