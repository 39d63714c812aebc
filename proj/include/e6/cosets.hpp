#pragma once

#include "e6/group.hpp"

#include <string>
#include <vector>

namespace e6 {

// Subgroup of W(E6) as a sorted set of element indices, tagged with the
// descriptor it was built from (serialized JSON, see descriptor_to_json).
struct Subgroup {
    std::vector<int> members;
    std::string descriptor;

    long order() const { return static_cast<long>(members.size()); }
    long index(const GroupTable& t) const { return t.order() / order(); }
    bool contains(int e) const;
};

Subgroup stab_line(const GroupTable& t, int line);
Subgroup stab_double_six(const GroupTable& t, const Root& r);
// Setwise stabilizer of a tritangent triple; validates that the three line
// vectors sum to -K and are pairwise incident.
Subgroup stab_tritangent(const GroupTable& t, int l1, int l2, int l3);
Subgroup cyclic_subgroup(const GroupTable& t, int cls);
Subgroup centralizer_subgroup(const GroupTable& t, int cls);
Subgroup full_group(const GroupTable& t);

// Checks identity membership and closure under product and inverse.
void validate_subgroup(const GroupTable& t, const Subgroup& g);

// Left cosets of G, named by the least element index they contain.
struct CosetSpace {
    std::vector<int> coset_of;  // element index -> coset id
    std::vector<int> reps;      // coset id -> canonical element index
    long degree() const { return static_cast<long>(reps.size()); }
};

CosetSpace build_cosets(const GroupTable& t, const Subgroup& g);

// Orbit sizes of the class representative acting on cosets, descending.
std::vector<long> cycle_type(const GroupTable& t, const CosetSpace& cs, int cls);

// Fixed cosets of the class representative (the permutation character).
long fixed_cosets(const GroupTable& t, const CosetSpace& cs, int cls);

// Lemma route for prime-order classes: b = |G n c| |Z| / |G|, a = (d-b)/p.
std::pair<long, long> lemma_cycle_type(const GroupTable& t, const Subgroup& g, int cls);

struct RamificationProfile {
    long a2c = 0, b2c = 0, a2b = 0, b2b = 0, a3b = 0, b3b = 0;
    long d = 0;
    bool operator==(const RamificationProfile&) const = default;
};

// Orbit route on the classes 2c, 2b, 3b, cross-checked against the lemma.
RamificationProfile profile(const GroupTable& t, const Subgroup& g);
RamificationProfile profile(const GroupTable& t, const Subgroup& g, const CosetSpace& cs);

inline long genus(const RamificationProfile& p) { return 12 * p.a2c - p.d + 1; }

// Descriptor round-trips: "g27", "g36", "g45", "cyclic:2c",
// "centralizer:3b", "stab_line:a6", or the JSON object form.
Subgroup subgroup_from_descriptor(const GroupTable& t, const std::string& desc);
std::string descriptor_to_json(const std::string& kind, const std::string& arg);

}  // namespace e6
