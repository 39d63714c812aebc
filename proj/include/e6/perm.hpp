#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <numeric>
#include <vector>

namespace e6 {

// A permutation of the 27 lines, one-line notation: p[i] = image of line i.
using Perm27 = std::array<uint8_t, 27>;
using GroupElement = Perm27;

inline Perm27 perm_identity() {
    Perm27 p;
    for (int i = 0; i < 27; ++i) p[i] = static_cast<uint8_t>(i);
    return p;
}

// (g*h)(l) = g(h(l)) -- the composition convention used everywhere.
inline Perm27 perm_compose(const Perm27& g, const Perm27& h) {
    Perm27 r;
    for (int i = 0; i < 27; ++i) r[i] = g[h[i]];
    return r;
}

inline Perm27 perm_inverse(const Perm27& g) {
    Perm27 r;
    for (int i = 0; i < 27; ++i) r[g[i]] = static_cast<uint8_t>(i);
    return r;
}

inline int perm_fixed_points(const Perm27& g) {
    int n = 0;
    for (int i = 0; i < 27; ++i)
        if (g[i] == i) ++n;
    return n;
}

// Cycle lengths sorted descending.
inline std::vector<int> perm_cycle_type(const Perm27& g) {
    std::array<bool, 27> seen{};
    std::vector<int> parts;
    for (int i = 0; i < 27; ++i) {
        if (seen[i]) continue;
        int len = 0, x = i;
        while (!seen[x]) {
            seen[x] = true;
            x = g[x];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

inline int perm_order(const Perm27& g) {
    int o = 1;
    for (int len : perm_cycle_type(g)) o = std::lcm(o, len);
    return o;
}

struct PermHash {
    size_t operator()(const Perm27& p) const {
        uint64_t h = 1469598103934665603ULL;
        for (uint8_t b : p) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace e6
