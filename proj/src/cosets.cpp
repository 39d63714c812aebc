#include "e6/cosets.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace e6 {

using nlohmann::json;

bool Subgroup::contains(int e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

namespace {

Subgroup filter_elements(const GroupTable& t, const std::string& desc, auto&& pred) {
    Subgroup g;
    g.descriptor = desc;
    for (int i = 0; i < t.order(); ++i)
        if (pred(i)) g.members.push_back(i);
    return g;
}

}  // namespace

Subgroup stab_line(const GroupTable& t, int line) {
    if (line < 0 || line >= 27) throw input_error("line index out of range");
    return filter_elements(t, descriptor_to_json("stab_line", line_name(line)),
                           [&](int i) { return t.perm(i)[line] == line; });
}

Subgroup stab_double_six(const GroupTable& t, const Root& r) {
    // g fixes {r,-r} iff it commutes with the reflection s_r, since
    // g s_r g^-1 = s_{g(r)} and roots map 2:1 onto reflections.
    Perm27 s = perm_of_reflection(r);
    std::string arg;
    for (int i = 0; i < 7; ++i) arg += (i ? "," : "") + r.v.c[i].str();
    return filter_elements(t, descriptor_to_json("stab_double_six", arg), [&](int i) {
        return perm_compose(t.perm(i), s) == perm_compose(s, t.perm(i));
    });
}

Subgroup stab_tritangent(const GroupTable& t, int l1, int l2, int l3) {
    if (l1 == l2 || l2 == l3 || l1 == l3) throw input_error("tritangent lines must be distinct");
    PicVector sum = lines()[l1] + lines()[l2] + lines()[l3];
    if (!(sum == -canonical_class()) || !incident(l1, l2) || !incident(l2, l3) ||
        !incident(l1, l3))
        throw input_error("lines do not form a tritangent triple");
    std::array<int, 3> tri{l1, l2, l3};
    std::sort(tri.begin(), tri.end());
    return filter_elements(
        t, descriptor_to_json("stab_tritangent", line_name(l1) + "," + line_name(l2) + "," + line_name(l3)),
        [&](int i) {
            const Perm27& p = t.perm(i);
            std::array<int, 3> img{p[tri[0]], p[tri[1]], p[tri[2]]};
            std::sort(img.begin(), img.end());
            return img == tri;
        });
}

Subgroup cyclic_subgroup(const GroupTable& t, int cls) {
    int w = t.representative(cls);
    Subgroup g;
    g.descriptor = descriptor_to_json("cyclic", std::string(kClassNames[cls]));
    int x = t.identity();
    g.members.push_back(x);
    x = t.mul(w, x);
    while (x != t.identity()) {
        g.members.push_back(x);
        x = t.mul(w, x);
    }
    std::sort(g.members.begin(), g.members.end());
    return g;
}

Subgroup centralizer_subgroup(const GroupTable& t, int cls) {
    int w = t.representative(cls);
    const Perm27& pw = t.perm(w);
    return filter_elements(
        t, descriptor_to_json("centralizer", std::string(kClassNames[cls])), [&](int i) {
            return perm_compose(t.perm(i), pw) == perm_compose(pw, t.perm(i));
        });
}

Subgroup full_group(const GroupTable& t) {
    Subgroup g;
    g.descriptor = descriptor_to_json("full", "");
    g.members.resize(t.order());
    for (int i = 0; i < t.order(); ++i) g.members[i] = i;
    return g;
}

void validate_subgroup(const GroupTable& t, const Subgroup& g) {
    if (!g.contains(t.identity())) throw consistency_error("subgroup misses identity");
    if (t.order() % g.order() != 0)
        throw consistency_error("subgroup order does not divide 51840");
    for (int a : g.members) {
        if (!g.contains(t.inv(a))) throw consistency_error("subgroup not closed under inverse");
        for (int b : g.members)
            if (!g.contains(t.mul(a, b)))
                throw consistency_error("subgroup not closed under product");
    }
}

CosetSpace build_cosets(const GroupTable& t, const Subgroup& g) {
    CosetSpace cs;
    cs.coset_of.assign(t.order(), -1);
    for (int i = 0; i < t.order(); ++i) {
        if (cs.coset_of[i] >= 0) continue;
        int cid = static_cast<int>(cs.reps.size());
        cs.reps.push_back(i);  // least element of the coset, by scan order
        for (int m : g.members) cs.coset_of[t.mul(i, m)] = cid;
    }
    return cs;
}

std::vector<long> cycle_type(const GroupTable& t, const CosetSpace& cs, int cls) {
    int u = t.representative(cls);
    long d = cs.degree();
    std::vector<int> img(d);
    for (long s = 0; s < d; ++s) img[s] = cs.coset_of[t.mul(u, cs.reps[s])];
    std::vector<bool> seen(d, false);
    std::vector<long> parts;
    for (long s = 0; s < d; ++s) {
        if (seen[s]) continue;
        long len = 0;
        long x = s;
        while (!seen[x]) {
            seen[x] = true;
            x = img[x];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return parts;
}

long fixed_cosets(const GroupTable& t, const CosetSpace& cs, int cls) {
    int u = t.representative(cls);
    long n = 0;
    for (long s = 0; s < cs.degree(); ++s)
        if (cs.coset_of[t.mul(u, cs.reps[s])] == s) ++n;
    return n;
}

std::pair<long, long> lemma_cycle_type(const GroupTable& t, const Subgroup& g, int cls) {
    int p = class_order(kClassNames[cls]);
    if (p != 2 && p != 3 && p != 5)
        throw input_error("lemma_cycle_type needs a prime-order class");
    long in_class = 0;
    for (int m : g.members)
        if (t.class_of(m) == cls) ++in_class;
    long num = in_class * t.classes()[cls].centralizer;
    if (num % g.order() != 0) throw consistency_error("lemma b-count not integral");
    long b = num / g.order();
    long d = g.index(t);
    if ((d - b) % p != 0) throw consistency_error("lemma a-count not integral");
    return {(d - b) / p, b};
}

namespace {

std::pair<long, long> orbit_ab(const std::vector<long>& parts, int p) {
    long a = 0, b = 0, total = 0;
    for (long x : parts) {
        if (x == p)
            ++a;
        else if (x == 1)
            ++b;
        else
            throw consistency_error("prime-order action has a cycle of length " +
                                    std::to_string(x));
        total += x;
    }
    (void)total;
    return {a, b};
}

}  // namespace

RamificationProfile profile(const GroupTable& t, const Subgroup& g, const CosetSpace& cs) {
    RamificationProfile pr;
    pr.d = cs.degree();
    const std::array<std::pair<int, int>, 3> wanted = {
        std::pair{kClassIdx2c, 2}, {kClassIdx2b, 2}, {kClassIdx3b, 3}};
    long* out[3][2] = {{&pr.a2c, &pr.b2c}, {&pr.a2b, &pr.b2b}, {&pr.a3b, &pr.b3b}};
    for (int k = 0; k < 3; ++k) {
        auto [cls, p] = wanted[k];
        auto [a, b] = orbit_ab(cycle_type(t, cs, cls), p);
        if (std::pair{a, b} != lemma_cycle_type(t, g, cls))
            throw consistency_error("orbit and lemma cycle types disagree for class " +
                                    std::string(kClassNames[cls]));
        *out[k][0] = a;
        *out[k][1] = b;
    }
    return pr;
}

RamificationProfile profile(const GroupTable& t, const Subgroup& g) {
    return profile(t, g, build_cosets(t, g));
}

std::string descriptor_to_json(const std::string& kind, const std::string& arg) {
    json j;
    j["kind"] = kind;
    if (kind == "stab_line")
        j["line"] = arg;
    else if (kind == "cyclic" || kind == "centralizer")
        j["class"] = arg;
    else if (kind == "stab_double_six")
        j["root"] = arg;
    else if (kind == "stab_tritangent")
        j["lines"] = arg;
    return j.dump();
}

Subgroup subgroup_from_descriptor(const GroupTable& t, const std::string& desc) {
    std::string kind, arg;
    if (!desc.empty() && desc.front() == '{') {
        json j;
        try {
            j = json::parse(desc);
        } catch (const json::exception& e) {
            throw input_error("bad subgroup descriptor JSON: " + std::string(e.what()));
        }
        if (!j.contains("kind")) throw input_error("descriptor missing 'kind'");
        kind = j["kind"].get<std::string>();
        if (j.contains("line")) arg = j["line"].get<std::string>();
        if (j.contains("class")) arg = j["class"].get<std::string>();
        if (j.contains("lines")) arg = j["lines"].get<std::string>();
    } else {
        auto colon = desc.find(':');
        kind = desc.substr(0, colon);
        if (colon != std::string::npos) arg = desc.substr(colon + 1);
    }

    if (kind == "g27") return stab_line(t, line_index_of_name("a6"));
    if (kind == "g36") return stab_double_six(t, fundamental_roots()[0]);
    if (kind == "g45")
        return stab_tritangent(t, line_index_of_name("a1"), line_index_of_name("b2"),
                               line_index_of_name("c12"));
    if (kind == "full") return full_group(t);
    if (kind == "stab_line") return stab_line(t, line_index_of_name(arg));
    if (kind == "cyclic") return cyclic_subgroup(t, GroupTable::class_index(arg));
    if (kind == "centralizer") return centralizer_subgroup(t, GroupTable::class_index(arg));
    if (kind == "stab_tritangent") {
        std::vector<int> ls;
        size_t pos = 0;
        while (pos != std::string::npos && ls.size() < 3) {
            size_t comma = arg.find(',', pos);
            ls.push_back(line_index_of_name(
                arg.substr(pos, comma == std::string::npos ? comma : comma - pos)));
            pos = comma == std::string::npos ? comma : comma + 1;
        }
        if (ls.size() != 3) throw input_error("stab_tritangent needs three line names");
        return stab_tritangent(t, ls[0], ls[1], ls[2]);
    }
    throw input_error("unknown subgroup descriptor: " + desc);
}

}  // namespace e6
