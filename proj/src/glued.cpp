#include "e6/glued.hpp"

#include "e6/ratmat.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace e6 {

using nlohmann::json;

GluingSpec default_spec() {
    static const char* names[12] = {"a135", "a12", "a23", "a34", "a45", "a56",
                                    "a16",  "a456", "a123", "a346", "a234", "a156"};
    GluingSpec spec;
    for (int j = 0; j < 12; ++j) {
        spec.roots.emplace_back(*parse_root_alias(names[j]));
        spec.points.emplace_back(j + 1);
    }
    return spec;
}

GluingSpec spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error("bad spec JSON: " + std::string(e.what()));
    }
    if (!j.is_array()) throw input_error("spec must be a JSON array");
    GluingSpec spec;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("root") || !entry.contains("point"))
            throw input_error("each entry needs 'root' and 'point'");
        const auto& r = entry["root"];
        PicVector v;
        if (r.is_string()) {
            auto parsed = parse_root_alias(r.get<std::string>());
            if (!parsed) throw input_error("unknown root alias: " + r.get<std::string>());
            v = *parsed;
        } else if (r.is_array() && r.size() == 7) {
            for (int i = 0; i < 7; ++i) v.c[i] = r[i].get<long>();
        } else {
            throw input_error("'root' must be a 7-integer array or a name");
        }
        spec.roots.emplace_back(v);  // validates r.r = -2, r.K = 0
        const auto& p = entry["point"];
        if (p.is_string())
            spec.points.push_back(parse_rat(p.get<std::string>()));
        else if (p.is_number_integer())
            spec.points.emplace_back(p.get<long>());
        else
            throw input_error("'point' must be an integer or a \"p/q\" string");
    }
    if (spec.roots.empty()) throw input_error("spec has no branch points");
    return spec;
}

std::string spec_to_json(const GluingSpec& spec) {
    json arr = json::array();
    for (size_t j = 0; j < spec.roots.size(); ++j) {
        json e;
        json rv = json::array();
        for (int i = 0; i < 7; ++i)
            rv.push_back(static_cast<long>(spec.roots[j].v.c[i]));
        e["root"] = rv;
        e["point"] = rat_str(spec.points[j]);
        arr.push_back(e);
    }
    return arr.dump();
}

long monodromy_order(const GluingSpec& spec) {
    std::vector<Perm27> gens;
    for (const Root& r : spec.roots) gens.push_back(perm_of_reflection(r));
    std::unordered_set<Perm27, PermHash> seen;
    std::deque<Perm27> queue;
    seen.insert(perm_identity());
    queue.push_back(perm_identity());
    while (!queue.empty()) {
        Perm27 x = queue.front();
        queue.pop_front();
        for (const Perm27& g : gens) {
            Perm27 y = perm_compose(g, x);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return static_cast<long>(seen.size());
}

bool monodromy_full(const GluingSpec& spec) { return monodromy_order(spec) == 51840; }

NodalCover build(const GluingSpec& spec) {
    if (spec.roots.size() != spec.points.size())
        throw input_error("roots and points must have equal length");
    if (spec.roots.empty()) throw input_error("spec has no branch points");
    std::set<Rat> distinct(spec.points.begin(), spec.points.end());
    if (distinct.size() != spec.points.size())
        throw input_error("branch points must be pairwise distinct");

    NodalCover cover;
    cover.spec = spec;
    for (size_t j = 0; j < spec.roots.size(); ++j)
        for (auto [a, b] : double_sixer(spec.roots[j]))
            cover.nodes.push_back(GluedNode{spec.points[j], a, b, static_cast<int>(j)});
    for (size_t n = 0; n < cover.nodes.size(); ++n) {
        cover.comp_nodes[cover.nodes[n].a_comp].emplace_back(cover.nodes[n].q, n);
        cover.comp_nodes[cover.nodes[n].b_comp].emplace_back(cover.nodes[n].q, n);
    }
    for (auto& cn : cover.comp_nodes) {
        std::sort(cn.begin(), cn.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (size_t k = 1; k < cn.size(); ++k)
            if (cn[k].first == cn[k - 1].first)
                throw consistency_error("two nodes over one point on a component");
    }

    std::array<int, 27> parent;
    for (int i = 0; i < 27; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const GluedNode& n : cover.nodes) parent[find(n.a_comp)] = find(n.b_comp);
    int comps = 0;
    for (int i = 0; i < 27; ++i) comps += find(i) == i;
    cover.connected = comps == 1;
    return cover;
}

Rat residue_coeff(const NodalCover& cover, int comp, const Rat& q) {
    bool on_comp = false;
    Rat prod = 1;
    for (const auto& [qq, _] : cover.comp_nodes[comp]) {
        if (qq == q)
            on_comp = true;
        else
            prod *= q - qq;
    }
    if (!on_comp) throw input_error("node does not lie on the component");
    return 1 / prod;
}

Rat SectionSpace::eval(const std::vector<Rat>& section, int comp, const Rat& q) const {
    if (degree[comp] < 0) return 0;
    Rat s = 0, p = 1;
    for (long k = 0; k <= degree[comp]; ++k) {
        s += section[offset[comp] + k] * p;
        p *= q;
    }
    return s;
}

namespace {

SectionSpace make_layout(const NodalCover& cover, const BundleSpec& bundle) {
    SectionSpace sp;
    sp.bundle = bundle;
    size_t off = 0;
    for (int i = 0; i < 27; ++i) {
        sp.degree[i] = bundle.m * (cover.node_count(i) - 2) + bundle.d;
        sp.offset[i] = off;
        if (sp.degree[i] >= 0) off += static_cast<size_t>(sp.degree[i]) + 1;
    }
    sp.ncols = off;
    return sp;
}

Rat power(Rat base, int e) {
    Rat out = 1;
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}

// One row per node: R_a^m P_a(q) - (-1)^m R_b^m P_b(q) = 0.
QMat condition_matrix(const NodalCover& cover, const SectionSpace& sp) {
    QMat m(cover.nodes.size(), sp.ncols);
    for (size_t n = 0; n < cover.nodes.size(); ++n) {
        const GluedNode& node = cover.nodes[n];
        Rat ra = power(residue_coeff(cover, node.a_comp, node.q), sp.bundle.m);
        Rat rb = power(residue_coeff(cover, node.b_comp, node.q), sp.bundle.m);
        if (sp.bundle.m % 2) rb = -rb;
        if (sp.degree[node.a_comp] >= 0) {
            Rat p = 1;
            for (long k = 0; k <= sp.degree[node.a_comp]; ++k) {
                m.at(n, sp.offset[node.a_comp] + k) += ra * p;
                p *= node.q;
            }
        }
        if (sp.degree[node.b_comp] >= 0) {
            Rat p = 1;
            for (long k = 0; k <= sp.degree[node.b_comp]; ++k) {
                m.at(n, sp.offset[node.b_comp] + k) -= rb * p;
                p *= node.q;
            }
        }
    }
    return m;
}

}  // namespace

SectionSpace section_space(const NodalCover& cover, const BundleSpec& bundle) {
    SectionSpace sp = make_layout(cover, bundle);
    sp.basis = kernel_basis(condition_matrix(cover, sp));
    return sp;
}

long h0(const NodalCover& cover, const BundleSpec& bundle) {
    return static_cast<long>(section_space(cover, bundle).dim());
}

bool satisfies_node_conditions(const NodalCover& cover, const SectionSpace& sp,
                               const std::vector<Rat>& section) {
    for (const GluedNode& node : cover.nodes) {
        Rat ra = power(residue_coeff(cover, node.a_comp, node.q), sp.bundle.m);
        Rat rb = power(residue_coeff(cover, node.b_comp, node.q), sp.bundle.m);
        Rat lhs = ra * sp.eval(section, node.a_comp, node.q);
        Rat rhs = rb * sp.eval(section, node.b_comp, node.q);
        if (sp.bundle.m % 2) rhs = -rhs;
        if (lhs != rhs) return false;
    }
    return true;
}

Rat section_residue(const NodalCover& cover, const SectionSpace& sp,
                    const std::vector<Rat>& section, int node_index, char side) {
    if (sp.bundle.m != 1) throw input_error("residues are defined for m = 1 bundles");
    const GluedNode& node = cover.nodes[node_index];
    int comp = side == 'a' ? node.a_comp : node.b_comp;
    return sp.eval(section, comp, node.q) * residue_coeff(cover, comp, node.q);
}

namespace {

// Rows of a-side residue functionals per branch point, applied to the
// omega basis; "equal" emits pairwise differences, else the sum.
SectionSpace residue_cut(const NodalCover& cover, const SectionSpace& omega, bool equal,
                         bool both) {
    size_t nb = omega.dim();
    std::map<int, std::vector<size_t>> by_root;
    for (size_t n = 0; n < cover.nodes.size(); ++n)
        by_root[cover.nodes[n].root_index].push_back(n);

    std::vector<std::vector<Rat>> rows;
    for (const auto& [root, node_ids] : by_root) {
        std::vector<std::vector<Rat>> res(node_ids.size(), std::vector<Rat>(nb));
        for (size_t k = 0; k < node_ids.size(); ++k)
            for (size_t t = 0; t < nb; ++t)
                res[k][t] = section_residue(cover, omega, omega.basis[t],
                                            static_cast<int>(node_ids[k]), 'a');
        if (equal || both)
            for (size_t k = 1; k < node_ids.size(); ++k) {
                std::vector<Rat> row(nb);
                for (size_t t = 0; t < nb; ++t) row[t] = res[k][t] - res[0][t];
                rows.push_back(std::move(row));
            }
        if (!equal || both) {
            std::vector<Rat> row(nb);
            for (size_t t = 0; t < nb; ++t)
                for (size_t k = 0; k < node_ids.size(); ++k) row[t] += res[k][t];
            rows.push_back(std::move(row));
        }
    }

    QMat m(rows.size(), nb);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < nb; ++c) m.at(r, c) = rows[r][c];
    auto coords = kernel_basis(std::move(m));

    SectionSpace sub = omega;
    sub.basis.clear();
    for (const auto& co : coords) {
        std::vector<Rat> v(omega.ncols);
        for (size_t t = 0; t < nb; ++t) {
            if (co[t] == 0) continue;
            for (size_t k = 0; k < omega.ncols; ++k) v[k] += co[t] * omega.basis[t][k];
        }
        sub.basis.push_back(std::move(v));
    }
    return sub;
}

long rank_of(const std::vector<std::vector<Rat>>& vecs, size_t ncols) {
    QMat m(vecs.size(), ncols);
    for (size_t r = 0; r < vecs.size(); ++r)
        for (size_t c = 0; c < ncols; ++c) m.at(r, c) = vecs[r][c];
    return static_cast<long>(rank(std::move(m)));
}

}  // namespace

SectionSpace minus5_subspace(const NodalCover& cover, const SectionSpace& omega) {
    return residue_cut(cover, omega, true, false);
}

SectionSpace plus1_subspace(const NodalCover& cover, const SectionSpace& omega) {
    return residue_cut(cover, omega, false, false);
}

SectionSpace intersect_eigenspaces(const NodalCover& cover, const SectionSpace& omega) {
    return residue_cut(cover, omega, true, true);
}

std::vector<Rat> product_section(const SectionSpace& s1, const std::vector<Rat>& v1,
                                 const SectionSpace& s2, const std::vector<Rat>& v2,
                                 const SectionSpace& target) {
    std::vector<Rat> out(target.ncols);
    for (int i = 0; i < 27; ++i) {
        if (s1.degree[i] < 0 || s2.degree[i] < 0 || target.degree[i] < 0) continue;
        for (long k1 = 0; k1 <= s1.degree[i]; ++k1) {
            if (v1[s1.offset[i] + k1] == 0) continue;
            for (long k2 = 0; k2 <= s2.degree[i]; ++k2)
                out[target.offset[i] + k1 + k2] +=
                    v1[s1.offset[i] + k1] * v2[s2.offset[i] + k2];
        }
    }
    return out;
}

MultImage mult_image(const NodalCover& cover) {
    SectionSpace l = section_space(cover, BundleSpec{0, 1});
    SectionSpace wl = section_space(cover, BundleSpec{1, -1});
    SectionSpace omega = make_layout(cover, BundleSpec{1, 0});

    std::map<int, std::vector<size_t>> by_root;
    for (size_t n = 0; n < cover.nodes.size(); ++n)
        by_root[cover.nodes[n].root_index].push_back(n);

    MultImage out;
    out.inside_plus1 = true;
    std::vector<std::vector<Rat>> prods;
    for (const auto& u : l.basis)
        for (const auto& v : wl.basis) {
            auto w = product_section(l, u, wl, v, omega);
            for (const auto& [root, node_ids] : by_root) {
                Rat sum = 0;
                for (size_t n : node_ids)
                    sum += section_residue(cover, omega, w, static_cast<int>(n), 'a');
                if (sum != 0) out.inside_plus1 = false;
            }
            prods.push_back(std::move(w));
        }
    out.dim = rank_of(prods, omega.ncols);
    return out;
}

namespace {

// Polynomial helpers on dense coefficient vectors (low degree first).
void poly_trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rat f = a.back() / b.back();
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
            poly_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& q) {
    Rat s = 0;
    for (size_t i = p.size(); i-- > 0;) s = s * q + p[i];
    return s;
}

std::vector<Rat> poly_divide_linear(const std::vector<Rat>& p, const Rat& q) {
    // p / (t - q), exact by assumption
    std::vector<Rat> out(p.size() - 1);
    Rat carry = p.back();
    for (size_t k = p.size() - 1; k-- > 0;) {
        out[k] = carry;
        carry = p[k] + q * carry;
    }
    return out;
}

}  // namespace

bool base_point_free(const NodalCover& cover, const SectionSpace& sub) {
    if (sub.basis.empty()) return false;
    if (sub.bundle.m != 1) throw input_error("base-point test expects an omega subspace");

    // (i) some section has a nonzero residue at every node
    for (size_t n = 0; n < cover.nodes.size(); ++n) {
        bool hit = false;
        for (const auto& v : sub.basis)
            if (section_residue(cover, sub, v, static_cast<int>(n), 'a') != 0) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }

    for (int i = 0; i < 27; ++i) {
        if (sub.degree[i] < 0) continue;
        // (iii) top degree attained: otherwise every section vanishes at
        // infinity on this component
        bool top = false;
        for (const auto& v : sub.basis)
            if (v[sub.offset[i] + sub.degree[i]] != 0) {
                top = true;
                break;
            }
        if (!top) return false;

        // (ii) the gcd of the numerators must have no root away from the
        // node points (any leftover factor after stripping them means a
        // common zero somewhere on the affine component)
        std::vector<Rat> g(sub.basis[0].begin() + static_cast<long>(sub.offset[i]),
                           sub.basis[0].begin() + static_cast<long>(sub.offset[i]) +
                               sub.degree[i] + 1);
        for (size_t t = 1; t < sub.basis.size(); ++t) {
            std::vector<Rat> p(sub.basis[t].begin() + static_cast<long>(sub.offset[i]),
                               sub.basis[t].begin() + static_cast<long>(sub.offset[i]) +
                                   sub.degree[i] + 1);
            g = poly_gcd(std::move(g), std::move(p));
            if (g.size() <= 1) break;
        }
        if (g.empty()) return false;  // all sections vanish on the component
        for (const auto& [q, _] : cover.comp_nodes[i])
            while (g.size() > 1 && poly_eval(g, q) == 0) g = poly_divide_linear(g, q);
        if (g.size() > 1) return false;
    }
    return true;
}

bool sym2_injective(const NodalCover& cover, const SectionSpace& sub) {
    SectionSpace omega2 = make_layout(cover, BundleSpec{2 * sub.bundle.m, 2 * sub.bundle.d});
    std::vector<std::vector<Rat>> prods;
    for (size_t x = 0; x < sub.basis.size(); ++x)
        for (size_t y = x; y < sub.basis.size(); ++y)
            prods.push_back(product_section(sub, sub.basis[x], sub, sub.basis[y], omega2));
    size_t k = sub.basis.size();
    return rank_of(prods, omega2.ncols) == static_cast<long>(k * (k + 1) / 2);
}

TheoremReport theorem_check(const GluingSpec& spec) {
    TheoremReport rep;
    NodalCover cover = build(spec);  // validates the spec before anything else
    rep.monodromy = monodromy_order(spec);
    if (rep.monodromy != 51840) {
        rep.refused = true;
        rep.refusal_reason = "monodromy subgroup has order " +
                             std::to_string(rep.monodromy) + ", not 51840";
        return rep;
    }
    rep.nodes = static_cast<long>(cover.nodes.size());
    rep.connected = cover.connected;
    rep.genus = cover.arithmetic_genus();

    SectionSpace omega = section_space(cover, BundleSpec{1, 0});
    rep.h0_omega = static_cast<long>(omega.dim());
    rep.h0_L = h0(cover, BundleSpec{0, 1});
    rep.h0_omega_minus_L = h0(cover, BundleSpec{1, -1});
    rep.h0_omega2 = h0(cover, BundleSpec{2, 0});
    rep.h0_2omega_minus_5L = h0(cover, BundleSpec{2, -5});

    SectionSpace minus5 = minus5_subspace(cover, omega);
    SectionSpace plus1 = plus1_subspace(cover, omega);
    rep.dim_minus5 = static_cast<long>(minus5.dim());
    rep.dim_plus1 = static_cast<long>(plus1.dim());
    rep.dim_intersection = static_cast<long>(intersect_eigenspaces(cover, omega).dim());

    MultImage mi = mult_image(cover);
    rep.mult_image_dim = mi.dim;
    rep.mult_image_in_plus1 = mi.inside_plus1;
    rep.bpf = base_point_free(cover, minus5);

    rep.sym2_rank = -1;
    if (rep.dim_minus5 == 6) {
        SectionSpace omega2 = make_layout(cover, BundleSpec{2, 0});
        std::vector<std::vector<Rat>> prods;
        for (size_t x = 0; x < minus5.basis.size(); ++x)
            for (size_t y = x; y < minus5.basis.size(); ++y)
                prods.push_back(
                    product_section(minus5, minus5.basis[x], minus5, minus5.basis[y], omega2));
        QMat m(prods.size(), omega2.ncols);
        for (size_t r = 0; r < prods.size(); ++r)
            for (size_t c = 0; c < omega2.ncols; ++c) m.at(r, c) = prods[r][c];
        rep.sym2_rank = static_cast<long>(rank(std::move(m)));
    }

    rep.part1 = rep.h0_L == 2;
    rep.part2 = rep.mult_image_dim == 40 && rep.mult_image_in_plus1;
    rep.part3 = rep.h0_2omega_minus_5L == 0;
    rep.part4 = rep.dim_minus5 == 6 && rep.bpf;
    rep.part5 = rep.sym2_rank == 21;
    rep.thm_5_4 = rep.h0_2omega_minus_5L == 0;
    return rep;
}

}  // namespace e6
