#include "e6/lattice.hpp"

#include <algorithm>
#include <map>

namespace e6 {

PicVector PicVector::operator+(const PicVector& o) const {
    PicVector r;
    for (int i = 0; i < 7; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

PicVector PicVector::operator-(const PicVector& o) const {
    PicVector r;
    for (int i = 0; i < 7; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

PicVector PicVector::operator-() const {
    PicVector r;
    for (int i = 0; i < 7; ++i) r.c[i] = -c[i];
    return r;
}

PicVector PicVector::operator*(const Int& k) const {
    PicVector r;
    for (int i = 0; i < 7; ++i) r.c[i] = c[i] * k;
    return r;
}

Int pairing(const PicVector& x, const PicVector& y) {
    Int s = x.c[0] * y.c[0];
    for (int i = 1; i < 7; ++i) s -= x.c[i] * y.c[i];
    return s;
}

namespace {

PicVector make(std::initializer_list<int> v) {
    PicVector p;
    int i = 0;
    for (int x : v) p.c[i++] = x;
    return p;
}

PicVector basis_e(int i) {
    PicVector p;
    p.c[i] = 1;
    return p;
}

}  // namespace

const PicVector& canonical_class() {
    static const PicVector k = make({-3, 1, 1, 1, 1, 1, 1});
    return k;
}

Root::Root(PicVector vec) : v(std::move(vec)) {
    if (pairing(v, v) != -2 || pairing(v, canonical_class()) != 0)
        throw input_error("not a root of E6");
}

Root sign_normalized(const Root& r) {
    for (int i = 0; i < 7; ++i) {
        if (r.v.c[i] == 0) continue;
        return r.v.c[i] > 0 ? r : Root(-r.v);
    }
    throw input_error("zero vector is not a root");
}

namespace {

struct LineTables {
    std::array<PicVector, 27> vecs;
    std::array<std::string, 27> names;
    std::map<PicVector, int> index;

    LineTables() {
        int n = 0;
        for (int i = 1; i <= 6; ++i) {  // a_i = e_i
            vecs[n] = basis_e(i);
            names[n] = "a" + std::to_string(i);
            ++n;
        }
        for (int i = 1; i <= 6; ++i) {  // b_i = 2h - sum_{j != i} e_j
            PicVector p = make({2, -1, -1, -1, -1, -1, -1});
            p.c[i] = 0;
            vecs[n] = p;
            names[n] = "b" + std::to_string(i);
            ++n;
        }
        for (int i = 1; i <= 6; ++i)  // c_ij = h - e_i - e_j, lex i < j
            for (int j = i + 1; j <= 6; ++j) {
                PicVector p;
                p.c[0] = 1;
                p.c[i] = -1;
                p.c[j] = -1;
                vecs[n] = p;
                names[n] = "c" + std::to_string(i) + std::to_string(j);
                ++n;
            }
        for (int i = 0; i < 27; ++i) index[vecs[i]] = i;
    }
};

const LineTables& line_tables() {
    static const LineTables t;
    return t;
}

}  // namespace

const std::array<PicVector, 27>& lines() { return line_tables().vecs; }
const std::array<std::string, 27>& line_names() { return line_tables().names; }

int line_index_of(const PicVector& v) {
    auto it = line_tables().index.find(v);
    return it == line_tables().index.end() ? -1 : it->second;
}

int line_index_of_name(const std::string& name) {
    for (int i = 0; i < 27; ++i)
        if (line_tables().names[i] == name) return i;
    throw input_error("unknown line name: " + name);
}

std::string line_name(int index) {
    if (index < 0 || index >= 27) throw input_error("line index out of range");
    return line_tables().names[index];
}

const std::vector<Root>& roots() {
    static const std::vector<Root> rs = [] {
        std::vector<PicVector> vs;
        for (int i = 1; i <= 6; ++i)  // e_i - e_j
            for (int j = i + 1; j <= 6; ++j) {
                PicVector p;
                p.c[i] = 1;
                p.c[j] = -1;
                vs.push_back(p);
            }
        for (int i = 1; i <= 6; ++i)  // h - e_i - e_j - e_k
            for (int j = i + 1; j <= 6; ++j)
                for (int k = j + 1; k <= 6; ++k) {
                    PicVector p;
                    p.c[0] = 1;
                    p.c[i] = -1;
                    p.c[j] = -1;
                    p.c[k] = -1;
                    vs.push_back(p);
                }
        vs.push_back(make({2, -1, -1, -1, -1, -1, -1}));
        std::sort(vs.begin(), vs.end());
        std::vector<Root> out;
        out.reserve(36);
        for (auto& v : vs) out.emplace_back(std::move(v));
        return out;
    }();
    return rs;
}

std::vector<PicVector> all_root_vectors() {
    std::vector<PicVector> out;
    out.reserve(72);
    for (const Root& r : roots()) {
        out.push_back(r.v);
        out.push_back(-r.v);
    }
    return out;
}

bool incident(int l1, int l2) {
    if (l1 == l2) throw input_error("incidence is defined for distinct lines");
    return pairing(lines()[l1], lines()[l2]) == 1;
}

PicVector reflect(const Root& r, const PicVector& x) {
    return x + r.v * pairing(x, r.v);
}

std::array<std::pair<int, int>, 6> double_sixer(const Root& r) {
    std::array<std::pair<int, int>, 6> out;
    int n = 0;
    for (int l = 0; l < 27; ++l) {
        if (pairing(lines()[l], r.v) != 1) continue;
        int partner = line_index_of(lines()[l] + r.v);
        if (partner < 0) throw consistency_error("l + r is not a line");
        out[n++] = {l, partner};
    }
    if (n != 6) throw consistency_error("root does not pair +1 with exactly 6 lines");
    return out;
}

Perm27 perm_of_reflection(const Root& r) {
    Perm27 p;
    for (int l = 0; l < 27; ++l) {
        int img = line_index_of(reflect(r, lines()[l]));
        if (img < 0) throw consistency_error("reflection does not permute the lines");
        p[l] = static_cast<uint8_t>(img);
    }
    return p;
}

const std::array<Root, 6>& fundamental_roots() {
    static const std::array<Root, 6> fr = [] {
        std::vector<PicVector> vs;
        for (int i = 1; i <= 5; ++i) vs.push_back(basis_e(i) - basis_e(i + 1));
        vs.push_back(make({1, -1, -1, -1, 0, 0, 0}));
        return std::array<Root, 6>{Root(vs[0]), Root(vs[1]), Root(vs[2]),
                                   Root(vs[3]), Root(vs[4]), Root(vs[5])};
    }();
    return fr;
}

const std::array<std::array<int, 27>, 27>& incidence_matrix() {
    static const auto m = [] {
        std::array<std::array<int, 27>, 27> out{};
        for (int i = 0; i < 27; ++i)
            for (int j = 0; j < 27; ++j)
                out[i][j] = (i != j && pairing(lines()[i], lines()[j]) == 1) ? 1 : 0;
        return out;
    }();
    return m;
}

namespace {

// Fixed change of basis: the lines (a1..a6, c12) span the lattice, with
// h = c12 + a1 + a2. B maps (h,e1..e6)-coordinates of that basis.
struct BasisChange {
    // binv rows: coordinates of (h,e1..e6) in terms of (a1..a6,c12).
    // h = a1 + a2 + c12; e_i = a_i.
    static Mat7 to_lattice(const std::array<PicVector, 7>& images) {
        // coefficient combination: M * h = img_c12 + img_a1 + img_a2, M * e_i = img_a_i
        Mat7 m{};
        for (int row = 0; row < 7; ++row) {
            m[row][0] = static_cast<int64_t>(images[6].c[row] + images[0].c[row] +
                                             images[1].c[row]);
            for (int i = 1; i <= 6; ++i)
                m[row][i] = static_cast<int64_t>(images[i - 1].c[row]);
        }
        return m;
    }
};

}  // namespace

Mat7 lattice_matrix(const Perm27& g) {
    std::array<PicVector, 7> images;
    for (int i = 0; i < 6; ++i) images[i] = lines()[g[i]];  // a1..a6 are indices 0..5
    images[6] = lines()[g[12]];                             // c12 has index 12
    return BasisChange::to_lattice(images);
}

int64_t mat7_trace(const Mat7& m) {
    int64_t t = 0;
    for (int i = 0; i < 7; ++i) t += m[i][i];
    return t;
}

int64_t mat7_det(const Mat7& m) {
    // Bareiss; entries stay tiny for lattice isometries.
    std::array<std::array<int64_t, 7>, 7> a = m;
    int64_t prev = 1, sign = 1;
    for (int k = 0; k < 6; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < 7; ++r)
                if (a[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < 7; ++i)
            for (int j = k + 1; j < 7; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[6][6];
}

std::optional<PicVector> parse_root_alias(const std::string& name) {
    std::string s = name;
    if (s.rfind("alpha", 0) == 0)
        s = s.substr(5);
    else if (s.rfind("a", 0) == 0)
        s = s.substr(1);
    else
        return std::nullopt;
    if (s == "max") return make({2, -1, -1, -1, -1, -1, -1});
    if (s.size() == 2 && std::isdigit(s[0]) && std::isdigit(s[1])) {
        int i = s[0] - '0', j = s[1] - '0';
        if (i < 1 || j < 1 || i > 6 || j > 6 || i == j) return std::nullopt;
        return basis_e(i) - basis_e(j);
    }
    if (s.size() == 3 && std::isdigit(s[0]) && std::isdigit(s[1]) && std::isdigit(s[2])) {
        int i = s[0] - '0', j = s[1] - '0', k = s[2] - '0';
        if (i < 1 || j < 1 || k < 1 || i > 6 || j > 6 || k > 6) return std::nullopt;
        if (i == j || j == k || i == k) return std::nullopt;
        PicVector p;
        p.c[0] = 1;
        p.c[i] = -1;
        p.c[j] = -1;
        p.c[k] = -1;
        return p;
    }
    return std::nullopt;
}

}  // namespace e6
