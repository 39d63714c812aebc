#include "e6/group.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <fstream>
#include <map>

namespace e6 {

namespace {

constexpr uint32_t kCacheVersion = 1;
constexpr char kCacheMagic[4] = {'E', '6', 'G', 'T'};
constexpr long kOrder = 51840;

uint64_t fnv64(const unsigned char* data, size_t n) {
    uint64_t h = 1469598103934665603ULL;
    for (size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ULL;
    }
    return h;
}

const std::map<ClassKey, int>& key_table() {
    static const std::map<ClassKey, int> t = [] {
        std::map<ClassKey, int> m;
        for (int c = 0; c < 25; ++c) {
            auto [it, fresh] = m.emplace(expected_class_key(c), c);
            if (!fresh) throw consistency_error("classification keys not distinct");
        }
        return m;
    }();
    return t;
}

}  // namespace

ClassKey class_key_of(const Perm27& g) {
    Mat7 m = lattice_matrix(g);
    return ClassKey{perm_order(g), static_cast<int>(mat7_det(m)),
                    static_cast<int>(mat7_trace(m)) - 1, perm_fixed_points(g)};
}

ClassKey expected_class_key(int cls) {
    return ClassKey{class_order(kClassNames[cls]), kCharTable[kCharIdx1Bar][cls],
                    kCharTable[kCharIdx6][cls],
                    kCharTable[kCharIdx1][cls] + kCharTable[kCharIdx6][cls] +
                        kCharTable[kCharIdx20b][cls]};
}

int GroupTable::index_of(const Perm27& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

void GroupTable::generate() {
    std::vector<Perm27> gens;
    for (const Root& r : fundamental_roots()) gens.push_back(perm_of_reflection(r));

    std::unordered_map<Perm27, int, PermHash> seen;
    seen.reserve(2 * kOrder);
    std::deque<Perm27> queue;
    seen.emplace(perm_identity(), 0);
    queue.push_back(perm_identity());
    while (!queue.empty()) {
        Perm27 x = queue.front();
        queue.pop_front();
        for (const Perm27& g : gens) {
            Perm27 y = perm_compose(g, x);
            if (seen.emplace(y, 0).second) {
                if (static_cast<long>(seen.size()) > kOrder)
                    throw consistency_error("reflection closure exceeds 51840");
                queue.push_back(y);
            }
        }
    }
    if (static_cast<long>(seen.size()) != kOrder)
        throw consistency_error("reflection closure has wrong order");

    elems_.reserve(kOrder);
    for (const auto& [p, _] : seen) elems_.push_back(p);
    std::sort(elems_.begin(), elems_.end());
    index_.reserve(2 * kOrder);
    for (int i = 0; i < kOrder; ++i) index_.emplace(elems_[i], i);
}

void GroupTable::assign_classes() {
    std::vector<Perm27> gens, gens_inv;
    for (const Root& r : fundamental_roots()) {
        gens.push_back(perm_of_reflection(r));
        gens_inv.push_back(perm_inverse(gens.back()));
    }

    // Conjugation orbits under the generators.
    std::vector<int> orbit_of(kOrder, -1);
    std::vector<int> orbit_rep;
    for (int i = 0; i < kOrder; ++i) {
        if (orbit_of[i] >= 0) continue;
        int oid = static_cast<int>(orbit_rep.size());
        orbit_rep.push_back(i);
        orbit_of[i] = oid;
        std::deque<int> queue{i};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (size_t k = 0; k < gens.size(); ++k) {
                Perm27 y = perm_compose(gens[k], perm_compose(elems_[x], gens_inv[k]));
                int yi = index_.at(y);
                if (orbit_of[yi] < 0) {
                    orbit_of[yi] = oid;
                    queue.push_back(yi);
                }
            }
        }
    }
    if (orbit_rep.size() != 25) throw consistency_error("expected 25 conjugacy classes");

    std::array<int, 25> atlas_of{};
    std::array<bool, 25> used{};
    for (int oid = 0; oid < 25; ++oid) {
        auto it = key_table().find(class_key_of(elems_[orbit_rep[oid]]));
        if (it == key_table().end())
            throw consistency_error("class key not in the embedded table");
        if (used[it->second]) throw consistency_error("two classes share a key");
        used[it->second] = true;
        atlas_of[oid] = it->second;
    }

    class_of_.assign(kOrder, 0);
    for (int i = 0; i < kOrder; ++i)
        class_of_[i] = static_cast<uint8_t>(atlas_of[orbit_of[i]]);
    for (int c = 0; c < 25; ++c) classes_[c] = ClassInfo{};
    for (int i = 0; i < kOrder; ++i) {
        ClassInfo& ci = classes_[class_of_[i]];
        ++ci.size;
        if (ci.representative < 0) ci.representative = i;
    }
    long total = 0;
    for (int c = 0; c < 25; ++c) {
        if (classes_[c].size == 0 || kOrder % classes_[c].size != 0)
            throw consistency_error("bad class size");
        classes_[c].centralizer = kOrder / classes_[c].size;
        total += classes_[c].size;
    }
    if (total != kOrder) throw consistency_error("class sizes do not sum to 51840");
}

int GroupTable::classify(const Perm27& g) const {
    auto it = key_table().find(class_key_of(g));
    if (it == key_table().end())
        throw consistency_error("element key matches no conjugacy class");
    return it->second;
}

int GroupTable::char_index(const std::string& name) {
    std::string n = name;
    auto pos = n.find("bar");
    if (pos != std::string::npos && pos + 3 == n.size()) n = n.substr(0, pos) + "~";
    for (int i = 0; i < 25; ++i)
        if (kCharNames[i] == n) return i;
    throw input_error("unknown character name: " + name);
}

int GroupTable::class_index(const std::string& name) {
    for (int i = 0; i < 25; ++i)
        if (kClassNames[i] == name) return i;
    throw input_error("unknown class name: " + name);
}

int GroupTable::character(int chi, int cls) const {
    if (chi < 0 || chi >= 25 || cls < 0 || cls >= 25)
        throw input_error("character/class index out of range");
    return kCharTable[chi][cls];
}

int GroupTable::character(const std::string& chi, const std::string& cls) const {
    return character(char_index(chi), class_index(cls));
}

int GroupTable::perm_character_27(int cls) const {
    return perm_fixed_points(elems_[classes_[cls].representative]);
}

VerifyReport GroupTable::verify_character_table(
    const std::array<std::array<int, 25>, 25>& table) const {
    VerifyReport rep;
    long degsum = 0;
    for (int i = 0; i < 25; ++i) degsum += static_cast<long>(table[i][0]) * table[i][0];
    if (degsum != order())
        rep.fail("sum of squared degrees is " + std::to_string(degsum) + ", want 51840");

    for (int i = 0; i < 25; ++i)
        for (int j = i; j < 25; ++j) {
            long s = 0;
            for (int c = 0; c < 25; ++c)
                s += classes_[c].size * static_cast<long>(table[i][c]) * table[j][c];
            long want = (i == j) ? order() : 0;
            if (s != want)
                rep.fail("row orthogonality (" + std::string(kCharNames[i]) + "," +
                         std::string(kCharNames[j]) + ") = " + std::to_string(s));
        }
    for (int c = 0; c < 25; ++c)
        for (int cp = c; cp < 25; ++cp) {
            long s = 0;
            for (int i = 0; i < 25; ++i)
                s += static_cast<long>(table[i][c]) * table[i][cp];
            long want = (c == cp) ? classes_[c].centralizer : 0;
            if (s != want)
                rep.fail("column orthogonality (" + std::string(kClassNames[c]) + "," +
                         std::string(kClassNames[cp]) + ") = " + std::to_string(s));
        }

    // Power-map consistency: powers of each representative land in classes
    // whose permutation traces agree with the table's 1+6+20b column.
    for (int c = 0; c < 25; ++c) {
        Perm27 w = elems_[classes_[c].representative];
        Perm27 x = w;
        for (int k = 2; k <= perm_order(w); ++k) {
            x = perm_compose(w, x);
            int pc = classify(x);
            int fix = perm_fixed_points(x);
            if (fix != table[kCharIdx1][pc] + table[kCharIdx6][pc] + table[kCharIdx20b][pc])
                rep.fail("power map: " + std::string(kClassNames[c]) + "^" +
                         std::to_string(k) + " inconsistent at class " +
                         std::string(kClassNames[pc]));
        }
    }
    return rep;
}

std::filesystem::path GroupTable::default_cache_path() {
    if (const char* env = std::getenv("E6_CACHE")) return std::filesystem::path(env);
    return std::filesystem::temp_directory_path() /
           ("e6_group_table_v" + std::to_string(kCacheVersion) + ".bin");
}

bool GroupTable::load_cache(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) return false;
    f.seekg(0, std::ios::end);
    auto len = static_cast<size_t>(f.tellg());
    f.seekg(0);
    std::vector<unsigned char> buf(len);
    if (!f.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(len)))
        return false;

    size_t body = 4 + 4 + 4 + kOrder * 27 + kOrder + 25 * 8;
    if (len != body + 8) return false;
    if (std::memcmp(buf.data(), kCacheMagic, 4) != 0) return false;
    uint32_t version, count;
    std::memcpy(&version, buf.data() + 4, 4);
    std::memcpy(&count, buf.data() + 8, 4);
    if (version != kCacheVersion || count != kOrder) return false;
    uint64_t sum;
    std::memcpy(&sum, buf.data() + body, 8);
    if (sum != fnv64(buf.data(), body)) return false;

    size_t off = 12;
    elems_.resize(kOrder);
    for (int i = 0; i < kOrder; ++i) {
        std::memcpy(elems_[i].data(), buf.data() + off, 27);
        off += 27;
    }
    class_of_.assign(buf.data() + off, buf.data() + off + kOrder);
    off += kOrder;
    for (int c = 0; c < 25; ++c) {
        uint32_t sz, rp;
        std::memcpy(&sz, buf.data() + off, 4);
        std::memcpy(&rp, buf.data() + off + 4, 4);
        off += 8;
        classes_[c] = ClassInfo{sz, kOrder / sz, static_cast<int>(rp)};
    }
    if (elems_[0] != perm_identity()) return false;
    index_.reserve(2 * kOrder);
    for (int i = 0; i < kOrder; ++i) index_.emplace(elems_[i], i);
    return true;
}

void GroupTable::save_cache(const std::filesystem::path& p) const {
    std::vector<unsigned char> buf;
    buf.reserve(4 + 4 + 4 + kOrder * 28 + 25 * 8 + 8);
    auto push = [&buf](const void* data, size_t n) {
        const auto* b = static_cast<const unsigned char*>(data);
        buf.insert(buf.end(), b, b + n);
    };
    push(kCacheMagic, 4);
    uint32_t version = kCacheVersion, count = kOrder;
    push(&version, 4);
    push(&count, 4);
    for (const Perm27& g : elems_) push(g.data(), 27);
    push(class_of_.data(), class_of_.size());
    for (int c = 0; c < 25; ++c) {
        uint32_t sz = static_cast<uint32_t>(classes_[c].size);
        uint32_t rp = static_cast<uint32_t>(classes_[c].representative);
        push(&sz, 4);
        push(&rp, 4);
    }
    uint64_t sum = fnv64(buf.data(), buf.size());
    push(&sum, 8);

    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    auto tmp = p;
    tmp += ".tmp" + std::to_string(static_cast<unsigned>(::getpid()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) return;  // cache is best-effort
        f.write(reinterpret_cast<const char*>(buf.data()),
                static_cast<std::streamsize>(buf.size()));
    }
    std::filesystem::rename(tmp, p, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

GroupTable GroupTable::build(const GroupTableOptions& opts) {
    GroupTable t;
    auto path = opts.cache_path.value_or(default_cache_path());
    if (opts.use_cache && !opts.force_rebuild && t.load_cache(path)) {
        t.from_cache_ = true;
        return t;
    }
    t.generate();
    t.assign_classes();
    if (opts.use_cache) t.save_cache(path);
    return t;
}

const GroupTable& GroupTable::shared() {
    static const GroupTable t = build();
    return t;
}

}  // namespace e6
