#pragma once

#include "e6/chartable.hpp"
#include "e6/lattice.hpp"
#include "e6/perm.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace e6 {

struct ClassInfo {
    long size = 0;
    long centralizer = 0;
    int representative = -1;  // least element index in the class
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

struct GroupTableOptions {
    std::optional<std::filesystem::path> cache_path;
    bool use_cache = true;
    bool force_rebuild = false;
};

// The full Weyl group W(E6) as permutations of the 27 lines, generated by
// the six fundamental reflections and indexed in lexicographic order of the
// one-line notation (so the identity is element 0). Immutable once built.
class GroupTable {
  public:
    static GroupTable build(const GroupTableOptions& opts = {});
    static const GroupTable& shared();

    long order() const { return static_cast<long>(elems_.size()); }
    const Perm27& perm(int i) const { return elems_[i]; }
    int index_of(const Perm27& p) const;
    int mul(int a, int b) const { return index_of(perm_compose(elems_[a], elems_[b])); }
    int inv(int a) const { return index_of(perm_inverse(elems_[a])); }
    int identity() const { return 0; }

    // Conjugacy class (index into kClassNames) of a table element.
    int class_of(int elem) const { return class_of_[elem]; }
    // Classification by the invariant key (order, det, trace, fixed lines).
    int classify(const Perm27& g) const;
    const std::array<ClassInfo, 25>& classes() const { return classes_; }
    int representative(int cls) const { return classes_[cls].representative; }

    static int char_index(const std::string& name);   // throws input_error
    static int class_index(const std::string& name);  // throws input_error
    int character(int chi, int cls) const;
    int character(const std::string& chi, const std::string& cls) const;

    // Number of lines fixed by the class representative.
    int perm_character_27(int cls) const;

    // Orthogonality relations, degree sum, and power-map consistency for the
    // given table (defaults to the embedded one; override to inject faults).
    VerifyReport verify_character_table(
        const std::array<std::array<int, 25>, 25>& table = kCharTable) const;

    bool loaded_from_cache() const { return from_cache_; }
    static std::filesystem::path default_cache_path();

  private:
    std::vector<Perm27> elems_;
    std::unordered_map<Perm27, int, PermHash> index_;
    std::vector<uint8_t> class_of_;
    std::array<ClassInfo, 25> classes_{};
    bool from_cache_ = false;

    void generate();
    void assign_classes();
    bool load_cache(const std::filesystem::path& p);
    void save_cache(const std::filesystem::path& p) const;
};

// The classification key of a class: (element order, det of the 7x7 lattice
// matrix, its trace minus 1, fixed lines). Pairwise distinct over the 25
// classes; asserted when the table is built.
struct ClassKey {
    int order;
    int det;
    int trace;
    int fixed;
    auto operator<=>(const ClassKey&) const = default;
};

ClassKey class_key_of(const Perm27& g);
ClassKey expected_class_key(int cls);

}  // namespace e6
