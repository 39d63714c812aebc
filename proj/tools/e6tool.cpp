#include "e6/cosets.hpp"
#include "e6/glued.hpp"
#include "e6/group.hpp"
#include "e6/hodge.hpp"
#include "e6/output.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace e6;

struct CliOptions {
    std::string format = "markdown";
    std::string cache;
    bool rebuild_cache = false;
    bool no_cache = false;
};

GroupTable load_table(const CliOptions& o) {
    GroupTableOptions g;
    if (!o.cache.empty()) g.cache_path = o.cache;
    g.use_cache = !o.no_cache;
    g.force_rebuild = o.rebuild_cache;
    return GroupTable::build(g);
}

int emit(const OutputDoc& doc, const CliOptions& o) {
    std::cout << doc.render(parse_format(o.format));
    return 0;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

int cmd_group_info(const CliOptions& o) {
    GroupTable t = load_table(o);
    OutputDoc doc;
    doc.kv("order", std::to_string(t.order()));
    doc.kv("classes", "25");
    doc.headers = {"class", "size", "centralizer", "order", "fixed_lines"};
    for (int c = 0; c < 25; ++c) {
        const ClassInfo& ci = t.classes()[c];
        doc.rows.push_back({std::string(kClassNames[c]), std::to_string(ci.size),
                            std::to_string(ci.centralizer),
                            std::to_string(class_order(kClassNames[c])),
                            std::to_string(t.perm_character_27(c))});
    }
    return emit(doc, o);
}

int cmd_chartable(const CliOptions& o, bool verify) {
    GroupTable t = load_table(o);
    OutputDoc doc;
    doc.headers = {"chi", "name"};
    for (int c = 0; c < 25; ++c) doc.headers.push_back(std::string(kClassNames[c]));
    for (int i = 0; i < 25; ++i) {
        std::vector<std::string> row = {std::to_string(i + 1), std::string(kCharNames[i])};
        for (int c = 0; c < 25; ++c) row.push_back(std::to_string(kCharTable[i][c]));
        doc.rows.push_back(std::move(row));
    }
    int rc = 0;
    if (verify) {
        VerifyReport rep = t.verify_character_table();
        doc.kv("verified", yn(rep.ok));
        for (const auto& f : rep.failures) doc.kv("failure", f);
        if (!rep.ok) rc = 1;
    }
    emit(doc, o);
    return rc;
}

int cmd_cosets(const CliOptions& o, const std::string& desc) {
    GroupTable t = load_table(o);
    Subgroup g = subgroup_from_descriptor(t, desc);
    RamificationProfile p = profile(t, g);
    DivisorClass lam = lambda_subgroup(p);
    OutputDoc doc;
    doc.kv("descriptor", g.descriptor);
    doc.kv("subgroup_order", std::to_string(g.order()));
    doc.kv("index", std::to_string(p.d));
    doc.kv("profile", "(" + std::to_string(p.a2c) + "," + std::to_string(p.b2c) + "," +
                          std::to_string(p.a2b) + "," + std::to_string(p.b2b) + "," +
                          std::to_string(p.a3b) + "," + std::to_string(p.b3b) + ")");
    doc.kv("genus", std::to_string(genus(p)));
    doc.kv("lambda", divisor_str(lam));
    return emit(doc, o);
}

int cmd_table1(const CliOptions& o, bool check) {
    GroupTable t = load_table(o);
    Table1 t1 = solve_table1(t);
    OutputDoc doc;
    doc.kv("det_mult_matrix", mult_matrix_det(t1.mult).str());
    doc.headers = {"chi", "name", "rank", "D0", "Dsyz", "Dazy", "a2c", "a2b", "a3b"};
    for (int i = 0; i < 25; ++i) {
        const Table1Row& r = t1.rows[i];
        doc.rows.push_back({std::to_string(i + 1), r.name, std::to_string(r.rank),
                            rat_str(r.lam.d0), rat_str(r.lam.dsyz), rat_str(r.lam.dazy),
                            std::to_string(r.a2c), std::to_string(r.a2b),
                            std::to_string(r.a3b)});
    }
    int rc = 0;
    if (check) {
        auto diffs = diff_table1(t1.rows);
        VerifyReport ids = identity_suite(t, t1);
        bool ok = diffs.empty() && ids.ok;
        doc.kv("check", ok ? "pass" : "fail");
        for (const auto& d : diffs) doc.kv("diff", d);
        for (const auto& f : ids.failures) doc.kv("identity_failure", f);
        if (!ok) rc = 1;
    }
    emit(doc, o);
    return rc;
}

GluingSpec load_spec(const std::string& source) {
    if (source == "default") return default_spec();
    std::ifstream f(source);
    if (!f) throw input_error("cannot open spec file: " + source);
    std::stringstream buf;
    buf << f.rdbuf();
    return spec_from_json(buf.str());
}

int cmd_glued_build(const CliOptions& o, const std::string& source) {
    GluingSpec spec = load_spec(source);
    NodalCover cover = build(spec);
    OutputDoc doc;
    doc.kv("branch_points", std::to_string(spec.points.size()));
    doc.kv("nodes", std::to_string(cover.nodes.size()));
    doc.kv("components", "27");
    doc.kv("connected", yn(cover.connected));
    doc.kv("genus", std::to_string(cover.arithmetic_genus()));
    doc.kv("monodromy_full", yn(monodromy_full(spec)));
    doc.headers = {"component", "line", "nodes"};
    for (int i = 0; i < 27; ++i)
        doc.rows.push_back(
            {std::to_string(i), line_name(i), std::to_string(cover.node_count(i))});
    return emit(doc, o);
}

int cmd_glued_verify(const CliOptions& o, const std::string& source) {
    GluingSpec spec = load_spec(source);
    TheoremReport r = theorem_check(spec);
    OutputDoc doc;
    if (r.refused) {
        doc.kv("refused", r.refusal_reason);
        emit(doc, o);
        return 1;
    }
    doc.kv("nodes", std::to_string(r.nodes));
    doc.kv("connected", yn(r.connected));
    doc.kv("genus", std::to_string(r.genus));
    doc.kv("h0_L", std::to_string(r.h0_L));
    doc.kv("h0_omega", std::to_string(r.h0_omega));
    doc.kv("h0_omega_minus_L", std::to_string(r.h0_omega_minus_L));
    doc.kv("h0_omega2", std::to_string(r.h0_omega2));
    doc.kv("h0_2omega_minus_5L", std::to_string(r.h0_2omega_minus_5L));
    doc.headers = {"part", "statement", "value", "pass"};
    doc.rows.push_back({"1", "h0(L) = 2", std::to_string(r.h0_L), yn(r.part1)});
    doc.rows.push_back({"2", "mult image dim 40 inside (+1)",
                        std::to_string(r.mult_image_dim) + "/" + yn(r.mult_image_in_plus1),
                        yn(r.part2)});
    doc.rows.push_back(
        {"3", "h0(2w-5L) = 0", std::to_string(r.h0_2omega_minus_5L), yn(r.part3)});
    doc.rows.push_back({"4", "(-5)-space dim 6, base point free",
                        std::to_string(r.dim_minus5) + "/" + yn(r.bpf), yn(r.part4)});
    doc.rows.push_back(
        {"5", "Sym2 rank 21 (no quadric)", std::to_string(r.sym2_rank), yn(r.part5)});
    doc.rows.push_back({"5.4", "generic vanishing h0(2w-5L) = 0",
                        std::to_string(r.h0_2omega_minus_5L), yn(r.thm_5_4)});
    doc.kv("eigenspace_dims", std::to_string(r.dim_minus5) + "+" +
                                  std::to_string(r.dim_plus1) + " (intersection " +
                                  std::to_string(r.dim_intersection) + ")");
    doc.kv("all_pass", yn(r.all_pass()));
    emit(doc, o);
    return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for W(E6) covers: group data, coset "
                 "profiles, Hodge classes, glued-cover verification"};
    app.require_subcommand(1);
    CliOptions opts;
    app.add_option("--format", opts.format, "Output format: json, csv, markdown")
        ->default_val("markdown");
    app.add_option("--cache", opts.cache, "Group-table cache file path");
    app.add_flag("--rebuild-cache", opts.rebuild_cache, "Force a cache rebuild");
    app.add_flag("--no-cache", opts.no_cache, "Do not read or write the cache");

    app.fallthrough();  // global flags may follow a subcommand

    auto* info = app.add_subcommand("group-info", "Order, classes, centralizers");
    auto* chart = app.add_subcommand("chartable", "Character table of W(E6)");
    bool verify = false;
    chart->add_flag("--verify", verify, "Run the orthogonality and power-map checks");
    auto* cosets = app.add_subcommand("cosets", "Profile, genus and Hodge class of a coset action");
    std::string desc;
    cosets->add_option("descriptor", desc,
                       "g27 | g36 | g45 | cyclic:<class> | centralizer:<class> | "
                       "stab_line:<line> | JSON descriptor")
        ->required();
    auto* table1 = app.add_subcommand("table1", "The 25 fundamental Hodge classes");
    bool check = false;
    table1->add_flag("--check", check, "Diff against the embedded golden table");
    auto* glued = app.add_subcommand("glued", "Glued nodal cover");
    glued->require_subcommand(1);
    std::string spec_source = "default";
    auto* gbuild = glued->add_subcommand("build", "Build the cover, print graph stats");
    auto* gverify = glued->add_subcommand("verify", "Run the five-part verification");
    for (auto* sc : {gbuild, gverify})
        sc->add_option("--spec", spec_source, "'default' or a roots JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return cmd_group_info(opts);
        if (chart->parsed()) return cmd_chartable(opts, verify);
        if (cosets->parsed()) return cmd_cosets(opts, desc);
        if (table1->parsed()) return cmd_table1(opts, check);
        if (glued->parsed()) {
            if (gbuild->parsed()) return cmd_glued_build(opts, spec_source);
            return cmd_glued_verify(opts, spec_source);
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
