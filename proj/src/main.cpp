/**
 * finspace — batch command-line front end.
 *
 * Subcommands: enumerate, classify, verify-types, verify-collapse,
 * homology, core, dual.  Exit status 0 means every requested assertion
 * passed; 1 means an assertion failed (first failing check is named);
 * 2 means a usage, IO, or library error.  Output is byte-stable for
 * fixed inputs and flags, independent of --jobs.
 */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "finspace/classify.hpp"
#include "finspace/collapse.hpp"
#include "finspace/complex.hpp"
#include "finspace/fixtures.hpp"
#include "finspace/homology.hpp"
#include "finspace/io.hpp"
#include "finspace/structure.hpp"

namespace {

using namespace finspace;

EnumOptions make_enum_options(int jobs) {
    EnumOptions opts;
    opts.jobs = jobs;
    if (const char* cap = std::getenv("FINSPACE_MAX_MEM")) {
        opts.max_mem_bytes = std::strtoull(cap, nullptr, 10);
    }
    return opts;
}

/** Writes to the --out path when given, else to stdout. */
class OutSink {
  public:
    explicit OutSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw IoError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string join_ints(const std::vector<int>& v) {
    if (v.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string compact_profile(const HomologyProfile& h) {
    std::string betti, torsion;
    for (std::size_t k = 0; k < h.betti.size(); ++k) {
        if (k) betti += ',';
        betti += std::to_string(h.betti[k]);
        for (const auto& d : h.torsion[k]) {
            if (!torsion.empty()) torsion += ',';
            torsion += std::to_string(k) + ':' + d.str();
        }
    }
    if (torsion.empty()) torsion = "-";
    return "betti=" + betti + " torsion=" + torsion;
}

int cmd_enumerate(int n, const std::string& out_path, int jobs) {
    EnumOptions opts = make_enum_options(jobs);
    std::uint64_t count;
    if (out_path.empty()) {
        count = enumerate_posets(n, nullptr, opts);
    } else {
        std::vector<CanonicalForm> forms;
        count = enumerate_posets(
            n, [&](const Poset& p) { forms.push_back(canonical_form(p)); }, opts);
        std::sort(forms.begin(), forms.end());
        OutSink sink(out_path);
        for (const CanonicalForm& c : forms) {
            write_poset(sink.stream(), poset_from_canonical(c));
            sink.stream() << "\n";
        }
    }
    std::cout << count << "\n";
    return 0;
}

int cmd_classify(int n, const std::string& out_path, int jobs, const std::string& format) {
    auto [stats, records] = classify(n, make_enum_options(jobs));
    OutSink sink(out_path);
    std::ostream& os = sink.stream();
    os << "census n=" << stats.n << " total=" << stats.total << " minimal=" << stats.minimal
       << " survivors=" << stats.survivors << "\n";
    if (format == "table") {
        os << "\n|B| survivors\n";
        int max_row = stats.n == 10 ? 4 : 0;
        for (const auto& [r, c] : stats.by_middle) max_row = std::max(max_row, r);
        std::uint64_t total = 0;
        for (int r = 1; r <= max_row; ++r) {
            auto it = stats.by_middle.find(r);
            std::uint64_t c = it == stats.by_middle.end() ? 0 : it->second;
            os << r << " " << c << "\n";
            total += c;
        }
        os << "Total " << total << "\n";
    } else {
        for (const ClassificationRecord& r : records) {
            os << "record canon=" << r.canon.hex() << " layers=" << r.layer_vector[0] << ','
               << r.layer_vector[1] << ',' << r.layer_vector[2] << " height=" << r.height
               << " antichain_B=" << (r.antichain_B ? 1 : 0) << " D=" << r.D
               << " beta=" << join_ints(r.beta_multiset) << " alpha=" << join_ints(r.alpha_multiset)
               << " s=" << join_ints(r.s_multiset) << " t=" << join_ints(r.t_multiset) << " "
               << compact_profile(r.profile) << " type=" << type_name(r.matched_type)
               << " dual=" << r.dual_canon.hex() << " self_dual=" << (r.self_dual ? 1 : 0)
               << " greedy=" << (r.greedy_collapsed ? 1 : 0) << " steps=" << r.collapse_steps
               << "\n";
        }
    }
    return 0;
}

struct CheckFailure {
    std::string message;
};

void require(bool ok, const std::string& label, const std::string& check) {
    if (!ok) throw CheckFailure{label + ": " + check};
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

int cmd_verify_types(unsigned seed) {
    // Published ten-point invariants, keyed by type label.
    struct Expected {
        TypeLabel label;
        std::array<int, 3> layers;
        std::vector<int> alpha;  // sorted; empty = not asserted
        std::vector<int> s, t;   // sorted; empty = not asserted
    };
    const std::vector<Expected> expected = {
        {TypeLabel::I, {3, 3, 4}, {2, 3, 4}, {}, {}},
        {TypeLabel::II, {3, 3, 4}, {3, 3, 3}, {}, {}},
        {TypeLabel::III, {3, 3, 4}, {2, 3, 3}, {}, {}},
        {TypeLabel::IV, {3, 4, 3}, {}, {2, 2, 4}, {2, 2, 4}},
        {TypeLabel::V, {3, 4, 3}, {}, {2, 2, 4}, {2, 3, 3}},
        {TypeLabel::VI, {3, 4, 3}, {}, {2, 3, 3}, {2, 2, 4}},
        {TypeLabel::VII, {3, 4, 3}, {}, {2, 3, 3}, {2, 3, 3}},
        {TypeLabel::Iop, {4, 3, 3}, {}, {}, {}},
        {TypeLabel::IIop, {4, 3, 3}, {}, {}, {}},
        {TypeLabel::IIIop, {4, 3, 3}, {}, {}, {}},
    };
    try {
        std::vector<Fixture> fixtures = builtin_fixtures();
        require(fixtures.size() == 10, "fixtures", "exactly ten built-in types");
        std::mt19937 rng(seed);
        for (std::size_t i = 0; i < fixtures.size(); ++i) {
            const Fixture& f = fixtures[i];
            const Expected& e = expected[i];
            const std::string label = type_name(f.label);
            require(f.label == e.label, label, "fixture order matches type order");
            require(is_minimal_space(f.poset), label, "minimal (no beat points)");
            require(is_homotopically_trivial(f.poset), label, "homotopically trivial");
            require(!is_contractible(f.poset), label, "non-contractible");
            require(height(f.poset) == 2, label, "height 2");
            LevelData d = levels(f.poset);
            require(d.E_B.empty(), label, "middle layer is an antichain");
            require(d.D == 0, label, "zero naked-edge budget");
            require(std::array<int, 3>{d.m, d.r, d.n} == e.layers, label, "layer vector");
            if (!e.alpha.empty()) require(sorted(d.alpha) == e.alpha, label, "alpha multiset");
            if (!e.s.empty()) require(sorted(d.s) == e.s, label, "s multiset");
            if (!e.t.empty()) require(sorted(d.t) == e.t, label, "t multiset");
            // Adding a top point above everything makes the space
            // contractible; the core must reach one point under any
            // removal order.
            std::vector<std::pair<int, int>> covers = cover_pairs(f.poset);
            for (int v : mask_elements(maximal_elements(f.poset))) covers.emplace_back(v, 10);
            Poset coned = from_covers(11, covers);
            for (int round = 0; round < 5; ++round) {
                Poset c = core(coned, [&](const std::vector<int>& beats) {
                    return beats[rng() % beats.size()];
                });
                require(c.n == 1, label, "coned fixture cores to a point");
            }
        }
        // Duality pairing among the ten types.
        auto canon_of = [&](TypeLabel t) { return canonical_form(type_poset(t)); };
        auto dual_of = [&](TypeLabel t) { return canonical_form(dual(type_poset(t))); };
        require(dual_of(TypeLabel::IV) == canon_of(TypeLabel::IV), "IV", "self-dual");
        require(dual_of(TypeLabel::VII) == canon_of(TypeLabel::VII), "VII", "self-dual");
        require(dual_of(TypeLabel::V) == canon_of(TypeLabel::VI), "V", "dual to VI");
        require(dual_of(TypeLabel::VI) == canon_of(TypeLabel::V), "VI", "dual to V");
        for (auto [prim, op] : {std::pair{TypeLabel::I, TypeLabel::Iop},
                                {TypeLabel::II, TypeLabel::IIop},
                                {TypeLabel::III, TypeLabel::IIIop}}) {
            require(dual_of(prim) == canon_of(op), type_name(prim), "dual to its ^op fixture");
        }
        // The ten canonical forms must be pairwise distinct, and each
        // must match back to its own label.
        std::vector<ClassificationRecord> recs(fixtures.size());
        for (std::size_t i = 0; i < fixtures.size(); ++i) {
            recs[i].canon = canonical_form(fixtures[i].poset);
        }
        for (std::size_t i = 0; i < recs.size(); ++i) {
            for (std::size_t j = i + 1; j < recs.size(); ++j) {
                require(!(recs[i].canon == recs[j].canon), "fixtures",
                        type_name(fixtures[i].label) + " and " + type_name(fixtures[j].label) +
                            " are non-isomorphic");
            }
        }
        match_types(recs);
        for (std::size_t i = 0; i < recs.size(); ++i) {
            require(recs[i].matched_type == fixtures[i].label, type_name(fixtures[i].label),
                    "matches its own label");
        }
    } catch (const CheckFailure& f) {
        std::cout << "FAIL " << f.message << "\n";
        return 1;
    }
    std::cout << "verify-types: all 10 fixtures pass (seed " << seed << ")\n";
    return 0;
}

int cmd_verify_collapse(const std::string& type_str, const std::string& in_path,
                        const std::string& cert_path) {
    Poset p;
    std::vector<CollapseStep> steps;
    if (!type_str.empty()) {
        TypeLabel label;
        if (type_str == "I") label = TypeLabel::I;
        else if (type_str == "II") label = TypeLabel::II;
        else if (type_str == "III") label = TypeLabel::III;
        else if (type_str == "IV") label = TypeLabel::IV;
        else if (type_str == "V") label = TypeLabel::V;
        else if (type_str == "VI") label = TypeLabel::VI;
        else if (type_str == "VII") label = TypeLabel::VII;
        else throw IoError("unknown --type: " + type_str + " (expected I..VII)");
        p = type_poset(label);
        steps = builtin_certificate(label);
    } else {
        if (in_path.empty() || cert_path.empty()) {
            throw IoError("verify-collapse needs --type, or both --in and --cert");
        }
        p = read_poset_file(in_path);
        steps = parse_certificate_file(cert_path);
    }
    try {
        CollapseOutcome out = verify_certificate(p, steps);
        std::cout << "steps " << out.steps_taken.size() << "\n";
        std::cout << "residual-tree-edges " << out.tree_edges.size() << "\n";
        std::cout << "success\n";
        return 0;
    } catch (const Error& e) {
        std::cout << "FAIL " << e.what() << "\n";
        return 1;
    }
}

int cmd_homology(const std::string& in_path) {
    Poset p = read_poset_file(in_path);
    std::cout << to_string(homology(order_complex(p)));
    return 0;
}

int cmd_core(const std::string& in_path, const std::string& out_path) {
    Poset p = read_poset_file(in_path);
    OutSink sink(out_path);
    write_poset(sink.stream(), core(p));
    return 0;
}

int cmd_dual(const std::string& in_path, const std::string& out_path) {
    Poset p = read_poset_file(in_path);
    OutSink sink(out_path);
    write_poset(sink.stream(), dual(p));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite T0-space toolkit: enumeration, minimality, homology, collapses"};
    app.require_subcommand(1);

    int n = 0;
    std::string in_path, out_path, format = "table", type_str, cert_path;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    unsigned seed = 20100; /* fixed default; see --seed */
    int backtrack_depth = 0;

    CLI::App* enumerate = app.add_subcommand("enumerate", "count poset isomorphism classes");
    enumerate->add_option("--n", n, "number of points")->required();
    enumerate->add_option("--out", out_path, "write the representatives (text format)");
    enumerate->add_option("--jobs", jobs, "worker threads");

    CLI::App* classify_cmd = app.add_subcommand("classify", "run the full census pipeline");
    classify_cmd->add_option("--n", n, "number of points")->required();
    classify_cmd->add_option("--out", out_path, "write the report to a file");
    classify_cmd->add_option("--jobs", jobs, "worker threads");
    classify_cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"table", "records"}));

    CLI::App* verify_types = app.add_subcommand("verify-types", "check the built-in fixtures");
    verify_types->add_option("--seed", seed, "seed for the randomized core-order check");

    CLI::App* verify_collapse = app.add_subcommand("verify-collapse", "replay a certificate");
    verify_collapse->add_option("--type", type_str, "built-in fixture I..VII");
    verify_collapse->add_option("--in", in_path, "poset file");
    verify_collapse->add_option("--cert", cert_path, "certificate file");
    verify_collapse->add_option("--backtrack-depth", backtrack_depth,
                                "greedy search depth (reserved for searches, not replays)");

    CLI::App* homology_cmd = app.add_subcommand("homology", "integral homology of the order complex");
    homology_cmd->add_option("--in", in_path, "poset file")->required();

    CLI::App* core_cmd = app.add_subcommand("core", "remove beat points until none remain");
    core_cmd->add_option("--in", in_path, "poset file")->required();
    core_cmd->add_option("--out", out_path, "output poset file");

    CLI::App* dual_cmd = app.add_subcommand("dual", "opposite order");
    dual_cmd->add_option("--in", in_path, "poset file")->required();
    dual_cmd->add_option("--out", out_path, "output poset file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints the message or the help text
        return rc == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(n, out_path, jobs);
        if (classify_cmd->parsed()) return cmd_classify(n, out_path, jobs, format);
        if (verify_types->parsed()) return cmd_verify_types(seed);
        if (verify_collapse->parsed()) return cmd_verify_collapse(type_str, in_path, cert_path);
        if (homology_cmd->parsed()) return cmd_homology(in_path);
        if (core_cmd->parsed()) return cmd_core(in_path, out_path);
        if (dual_cmd->parsed()) return cmd_dual(in_path, out_path);
    } catch (const finspace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
