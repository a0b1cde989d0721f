#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "finspace/collapse.hpp"
#include "finspace/fixtures.hpp"
#include "finspace/io.hpp"

using namespace finspace;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

/** Runs the installed CLI (path from FINSPACE_CLI) capturing stdout+stderr. */
RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("FINSPACE_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "FINSPACE_CLI must point at the built binary");
    RunResult r;
    std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string data_path(const std::string& rel) {
    const char* data = std::getenv("FINSPACE_DATA");
    REQUIRE_MESSAGE(data != nullptr, "FINSPACE_DATA must point at the data directory");
    return std::string(data) + "/" + rel;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("enumerate prints the class count") {
    RunResult r = run_cli("enumerate --n 4");
    CHECK(r.status == 0);
    CHECK(r.out == "16\n");
    CHECK(run_cli("enumerate --n 0").out == "1\n");
}

TEST_CASE("classify renders the census table") {
    RunResult r = run_cli("classify --n 5 --format table");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "census n=5 total=63 minimal="));
    CHECK(contains(r.out, "survivors=0"));
    CHECK(contains(r.out, "Total 0"));
}

TEST_CASE("classify records format lists one line per survivor") {
    RunResult r = run_cli("classify --n 6 --format records");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "census n=6 total=318"));
    CHECK(!contains(r.out, "record "));  // no survivors below seven points
}

TEST_CASE("verify-collapse replays a built-in certificate") {
    RunResult r = run_cli("verify-collapse --type I");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "steps 27"));
    CHECK(contains(r.out, "success"));
    CHECK(run_cli("verify-collapse --type IV").out ==
          "steps 25\nresidual-tree-edges 9\nsuccess\n");
    CHECK(run_cli("verify-collapse --type VIII").status == 2);
}

TEST_CASE("verify-collapse accepts file input") {
    RunResult r = run_cli("verify-collapse --in " + data_path("posets/type_III.poset") +
                          " --cert " + data_path("certificates/type_III.collapse"));
    CHECK(r.status == 0);
    CHECK(contains(r.out, "success"));
    // A certificate against the wrong poset names its first bad step.
    RunResult bad = run_cli("verify-collapse --in " + data_path("posets/type_II.poset") +
                            " --cert " + data_path("certificates/type_I.collapse"));
    CHECK(bad.status == 1);
    CHECK(contains(bad.out, "FAIL"));
    CHECK(contains(bad.out, "step 1"));
}

TEST_CASE("homology prints the profile") {
    RunResult r = run_cli("homology --in " + data_path("posets/point.poset"));
    CHECK(r.status == 0);
    CHECK(r.out == "H0: Z^1\n");
    RunResult h3 = run_cli("homology --in " + data_path("posets/witness_h3.poset"));
    CHECK(h3.status == 0);
    CHECK(contains(h3.out, "H3: Z^"));
    CHECK(run_cli("homology --in missing.poset").status == 2);
}

TEST_CASE("verify-types passes on the shipped fixtures") {
    RunResult r = run_cli("verify-types");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "all 10 fixtures pass"));
    CHECK(contains(run_cli("verify-types --seed 7").out, "seed 7"));
}

TEST_CASE("core contracts a coned fixture to a point") {
    std::string tmp = "cli_coned.poset";
    Poset p = type_poset(TypeLabel::II);
    std::vector<std::pair<int, int>> covers = cover_pairs(p);
    for (int v : mask_elements(maximal_elements(p))) covers.emplace_back(v, 10);
    write_poset_file(tmp, from_covers(11, covers));
    RunResult r = run_cli("core --in " + tmp);
    CHECK(r.status == 0);
    CHECK(r.out == "poset 1\n");
    std::remove(tmp.c_str());
}

TEST_CASE("dual writes the opposite poset") {
    std::string tmp = "cli_dual_out.poset";
    RunResult r = run_cli("dual --in " + data_path("posets/type_I.poset") + " --out " + tmp);
    CHECK(r.status == 0);
    CHECK(slurp(tmp) == slurp(data_path("posets/type_Iop.poset")));
    std::remove(tmp.c_str());
}

TEST_CASE("shipped data files match the built-ins byte for byte") {
    for (const Fixture& f : builtin_fixtures()) {
        std::string stem = type_name(f.label);
        std::string file = "type_" + stem.substr(0, stem.find('^')) +
                           (contains(stem, "^op") ? "op" : "") + ".poset";
        CHECK(slurp(data_path("posets/" + file)) == poset_to_string(f.poset));
    }
    for (TypeLabel t : {TypeLabel::I, TypeLabel::II, TypeLabel::III, TypeLabel::IV,
                        TypeLabel::V, TypeLabel::VI, TypeLabel::VII}) {
        std::string file = "type_" + type_name(t) + ".collapse";
        CHECK(slurp(data_path("certificates/" + file)) ==
              format_certificate(builtin_certificate(t)));
    }
    CHECK(slurp(data_path("posets/witness_cycle.poset")) == poset_to_string(witness_cycle_poset()));
    CHECK(slurp(data_path("posets/witness_h3.poset")) == poset_to_string(witness_h3_poset()));
    CHECK(slurp(data_path("posets/point.poset")) == "poset 1\n");
}

TEST_CASE("output is byte-stable across --jobs") {
    RunResult one = run_cli("classify --n 6 --format records --jobs 1");
    RunResult two = run_cli("classify --n 6 --format records --jobs 2");
    CHECK(one.status == 0);
    CHECK(one.out == two.out);
    std::string f1 = "cli_enum_j1.txt", f2 = "cli_enum_j2.txt";
    CHECK(run_cli("enumerate --n 5 --jobs 1 --out " + f1).status == 0);
    CHECK(run_cli("enumerate --n 5 --jobs 2 --out " + f2).status == 0);
    CHECK(slurp(f1) == slurp(f2));
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("ten-point classification table matches the published split") {
    RunResult r = run_cli("classify --n 10");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "census n=10 total=2567284 minimal=7929 survivors=10"));
    CHECK(contains(r.out, "1 0\n2 0\n3 6\n4 4\nTotal 10\n"));
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("enumerate").status == 2);       // missing --n
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("classify --n 5 --format xml").status == 2);
}
