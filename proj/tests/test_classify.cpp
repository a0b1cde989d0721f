#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unordered_set>

#include "doctest.h"
#include "finspace/classify.hpp"
#include "finspace/fixtures.hpp"
#include "finspace/structure.hpp"

using namespace finspace;

namespace {

/**
 * Every strict order on n labeled points, by brute force over all
 * relation subsets (feasible for n <= 5): a relation is kept iff it is
 * irreflexive and transitive.  Completely independent of the
 * extension-based enumerator.
 */
std::vector<Poset> brute_force_labeled(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) slots.emplace_back(i, j);
        }
    }
    std::vector<Poset> out;
    for (std::uint64_t bits = 0; bits < (1ull << slots.size()); ++bits) {
        std::array<Mask, kMaxElements> up{};
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((bits >> s) & 1ull) up[slots[s].first] |= bit(slots[s].second);
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = 0; j < n && ok; ++j) {
                if ((up[i] >> j) & 1u) {
                    if ((up[j] & ~up[i]) != 0) ok = false;  // not transitive
                    if ((up[j] >> i) & 1u) ok = false;      // a cycle
                }
            }
        }
        if (!ok) continue;
        Poset p;
        p.n = n;
        p.up = up;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if ((up[j] >> i) & 1u) p.down[i] |= bit(j);
            }
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("class counts match the frozen sequence up to seven points") {
    const std::uint64_t expected[] = {1, 1, 2, 5, 16, 63, 318, 2045};
    for (int n = 0; n <= 7; ++n) {
        CHECK(enumerate_posets(n, nullptr) == expected[n]);
    }
}

TEST_CASE("brute force over relations reproduces labeled and unlabeled counts") {
    const std::uint64_t labeled[] = {1, 1, 3, 19, 219, 4231};
    for (int n = 0; n <= 5; ++n) {
        std::vector<Poset> all = brute_force_labeled(n);
        CHECK(all.size() == labeled[n]);
        std::unordered_set<CanonicalForm, CanonicalFormHash> classes;
        for (const Poset& p : all) classes.insert(canonical_form(p));
        // The deduplicated classes must be exactly the enumerator's.
        std::uint64_t count = enumerate_posets(n, [&](const Poset& rep) {
            CHECK(classes.count(canonical_form(rep)) == 1);
        });
        CHECK(count == classes.size());
    }
}

TEST_CASE("worker threads do not change the result") {
    EnumOptions two;
    two.jobs = 2;
    CHECK(enumerate_posets(7, nullptr, two) == 2045);
    std::vector<Poset> seq = enumerate_posets(7);
    std::vector<Poset> par = enumerate_posets(7, two);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].up == par[i].up);
    }
}

TEST_CASE("the memory cap aborts enumeration") {
    EnumOptions tiny;
    tiny.max_mem_bytes = 128;
    CHECK_THROWS_AS(enumerate_posets(6, nullptr, tiny), ResourceLimit);
}

TEST_CASE("minimal-space filter at small sizes") {
    // One point is its own core; a two-chain is not minimal, the
    // two-antichain is; at four points the antichain and the circle.
    CHECK(filter_minimal(enumerate_posets(1)).size() == 1);
    CHECK(filter_minimal(enumerate_posets(2)).size() == 1);
    CHECK(filter_minimal(enumerate_posets(3)).size() == 1);
    CHECK(filter_minimal(enumerate_posets(4)).size() == 2);
}

TEST_CASE("no survivors exist below seven points") {
    for (int n = 1; n <= 6; ++n) {
        auto [stats, records] = classify(n);
        CHECK(stats.survivors == 0);
        CHECK(records.empty());
        CHECK(stats.total == enumerate_posets(n, nullptr));
    }
}

TEST_CASE("a ten-point record matching no fixture is a hard failure") {
    ClassificationRecord fake;
    fake.canon = canonical_form(chain(10));
    std::vector<ClassificationRecord> recs = {fake};
    CHECK_THROWS_AS(match_types(recs), UnmatchedSurvivor);
}

TEST_CASE("records below ten points stay unmatched quietly") {
    ClassificationRecord small;
    small.canon = canonical_form(chain(3));
    std::vector<ClassificationRecord> recs = {small};
    match_types(recs);
    CHECK(recs[0].matched_type == TypeLabel::Unmatched);
}

TEST_CASE("fixture posets match their own labels") {
    std::vector<ClassificationRecord> recs;
    for (const Fixture& f : builtin_fixtures()) {
        ClassificationRecord r;
        r.canon = canonical_form(f.poset);
        recs.push_back(r);
    }
    match_types(recs);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(type_name(recs[i].matched_type) == type_name(builtin_fixtures()[i].label));
    }
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(classify(13), SizeLimitExceeded);
    CHECK_THROWS_AS(enumerate_posets(17, nullptr), IndexOutOfRange);
    CHECK_THROWS_AS(enumerate_posets(-1, nullptr), IndexOutOfRange);
}

TEST_CASE("type labels render as published") {
    CHECK(type_name(TypeLabel::I) == "I");
    CHECK(type_name(TypeLabel::VII) == "VII");
    CHECK(type_name(TypeLabel::IIIop) == "III^op");
    CHECK(type_name(TypeLabel::Unmatched) == "Unmatched");
}
