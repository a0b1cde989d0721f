#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "finspace/fixtures.hpp"
#include "finspace/homology.hpp"
#include "property_checks.hpp"

using namespace finspace;
using checks::minor_gcd;
using checks::oracle_divisors;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

SimplicialComplex from_maximal_faces(int n_verts, const std::vector<Simplex>& faces) {
    SimplicialComplex k;
    k.n_verts = n_verts;
    std::vector<std::vector<Simplex>> by_dim;
    auto add = [&](const Simplex& s) {
        int d = static_cast<int>(s.size()) - 1;
        if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
        by_dim[d].push_back(s);
    };
    for (const Simplex& f : faces) {
        int sz = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << sz); ++mask) {
            Simplex s;
            for (int i = 0; i < sz; ++i) {
                if (mask & (1 << i)) s.push_back(f[i]);
            }
            add(s);
        }
    }
    for (auto& level : by_dim) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    k.simplices = std::move(by_dim);
    return k;
}

}  // namespace

TEST_CASE("smith normal form of simple matrices") {
    SmithResult id3 = smith_normal_form(IntMatrix::identity(3));
    CHECK(id3.rank == 3);
    CHECK(id3.divisors == std::vector<Int>{1, 1, 1});

    SmithResult zero = smith_normal_form(IntMatrix(2, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.divisors.empty());

    // diag(2, 3) has invariant factors 1, 6 (divisibility repair).
    SmithResult d23 = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(d23.divisors == std::vector<Int>{1, 6});

    SmithResult single = smith_normal_form(from_rows({{4}}));
    CHECK(single.divisors == std::vector<Int>{4});
}

TEST_CASE("smith normal form agrees with the minor-gcd oracle") {
    CHECK(checks::snf_oracle_violations(200, 11) == 0);
}

TEST_CASE("the left transform is unimodular") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m(4, 3);
        for (Int& v : m.a) v = entry(rng);
        IntMatrix left;
        SmithResult r = smith_normal_form(m, &left);
        CHECK(left.rows == 4);
        CHECK(left.cols == 4);
        // The 4x4 minor gcd of a square matrix is |det|; row
        // operations with unit pivots keep it at 1.
        CHECK(minor_gcd(left, 4) == 1);
        CHECK(r.rank <= 3);
    }
}

TEST_CASE("boundary of a boundary is zero") {
    for (const SimplicialComplex& k :
         {order_complex(type_poset(TypeLabel::I)), order_complex(witness_h3_poset())}) {
        for (int q = 2; q <= k.dim(); ++q) {
            IntMatrix a = boundary_matrix(k, q - 1);
            IntMatrix b = boundary_matrix(k, q);
            for (int r = 0; r < a.rows; ++r) {
                for (int c = 0; c < b.cols; ++c) {
                    Int sum = 0;
                    for (int j = 0; j < a.cols; ++j) sum += a.at(r, j) * b.at(j, c);
                    CHECK(sum == 0);
                }
            }
        }
    }
}

TEST_CASE("homology of elementary spaces") {
    HomologyProfile point = homology(order_complex(chain(1)));
    CHECK(point.betti == std::vector<long long>{1});
    CHECK(point.reduced_trivial);
    CHECK(to_string(point) == "H0: Z^1\n");

    Poset circle4 = from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    HomologyProfile circ = homology(order_complex(circle4));
    CHECK(circ.betti == std::vector<long long>{1, 1});
    CHECK(!circ.reduced_trivial);

    Poset sphere = from_covers(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3},
                                   {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    HomologyProfile sph = homology(order_complex(sphere));
    CHECK(sph.betti == std::vector<long long>{1, 0, 1});
    CHECK(sph.torsion[1].empty());
}

TEST_CASE("the projective plane has 2-torsion") {
    SimplicialComplex rp2 = from_maximal_faces(
        6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
    CHECK(euler_char(rp2) == 1);
    HomologyProfile h = homology(rp2);
    CHECK(h.betti == std::vector<long long>{1, 0, 0});
    CHECK(h.torsion[1] == std::vector<Int>{2});
    CHECK(!h.reduced_trivial);
    CHECK(to_string(h) == "H0: Z^1\nH1: Z^0 + Z/2\nH2: Z^0\n");
}

TEST_CASE("every classified fixture has trivial reduced homology") {
    for (const Fixture& f : builtin_fixtures()) {
        HomologyProfile h = homology(order_complex(f.poset));
        CHECK(h.betti == std::vector<long long>{1, 0, 0});
        CHECK(h.reduced_trivial);
        CHECK(is_homotopically_trivial(f.poset));
    }
}

TEST_CASE("boundary membership on a filled triangle") {
    SimplicialComplex k = order_complex(chain(3));
    Chain z = {{{1, 2}, 1}, {{0, 2}, -1}, {{0, 1}, 1}};
    CHECK(is_boundary(k, z));
    CHECK_THROWS_AS(is_boundary(k, Chain{{{0, 1}, 1}}), NotACycle);
    CHECK_THROWS_AS(is_boundary(k, Chain{{{0, 9}, 1}}), UnknownSimplex);
    CHECK(is_boundary(k, Chain{}));
}

TEST_CASE("a top-dimension cycle never bounds") {
    Poset circle4 = from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    SimplicialComplex k = order_complex(circle4);
    Chain z = {{{0, 2}, 1}, {{1, 2}, -1}, {{1, 3}, 1}, {{0, 3}, -1}};
    CHECK(!is_boundary(k, z));
}

TEST_CASE("the published middle-cycle witness is not a boundary") {
    Poset p = witness_cycle_poset();
    SimplicialComplex k = order_complex(p);
    Chain z = witness_cycle();
    CHECK(!is_boundary(k, z));
    HomologyProfile h = homology(k);
    CHECK(h.betti.size() >= 2);
    CHECK(h.betti[1] >= 1);
    CHECK(!is_homotopically_trivial(p));
}

TEST_CASE("the height-3 witness has third homology") {
    Poset p = witness_h3_poset();
    CHECK(height(p) == 3);
    HomologyProfile h = homology(order_complex(p));
    CHECK(h.betti.size() == 4);
    CHECK(h.betti[3] >= 1);
    CHECK(!is_homotopically_trivial(p));
}

TEST_CASE("triviality test guards its size limit") {
    Poset big = antichain(13);
    CHECK_THROWS_AS(is_homotopically_trivial(big), SizeLimitExceeded);
    CHECK_THROWS_AS(is_homotopically_trivial(Poset{}), EmptyPoset);
    CHECK(is_homotopically_trivial(chain(3)));
    CHECK(!is_homotopically_trivial(antichain(2)));  // disconnected
}

TEST_CASE("homology rejects the empty complex") {
    SimplicialComplex empty;
    CHECK_THROWS_AS(homology(empty), EmptyComplex);
}
