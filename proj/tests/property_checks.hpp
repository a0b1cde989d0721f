/**
 * Shared exhaustive property sweeps, used by both the property suite
 * and the acceptance runner.  Every function returns the number of
 * violations found (zero means the property held everywhere).
 */
#ifndef FINSPACE_TESTS_PROPERTY_CHECKS_HPP
#define FINSPACE_TESTS_PROPERTY_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <random>

#include "finspace/classify.hpp"
#include "finspace/collapse.hpp"
#include "finspace/complex.hpp"
#include "finspace/homology.hpp"
#include "finspace/structure.hpp"

namespace finspace::checks {

/** gcd of all k x k minors, by brute-force subset enumeration. */
inline Int minor_gcd(const IntMatrix& m, int k) {
    Int g = 0;
    std::vector<int> rsel, csel;
    std::function<Int(const std::vector<int>&, const std::vector<int>&)> det =
        [&](const std::vector<int>& rs, const std::vector<int>& cs) -> Int {
        if (rs.size() == 1) return m.at(rs[0], cs[0]);
        Int sum = 0;
        std::vector<int> cs_rest(cs.begin() + 1, cs.end());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            std::vector<int> rs_rest;
            for (std::size_t j = 0; j < rs.size(); ++j) {
                if (j != i) rs_rest.push_back(rs[j]);
            }
            Int term = m.at(rs[i], cs[0]) * det(rs_rest, cs_rest);
            if (i % 2 == 0) sum += term;
            else sum -= term;
        }
        return sum;
    };
    std::function<void(int, int)> pick_cols = [&](int start, int depth) {
        if (depth == k) {
            g = boost::multiprecision::gcd(g, det(rsel, csel));
            return;
        }
        for (int c = start; c < m.cols; ++c) {
            csel.push_back(c);
            pick_cols(c + 1, depth + 1);
            csel.pop_back();
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < m.rows; ++r) {
            rsel.push_back(r);
            pick_rows(r + 1, depth + 1);
            rsel.pop_back();
        }
    };
    pick_rows(0, 0);
    return g < 0 ? Int(-g) : g;
}

/** Invariant factors via the minor-gcd characterization: s_k = d_k / d_{k-1}. */
inline std::vector<Int> oracle_divisors(const IntMatrix& m) {
    std::vector<Int> out;
    Int prev = 1;
    int kmax = std::min(m.rows, m.cols);
    for (int k = 1; k <= kmax; ++k) {
        Int g = minor_gcd(m, k);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/** Smith normal form vs the oracle on random small matrices. */
inline std::uint64_t snf_oracle_violations(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    std::uint64_t bad = 0;
    for (int trial = 0; trial < trials; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (Int& v : m.a) v = entry(rng);
        SmithResult got = smith_normal_form(m);
        std::vector<Int> expected = oracle_divisors(m);
        if (got.divisors != expected) ++bad;
        if (got.rank != static_cast<int>(expected.size())) ++bad;
    }
    return bad;
}

template <typename F>
void for_all_posets(int min_n, int max_n, F&& fn) {
    for (int k = min_n; k <= max_n; ++k) {
        enumerate_posets(k, [&](const Poset& p) { fn(p); });
    }
}

/** d o d = 0 for every poset on up to max_n points. */
inline std::uint64_t boundary_squared_violations(int max_n) {
    std::uint64_t bad = 0;
    for_all_posets(1, max_n, [&](const Poset& p) {
        SimplicialComplex kx = order_complex(p);
        for (int q = 2; q <= kx.dim(); ++q) {
            IntMatrix a = boundary_matrix(kx, q - 1);
            IntMatrix b = boundary_matrix(kx, q);
            for (int r = 0; r < a.rows; ++r) {
                for (int c = 0; c < b.cols; ++c) {
                    Int sum = 0;
                    for (int j = 0; j < a.cols; ++j) sum += a.at(r, j) * b.at(j, c);
                    if (sum != 0) ++bad;
                }
            }
        }
    });
    return bad;
}

/** Euler characteristic equals the alternating Betti sum. */
inline std::uint64_t euler_poincare_violations(int max_n) {
    std::uint64_t bad = 0;
    for_all_posets(1, max_n, [&](const Poset& p) {
        SimplicialComplex kx = order_complex(p);
        HomologyProfile h = homology(kx);
        long long alt = 0;
        for (std::size_t k = 0; k < h.betti.size(); ++k) {
            alt += (k % 2 == 0) ? h.betti[k] : -h.betti[k];
        }
        if (alt != euler_char(kx)) ++bad;
    });
    return bad;
}

/**
 * Both closed-form characteristics agree with the complex whenever
 * their chain preconditions hold.
 */
inline std::uint64_t closed_form_violations(int max_n) {
    std::uint64_t bad = 0;
    for_all_posets(1, max_n, [&](const Poset& p) {
        if (height(p) < 1) return;
        LevelData d = classify_edges(p);
        long long chi = euler_char(order_complex(p));
        if (d.E_B.empty() && euler_formula_antichain(d) != chi) ++bad;
        bool has_3chain_in_B = false;
        for (auto& [i, k] : d.E_B) {
            for (auto& [i2, k2] : d.E_B) {
                if (k == i2) has_3chain_in_B = true;
            }
        }
        if (!has_3chain_in_B && euler_formula_h3(d) != chi) ++bad;
    });
    return bad;
}

/** The order complex of the dual is the same complex. */
inline std::uint64_t self_dual_complex_violations(int max_n) {
    std::uint64_t bad = 0;
    for_all_posets(1, max_n, [&](const Poset& p) {
        if (!(order_complex(p) == order_complex(dual(p)))) ++bad;
    });
    return bad;
}

/**
 * In a space with no beat points, none of the minimality-only lemma
 * conclusions can fail: comparable-pair growth (L31) and the
 * single-witness configurations (Iso/Beat/FullL) all force a beat
 * point when violated.
 */
inline std::uint64_t minimal_lemma_violations(int max_n) {
    std::uint64_t bad = 0;
    for_all_posets(1, max_n, [&](const Poset& p) {
        if (!is_minimal_space(p)) return;
        for (const LemmaFinding& f : lemma_diagnostics(p).findings) {
            if (f.lemma == Lemma::L31 || f.lemma == Lemma::Iso || f.lemma == Lemma::Beat ||
                f.lemma == Lemma::FullL) {
                ++bad;
            }
        }
    });
    return bad;
}

/**
 * Edge-tag soundness: an edge is tagged naked exactly when no
 * 2-simplex of the order complex contains both endpoints, the naked
 * count equals D, and the budget is never negative.
 */
inline std::uint64_t naked_edge_violations(int max_n) {
    std::uint64_t bad = 0;
    for_all_posets(1, max_n, [&](const Poset& p) {
        if (height(p) < 1) return;
        LevelData d = classify_edges(p);
        if (d.infeasible || d.D < 0) ++bad;
        if (static_cast<int>(d.naked_edges.size()) != d.D) ++bad;
        SimplicialComplex kx = order_complex(p);
        auto in_some_triangle = [&](int c, int a) {
            if (kx.dim() < 2) return false;
            for (const Simplex& s : kx.simplices[2]) {
                if (std::binary_search(s.begin(), s.end(), c) &&
                    std::binary_search(s.begin(), s.end(), a)) {
                    return true;
                }
            }
            return false;
        };
        for (auto& [c, a] : d.naked_edges) {
            if (in_some_triangle(c, a)) ++bad;
        }
        for (auto& [c, a] : d.transitive_edges) {
            if (!in_some_triangle(c, a)) ++bad;
        }
    });
    return bad;
}

/**
 * Stong cores are independent of the removal order: over `orders`
 * random beat-point choices, every run must land on one isomorphism
 * class.  Samples every poset class on `n` points with a stride that
 * yields `sample` posets.
 */
inline std::uint64_t core_order_violations(int n, int sample, int orders, unsigned seed) {
    std::vector<Poset> all = enumerate_posets(n);
    std::uint64_t stride = std::max<std::uint64_t>(1, all.size() / sample);
    std::mt19937 rng(seed);
    std::uint64_t bad = 0;
    int used = 0;
    for (std::size_t i = 0; i < all.size() && used < sample; i += stride, ++used) {
        const Poset& p = all[i];
        CanonicalForm reference = canonical_form(core(p));
        for (int round = 0; round < orders; ++round) {
            Poset c = core(p, [&](const std::vector<int>& beats) {
                return beats[rng() % beats.size()];
            });
            if (!(canonical_form(c) == reference)) ++bad;
        }
    }
    return bad;
}

}  // namespace finspace::checks

#endif  // FINSPACE_TESTS_PROPERTY_CHECKS_HPP
