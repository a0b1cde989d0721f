#include "finspace/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace finspace {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix boundary_matrix(const SimplicialComplex& kx, int k) {
    if (k < 1 || k > kx.dim()) {
        throw DimensionOutOfRange("boundary dimension " + std::to_string(k) +
                                  " outside 1.." + std::to_string(kx.dim()));
    }
    const auto& low = kx.simplices[k - 1];
    const auto& high = kx.simplices[k];
    IntMatrix m(static_cast<int>(low.size()), static_cast<int>(high.size()));
    Simplex face;
    for (int c = 0; c < m.cols; ++c) {
        const Simplex& s = high[c];
        for (int i = 0; i <= k; ++i) {
            face = s;
            face.erase(face.begin() + i);
            auto it = std::lower_bound(low.begin(), low.end(), face);
            int r = static_cast<int>(it - low.begin());
            m.at(r, c) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

namespace {

/** g = gcd(a, b) >= 0 together with s, t satisfying s*a + t*b = g. */
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    s = s0;
    t = t0;
    return r0;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, IntMatrix* left) {
    IntMatrix w = m;
    if (left) *left = IntMatrix::identity(m.rows);

    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < w.cols; ++c) std::swap(w.at(i, c), w.at(j, c));
        if (left) {
            for (int c = 0; c < left->cols; ++c) std::swap(left->at(i, c), left->at(j, c));
        }
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < w.rows; ++r) std::swap(w.at(r, i), w.at(r, j));
    };
    // row i += q * row j
    auto row_addmul = [&](int i, int j, const Int& q) {
        for (int c = 0; c < w.cols; ++c) w.at(i, c) += q * w.at(j, c);
        if (left) {
            for (int c = 0; c < left->cols; ++c) left->at(i, c) += q * left->at(j, c);
        }
    };
    auto col_addmul = [&](int i, int j, const Int& q) {
        for (int r = 0; r < w.rows; ++r) w.at(r, i) += q * w.at(r, j);
    };

    int t = 0;
    int bound = std::min(w.rows, w.cols);
    while (t < bound) {
        // Smallest nonzero absolute value in the remaining submatrix:
        // keeps coefficient growth tame on these sparse +-1 matrices.
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < w.rows; ++i) {
            for (int j = t; j < w.cols; ++j) {
                const Int& v = w.at(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (pi < 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;  // submatrix is zero
        row_swap(t, pi);
        col_swap(t, pj);

        bool restart = false;
        for (int i = t + 1; i < w.rows; ++i) {
            if (w.at(i, t) == 0) continue;
            Int q = w.at(i, t) / w.at(t, t);
            if (q != 0) row_addmul(i, t, -q);
            if (w.at(i, t) != 0) restart = true;  // remainder smaller than pivot
        }
        if (restart) continue;
        for (int j = t + 1; j < w.cols; ++j) {
            if (w.at(t, j) == 0) continue;
            Int q = w.at(t, j) / w.at(t, t);
            if (q != 0) col_addmul(j, t, -q);
            if (w.at(t, j) != 0) restart = true;
        }
        if (restart) continue;
        ++t;
    }

    SmithResult res;
    res.rank = t;
    for (int i = 0; i < t; ++i) {
        if (w.at(i, i) < 0) {
            w.at(i, i) = -w.at(i, i);
            if (left) {
                for (int c = 0; c < left->cols; ++c) left->at(i, c) = -left->at(i, c);
            }
        }
    }
    // Divisibility repair: replace each offending diagonal pair (a, b)
    // with (gcd, lcm) via a unimodular 2x2 transform mirrored into U.
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            Int a = w.at(i, i), b = w.at(j, j);
            if (b % a == 0) continue;
            Int s, u;
            Int g = ext_gcd(a, b, s, u);
            Int l = (a / g) * b;
            w.at(i, i) = g;
            w.at(j, j) = l;
            if (left) {
                Int bg = b / g, ag = a / g;
                for (int c = 0; c < left->cols; ++c) {
                    Int ri = left->at(i, c), rj = left->at(j, c);
                    left->at(i, c) = s * ri + u * rj;
                    left->at(j, c) = -bg * ri + ag * rj;
                }
            }
        }
    }
    for (int i = 0; i < t; ++i) res.divisors.push_back(w.at(i, i));
    return res;
}

HomologyProfile homology(const SimplicialComplex& kx) {
    if (kx.size() == 0) throw EmptyComplex("homology of the empty complex is undefined");
    int d = kx.dim();
    std::vector<long long> f = f_vector(kx);
    std::vector<int> rank(static_cast<std::size_t>(d) + 2, 0);
    HomologyProfile h;
    h.torsion.assign(static_cast<std::size_t>(d) + 1, {});
    for (int k = 1; k <= d; ++k) {
        SmithResult s = smith_normal_form(boundary_matrix(kx, k));
        rank[k] = s.rank;
        for (const Int& v : s.divisors) {
            if (v > 1) h.torsion[k - 1].push_back(v);
        }
    }
    for (int k = 0; k <= d; ++k) {
        h.betti.push_back(f[k] - rank[k] - rank[k + 1]);
    }
    bool trivial = h.betti[0] == 1;
    for (int k = 1; k <= d; ++k) {
        if (h.betti[k] != 0) trivial = false;
    }
    for (const auto& tk : h.torsion) {
        if (!tk.empty()) trivial = false;
    }
    h.reduced_trivial = trivial;
    return h;
}

std::string to_string(const HomologyProfile& h) {
    std::ostringstream ss;
    for (std::size_t k = 0; k < h.betti.size(); ++k) {
        ss << "H" << k << ": Z^" << h.betti[k];
        for (const Int& v : h.torsion[k]) ss << " + Z/" << v;
        ss << "\n";
    }
    return ss.str();
}

bool is_boundary(const SimplicialComplex& kx, const Chain& z) {
    std::map<Simplex, Int> terms;
    int k = -1;
    for (const auto& [s, coeff] : z) {
        if (k < 0) k = static_cast<int>(s.size()) - 1;
        if (static_cast<int>(s.size()) - 1 != k) {
            throw UnknownSimplex("chain mixes simplex dimensions");
        }
        if (!kx.contains(s)) {
            std::string name;
            for (int v : s) name += (name.empty() ? "" : " ") + std::to_string(v);
            throw UnknownSimplex("simplex [" + name + "] is not in the complex");
        }
        terms[s] += coeff;
    }
    for (auto it = terms.begin(); it != terms.end();) {
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
    if (terms.empty()) return true;  // the zero chain bounds

    // Cycle check: the boundary of the chain must vanish.
    if (k >= 1) {
        std::map<Simplex, Int> bd;
        for (const auto& [s, coeff] : terms) {
            for (int i = 0; i <= k; ++i) {
                Simplex face = s;
                face.erase(face.begin() + i);
                bd[face] += (i % 2 == 0) ? coeff : -coeff;
            }
        }
        for (const auto& [s, coeff] : bd) {
            if (coeff != 0) throw NotACycle("the chain's boundary is nonzero");
        }
    }

    if (k == kx.dim()) return false;  // no higher simplices, nonzero chain cannot bound

    IntMatrix m = boundary_matrix(kx, k + 1);
    IntMatrix u;
    SmithResult s = smith_normal_form(m, &u);
    const auto& row = kx.simplices[k];
    std::vector<Int> b(row.size());
    for (const auto& [sx, coeff] : terms) {
        auto it = std::lower_bound(row.begin(), row.end(), sx);
        b[static_cast<std::size_t>(it - row.begin())] = coeff;
    }
    for (int i = 0; i < m.rows; ++i) {
        Int y = 0;
        for (int c = 0; c < m.rows; ++c) y += u.at(i, c) * b[c];
        if (i < s.rank) {
            if (y % s.divisors[i] != 0) return false;
        } else if (y != 0) {
            return false;
        }
    }
    return true;
}

bool is_homotopically_trivial(const Poset& p) {
    if (p.n > 12) {
        throw SizeLimitExceeded("the triviality test is only sound for at most 12 points, got " +
                                std::to_string(p.n));
    }
    if (p.n == 0) throw EmptyPoset("triviality of the empty poset is undefined");
    // Leg one: connectivity of the 1-skeleton, by direct traversal of
    // the comparability graph.
    Mask seen = bit(0);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (unsigned w = frontier; w;) {
            int v = std::countr_zero(w);
            w &= w - 1;
            next |= static_cast<Mask>(p.up[v] | p.down[v]);
        }
        next &= static_cast<Mask>(~seen);
        seen |= next;
        frontier = next;
    }
    if (seen != p.all_mask()) return false;
    // Leg two: trivial reduced integral homology.
    return homology(order_complex(p)).reduced_trivial;
}

}  // namespace finspace
