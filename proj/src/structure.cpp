#include "finspace/structure.hpp"

#include <algorithm>
#include <bit>

namespace finspace {

std::vector<int> BeatReport::elements() const {
    std::vector<int> out;
    for (auto& [x, w] : up_beats) out.push_back(x);
    for (auto& [x, w] : down_beats) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LevelData levels(const Poset& p) {
    if (p.n == 0) throw EmptyPoset("layer decomposition of the empty poset is undefined");
    LevelData d;
    Mask mins = minimal_elements(p);
    Mask maxs = maximal_elements(p);
    d.C = mins;
    d.A = static_cast<Mask>(maxs & ~mins);  // isolated points stay in C
    d.B = static_cast<Mask>(p.all_mask() & ~(d.C | d.A));
    d.c_elems = mask_elements(d.C);
    d.b_elems = mask_elements(d.B);
    d.a_elems = mask_elements(d.A);
    d.m = static_cast<int>(d.c_elems.size());
    d.r = static_cast<int>(d.b_elems.size());
    d.n = static_cast<int>(d.a_elems.size());

    for (int b : d.b_elems) {
        Mask lj = static_cast<Mask>(p.down[b] & d.C);
        Mask uj = static_cast<Mask>(p.up[b] & d.A);
        d.L.push_back(lj);
        d.U.push_back(uj);
        d.beta.push_back(std::popcount(lj));
        d.alpha.push_back(std::popcount(uj));
    }
    for (int i = 0; i < d.r; ++i) {
        for (int k = 0; k < d.r; ++k) {
            if (i != k && p.less(d.b_elems[i], d.b_elems[k])) d.E_B.emplace_back(i, k);
        }
    }
    for (int a : d.a_elems) d.s.push_back(std::popcount(static_cast<Mask>(p.down[a] & d.B)));
    for (int c : d.c_elems) d.t.push_back(std::popcount(static_cast<Mask>(p.up[c] & d.B)));

    for (int ci = 0; ci < d.m; ++ci) {
        Mask reach = 0;
        for (int j = 0; j < d.r; ++j) {
            if ((d.L[j] >> d.c_elems[ci]) & 1u) reach |= d.U[j];
        }
        d.M.push_back(reach);
        d.T_tr += std::popcount(reach);
    }
    for (int ci = 0; ci < d.m; ++ci) {
        int c = d.c_elems[ci];
        Mask above = static_cast<Mask>(p.up[c] & d.A);
        d.C_ca += std::popcount(above);
        Mask reach = d.M[ci];
        for (unsigned w = above; w;) {
            int a = std::countr_zero(w);
            w &= w - 1;
            if ((reach >> a) & 1u) {
                d.transitive_edges.emplace_back(c, a);
            } else {
                d.naked_edges.emplace_back(c, a);
            }
        }
    }
    d.D = d.C_ca - d.T_tr;
    d.infeasible = d.T_tr > d.C_ca;
    return d;
}

namespace {

/** Minimum of the nonempty set S in p, or -1 if none. */
int set_minimum(const Poset& p, Mask S) {
    for (unsigned w = S; w;) {
        int x = std::countr_zero(w);
        w &= w - 1;
        if ((S & ~(bit(x) | p.up[x])) == 0) return x;
    }
    return -1;
}

int set_maximum(const Poset& p, Mask S) {
    for (unsigned w = S; w;) {
        int x = std::countr_zero(w);
        w &= w - 1;
        if ((S & ~(bit(x) | p.down[x])) == 0) return x;
    }
    return -1;
}

}  // namespace

BeatReport beat_points(const Poset& p) {
    BeatReport r;
    for (int x = 0; x < p.n; ++x) {
        if (p.up[x]) {
            if (int w = set_minimum(p, p.up[x]); w >= 0) r.up_beats.emplace_back(x, w);
        }
        if (p.down[x]) {
            if (int w = set_maximum(p, p.down[x]); w >= 0) r.down_beats.emplace_back(x, w);
        }
    }
    return r;
}

Poset remove_beat(const Poset& p, int x) {
    if (x < 0 || x >= p.n) {
        throw IndexOutOfRange("element " + std::to_string(x) + " outside 0.." + std::to_string(p.n - 1));
    }
    bool is_beat = (p.up[x] && set_minimum(p, p.up[x]) >= 0) ||
                   (p.down[x] && set_maximum(p, p.down[x]) >= 0);
    if (!is_beat) {
        throw NotABeatPoint(p.name(x) + " is not a beat point");
    }
    return induced_subposet(p, static_cast<Mask>(p.all_mask() & ~bit(x)));
}

Poset core(const Poset& p, const std::function<int(const std::vector<int>&)>& pick) {
    Poset q = p;
    for (;;) {
        std::vector<int> beats = beat_points(q).elements();
        if (beats.empty()) return q;
        int x = pick(beats);
        q = remove_beat(q, x);
    }
}

Poset core(const Poset& p) {
    return core(p, [](const std::vector<int>& beats) { return beats.front(); });
}

bool is_contractible(const Poset& p) {
    if (p.n == 0) throw EmptyPoset("contractibility of the empty poset is undefined");
    return core(p).n == 1;
}

bool is_minimal_space(const Poset& p) { return beat_points(p).empty(); }

LevelData classify_edges(const Poset& p) {
    LevelData d = levels(p);
    bool any_comparable = false;
    for (int i = 0; i < p.n && !any_comparable; ++i) any_comparable = p.up[i] != 0;
    if (!any_comparable) {
        throw HeightTooSmall("edge classification needs at least one comparable pair");
    }
    return d;
}

int budget(const Poset& p) { return classify_edges(p).D; }

// ---------------------------------------------------------------------------
// Lemma diagnostics
// ---------------------------------------------------------------------------

std::string lemma_name(Lemma l) {
    switch (l) {
        case Lemma::L31: return "L31";
        case Lemma::L33: return "L33";
        case Lemma::Iso: return "iso";
        case Lemma::Beat: return "beat";
        case Lemma::FullL: return "fullL";
        case Lemma::Naked: return "naked";
        case Lemma::Size: return "size";
    }
    return "?";
}

namespace {

/** Is y reachable from x in the comparability graph minus edge {x0,y0}? */
bool connected_avoiding(const Poset& p, int from, int to, int x0, int y0) {
    Mask seen = bit(from);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (unsigned w = frontier; w;) {
            int v = std::countr_zero(w);
            w &= w - 1;
            Mask nb = static_cast<Mask>(p.up[v] | p.down[v]);
            if (v == x0) nb &= static_cast<Mask>(~bit(y0));
            if (v == y0) nb &= static_cast<Mask>(~bit(x0));
            next |= nb;
        }
        next &= static_cast<Mask>(~seen);
        if ((next >> to) & 1u) return true;
        seen |= next;
        frontier = next;
    }
    return false;
}

/**
 * One-sided checks (the a-side statements); run on p and on dual(p).
 * LevelData of the dual has the roles of C/A and L/U swapped, so the
 * same code covers both halves of each lemma.
 */
void check_one_side(const Poset& p, const LevelData& d, bool on_dual,
                    std::vector<LemmaFinding>& out) {
    for (int ai = 0; ai < d.n; ++ai) {
        int a = d.a_elems[ai];
        Mask below_c = static_cast<Mask>(p.down[a] & d.C);
        if (d.s[ai] == 0) {
            // Lemma iso: with no middle below, at least two elements of C
            // must lie below a (one alone would be the maximum of its
            // strict down-set, zero would disconnect).
            if (std::popcount(below_c) < 2) {
                out.push_back({Lemma::Iso, on_dual, {a},
                               "only " + std::to_string(std::popcount(below_c)) +
                                   " element(s) of C below " + p.name(a)});
            }
        } else if (d.s[ai] == 1) {
            int k = -1;
            for (int j = 0; j < d.r; ++j) {
                if (p.less(d.b_elems[j], a)) k = j;
            }
            if ((below_c & ~d.L[k]) == 0) {
                // The single middle dominates the whole strict down-set,
                // making a a down-beat point.
                bool full = d.L[k] == d.C;
                out.push_back({full ? Lemma::FullL : Lemma::Beat, on_dual,
                               {a, d.b_elems[k]},
                               (full ? std::string("L_k = C and ") : std::string()) +
                                   "s(" + p.name(a) + ") = 1 via " + p.name(d.b_elems[k]) +
                                   ": " + p.name(a) + " is a down-beat point"});
            }
        }
    }
}

}  // namespace

LemmaReport lemma_diagnostics(const Poset& p) {
    LemmaReport rep;
    if (p.n == 0) return rep;
    LevelData d = levels(p);

    // L31 (self-dual: both inequalities stated): every comparable pair
    // b < a in a minimal space satisfies the two strict-set gaps.
    for (int b = 0; b < p.n; ++b) {
        for (unsigned w = p.up[b]; w;) {
            int a = std::countr_zero(w);
            w &= w - 1;
            int da = std::popcount(p.down[a]), db = std::popcount(p.down[b]);
            int ub = std::popcount(p.up[b]), ua = std::popcount(p.up[a]);
            if (da < db + 2 || ub < ua + 2) {
                rep.findings.push_back(
                    {Lemma::L31, false, {b, a},
                     p.name(b) + " < " + p.name(a) + ": |strict_down(" + p.name(a) + ")| = " +
                         std::to_string(da) + ", |strict_down(" + p.name(b) + ")| = " +
                         std::to_string(db) + ", |strict_up(" + p.name(b) + ")| = " +
                         std::to_string(ub) + ", |strict_up(" + p.name(a) + ")| = " +
                         std::to_string(ua)});
            }
        }
    }

    // L33 (self-dual by contraposition): two middles sharing two upper
    // covers cannot also share two lower ones.
    for (int i = 0; i < d.r; ++i) {
        for (int k = i + 1; k < d.r; ++k) {
            int bi = d.b_elems[i], bk = d.b_elems[k];
            Mask fu = static_cast<Mask>((p.up[bi] | bit(bi)) & (p.up[bk] | bit(bk)));
            Mask du = static_cast<Mask>((p.down[bi] | bit(bi)) & (p.down[bk] | bit(bk)));
            if (std::popcount(fu) >= 2 && std::popcount(du) >= 2) {
                rep.findings.push_back({Lemma::L33, false, {bi, bk},
                                        p.name(bi) + ", " + p.name(bk) +
                                            ": shared up-sets and shared down-sets both have >= 2 elements"});
            }
        }
    }

    // Iso / Beat / FullL on both sides.
    check_one_side(p, d, false, rep.findings);
    {
        Poset pd = dual(p);
        LevelData dd = levels(pd);
        check_one_side(pd, dd, true, rep.findings);
    }

    // Naked (self-dual): a naked edge lying on any cycle of the
    // comparability graph carries a 1-cycle whose [c,a] coefficient is
    // nonzero, and no triangle contains the edge, so the class cannot
    // bound.
    for (auto& [c, a] : d.naked_edges) {
        if (connected_avoiding(p, c, a, c, a)) {
            rep.findings.push_back({Lemma::Naked, false, {c, a},
                                    "naked edge {" + p.name(c) + "," + p.name(a) +
                                        "} lies on a cycle: non-bounding 1-cycle exists"});
        }
    }

    // Size: ten-point candidates need |C| >= 3, |A| >= 3, |B| <= 4.
    if (p.n == 10) {
        if (d.m < 3 || d.n < 3 || d.r > 4) {
            rep.findings.push_back({Lemma::Size, false, {},
                                    "layer vector (" + std::to_string(d.m) + "," +
                                        std::to_string(d.r) + "," + std::to_string(d.n) +
                                        ") outside |C| >= 3, |A| >= 3, |B| <= 4"});
        }
    }
    return rep;
}

}  // namespace finspace
