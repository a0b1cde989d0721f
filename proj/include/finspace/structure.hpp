/**
 * Structural analysis of finite posets: beat points and Stong cores,
 * minimality/contractibility, the three-layer (C, B, A) decomposition
 * with its degree data, the transitive/naked edge accounting, and the
 * lemma-based diagnostics used as cross-checks on census candidates.
 *
 * All functions are pure; they never mutate their inputs.
 */
#ifndef FINSPACE_STRUCTURE_HPP
#define FINSPACE_STRUCTURE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "finspace/poset.hpp"

namespace finspace {

struct NotABeatPoint : Error { using Error::Error; };
struct HeightTooSmall : Error { using Error::Error; };

/**
 * The three-layer decomposition of a poset and every quantity the
 * budget arguments use.
 *
 * C is the set of minimal elements, A the maximal elements that are
 * not also minimal, B the rest, so (C, B, A) always partitions the
 * ground set and m + r + n = |X| (isolated points land in C).  All
 * comparability data (L_j, U_j, E_B, C_ca, reach) is taken in the full
 * order, including pairs only related through other middles.
 */
struct LevelData {
    Mask C = 0, B = 0, A = 0;
    int m = 0, r = 0, n = 0;  // |C|, |B|, |A|

    std::vector<int> c_elems, b_elems, a_elems;  // ascending element ids

    // Per middle j (indexing b_elems): comparable sets into C and A.
    std::vector<Mask> L, U;
    std::vector<int> beta, alpha;  // |L_j|, |U_j|

    // Comparable pairs inside B as (i, k) index pairs with b_i < b_k.
    std::vector<std::pair<int, int>> E_B;

    int C_ca = 0;  // number of comparable C x A pairs

    std::vector<int> s;  // per a_elems index: #middles below a
    std::vector<int> t;  // per c_elems index: #middles above c

    std::vector<Mask> M;  // per c_elems index: reach M(c) = union of U_j over c in L_j
    int T_tr = 0;         // sum of |M(c)|
    int D = 0;            // C_ca - T_tr = number of naked edges
    bool infeasible = false;  // T_tr > C_ca: cannot arise from an actual poset

    // Every comparable (c, a) pair, tagged; element-id pairs in lex order.
    std::vector<std::pair<int, int>> naked_edges;
    std::vector<std::pair<int, int>> transitive_edges;
};

/**
 * Beat points with their witnesses: (x, w) is an up-beat entry when w
 * is the minimum of the strict up-set of x, a down-beat entry when w
 * is the maximum of the strict down-set of x.
 */
struct BeatReport {
    std::vector<std::pair<int, int>> up_beats;
    std::vector<std::pair<int, int>> down_beats;

    bool empty() const { return up_beats.empty() && down_beats.empty(); }
    /** Distinct beat elements, ascending. */
    std::vector<int> elements() const;
};

/** Full layer decomposition; throws EmptyPoset when n = 0. */
LevelData levels(const Poset& p);

BeatReport beat_points(const Poset& p);

/** Remove element x, which must appear in beat_points(p). */
Poset remove_beat(const Poset& p, int x);

/**
 * Iterated beat-point removal until none remains.  The default picks
 * the smallest beat element each round; the second overload lets the
 * caller pick among the current beat elements (for order-independence
 * tests) and receives them in ascending order.
 */
Poset core(const Poset& p);
Poset core(const Poset& p, const std::function<int(const std::vector<int>&)>& pick);

/** True iff the core is a single point. Throws EmptyPoset when n = 0. */
bool is_contractible(const Poset& p);

/** True iff the poset has no beat points (equals its core). */
bool is_minimal_space(const Poset& p);

/**
 * Layer decomposition with the naked/transitive annotation required
 * present: throws HeightTooSmall when the poset has no comparable pair
 * at all (height 0).  With B empty every comparable C x A pair is
 * naked by convention (no middle can witness it).
 */
LevelData classify_edges(const Poset& p);

/** The naked-edge budget D = C_ca - T_tr of classify_edges(p). */
int budget(const Poset& p);

// ---------------------------------------------------------------------------
// Lemma diagnostics
// ---------------------------------------------------------------------------

enum class Lemma {
    L31,    // minimal, b < a: |strict_down(a)| >= |strict_down(b)|+2 and dually
    L33,    // height 2, trivial: |F_b ^ F_b'| >= 2 implies |U_b ^ U_b'| <= 1
    Iso,    // s(a) = 0 implies at least two elements of C below a
    Beat,   // s(a) = 1 via b_k implies some c in C \ L_k below a
    FullL,  // L_k = C and s(a) = 1 via b_k implies a is a down-beat point
    Naked,  // a naked edge on a graph cycle carries a non-bounding 1-cycle
    Size,   // |X| = 10 candidates: |C| >= 3, |A| >= 3, |B| <= 4
};

std::string lemma_name(Lemma l);

/**
 * One violated lemma conclusion.  `on_dual` marks findings obtained by
 * running a one-sided check on the dual poset (element ids refer to
 * the original poset either way).
 */
struct LemmaFinding {
    Lemma lemma;
    bool on_dual = false;
    std::vector<int> elems;
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaFinding> findings;
    bool all_clear() const { return findings.empty(); }
};

/**
 * Evaluate every lemma conclusion that applies structurally and report
 * violations.  The lemmas' hypotheses (minimality, homotopical
 * triviality) are the caller's claim about the input: on a poset that
 * genuinely satisfies them, any finding certifies it cannot survive
 * classification; on other inputs findings are merely informative.
 * Diagnostics never gate the pipeline and never compute homology.
 */
LemmaReport lemma_diagnostics(const Poset& p);

}  // namespace finspace

#endif  // FINSPACE_STRUCTURE_HPP
