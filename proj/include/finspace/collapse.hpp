/**
 * Elementary-collapse engine: free-pair detection, step validation on
 * a mutable working copy, certificate replay with the implicit
 * tree-collapse phase, and a deterministic greedy search with optional
 * bounded backtracking.
 *
 * Certificate file format: one step per line,
 *     collapse <v0> <v1> ... / <u0> <u1> ...
 * listing sigma's vertices, a slash, then tau's vertices.
 */
#ifndef FINSPACE_COLLAPSE_HPP
#define FINSPACE_COLLAPSE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "finspace/complex.hpp"
#include "finspace/poset.hpp"

namespace finspace {

struct NotAFreeFace : Error { using Error::Error; };
struct MissingSimplex : Error { using Error::Error; };
struct NotATree : Error { using Error::Error; };

/** Remove sigma together with its free face tau (|sigma| = |tau| + 1). */
struct CollapseStep {
    Simplex sigma;
    Simplex tau;

    bool operator==(const CollapseStep& o) const = default;
};

struct CollapseOutcome {
    bool collapsed_to_point = false;
    std::vector<CollapseStep> steps_taken;
    /** The complex left behind: a single vertex on success. */
    SimplicialComplex residual;
    /**
     * For certificate replay: the edges of the spanning tree left
     * after the supplied steps, before the synthesized leaf phase.
     */
    std::vector<Simplex> tree_edges;
};

/**
 * All currently valid collapse pairs, ordered by dimension descending
 * then (sigma, tau) lexicographically.
 */
std::vector<CollapseStep> free_pairs(const SimplicialComplex& kx);

/**
 * Apply one step in place.  Throws MissingSimplex when sigma or tau is
 * absent and NotAFreeFace when tau has another cofacet (or the pair is
 * malformed).
 */
void apply_step(SimplicialComplex& kx, const CollapseStep& step);

/**
 * Replay an externally supplied certificate on the order complex of p:
 * apply every step (errors gain a "step <i>:" prefix, 1-based), check
 * the residual is a spanning tree of the vertex set (NotATree
 * otherwise), then synthesize the leaf collapses down to a point.  The
 * returned log contains the supplied steps plus the leaf steps.
 */
CollapseOutcome verify_certificate(const Poset& p, const std::vector<CollapseStep>& steps);

/**
 * Deterministic greedy collapse: repeatedly apply the first free pair
 * (highest dimension, least (sigma, tau)).  With backtrack_depth > 0,
 * alternatives are explored at recursion depths below the bound; the
 * search gives up after an internal node budget.  Success implies
 * collapsibility; a stuck residual is inconclusive for contractibility.
 */
CollapseOutcome greedy_collapse(const SimplicialComplex& kx, int backtrack_depth = 0);

std::vector<CollapseStep> parse_certificate(std::istream& in);
std::vector<CollapseStep> parse_certificate_string(const std::string& text);
std::vector<CollapseStep> parse_certificate_file(const std::string& path);
std::string format_certificate(const std::vector<CollapseStep>& steps);

}  // namespace finspace

#endif  // FINSPACE_COLLAPSE_HPP
