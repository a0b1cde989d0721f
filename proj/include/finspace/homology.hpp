/**
 * Exact integral simplicial homology.
 *
 * Boundary matrices are built over arbitrary-precision integers and
 * diagonalized by Smith normal form, so Betti numbers and torsion
 * coefficients are exact; boundary-membership queries (is a given
 * cycle a boundary?) solve the integer linear system through the same
 * decomposition.  Everything is a pure function of its arguments.
 */
#ifndef FINSPACE_HOMOLOGY_HPP
#define FINSPACE_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "finspace/complex.hpp"
#include "finspace/poset.hpp"

namespace finspace {

struct NotACycle : Error { using Error::Error; };
struct UnknownSimplex : Error { using Error::Error; };
struct SizeLimitExceeded : Error { using Error::Error; };

/** Exact integer; never overflows, never wraps. */
using Int = boost::multiprecision::cpp_int;

/** Dense exact-integer matrix, row-major. */
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
};

/**
 * The boundary operator from k-simplices to (k-1)-simplices: entry
 * (-1)^i for the face omitting vertex i of the sorted simplex, so
 * d[c,b,a] = [b,a] - [c,a] + [c,b].  Requires 1 <= k <= dim.
 */
IntMatrix boundary_matrix(const SimplicialComplex& kx, int k);

struct SmithResult {
    /** Invariant factors d_1 | d_2 | ... | d_r, all positive. */
    std::vector<Int> divisors;
    int rank = 0;
};

/**
 * Smith normal form.  When `left` is non-null it receives the
 * unimodular row transform U with U*M*V diagonal, which is what the
 * integer solver needs (M x = b is solvable iff U b is compatible
 * with the diagonal).
 */
SmithResult smith_normal_form(const IntMatrix& m, IntMatrix* left = nullptr);

struct HomologyProfile {
    /** betti[k] for 0 <= k <= dim of the complex. */
    std::vector<long long> betti;
    /** torsion[k]: invariant factors > 1 of the (k+1)-boundary. */
    std::vector<std::vector<Int>> torsion;
    /** betti_0 = 1, every higher group zero, no torsion. */
    bool reduced_trivial = false;
};

/** Homology of the whole complex. Throws EmptyComplex. */
HomologyProfile homology(const SimplicialComplex& kx);

/** Report rendering: one `H<k>: Z^<betti> (+ Z/<d> ...)` line per dimension. */
std::string to_string(const HomologyProfile& h);

/** A formal integer combination of equi-dimensional simplices. */
using Chain = std::vector<std::pair<Simplex, long long>>;

/**
 * Is the given k-cycle the boundary of some (k+1)-chain over the
 * integers?  Throws UnknownSimplex if a simplex is not in the complex
 * and NotACycle if the chain's boundary is nonzero.
 */
bool is_boundary(const SimplicialComplex& kx, const Chain& z);

/**
 * The complete homotopical-triviality test for |X| <= 12: the order
 * complex is connected (checked by traversal, independently of the
 * homology leg) and has trivial reduced integral homology.  Refuses
 * larger inputs (SizeLimitExceeded) where the test would be unsound.
 */
bool is_homotopically_trivial(const Poset& p);

}  // namespace finspace

#endif  // FINSPACE_HOMOLOGY_HPP
