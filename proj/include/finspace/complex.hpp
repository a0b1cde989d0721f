/**
 * Order complexes and Euler characteristic arithmetic.
 *
 * A simplicial complex is stored as its simplices grouped by
 * dimension; every simplex is a strictly increasing vertex-id list and
 * every per-dimension list is sorted lexicographically, so simplex
 * identity is deterministic and face lookups are binary searches.
 * All counts are exact integers; nothing here uses floating point.
 */
#ifndef FINSPACE_COMPLEX_HPP
#define FINSPACE_COMPLEX_HPP

#include <string>
#include <vector>

#include "finspace/poset.hpp"
#include "finspace/structure.hpp"

namespace finspace {

struct DimensionOutOfRange : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct EmptyComplex : Error { using Error::Error; };

/** A simplex as its strictly increasing vertex ids. */
using Simplex = std::vector<int>;

struct SimplicialComplex {
    /** Vertex ids are drawn from 0..n_verts-1 (ids of the source poset). */
    int n_verts = 0;
    /** simplices[k]: all k-simplices, lexicographically sorted. */
    std::vector<std::vector<Simplex>> simplices;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    bool contains(const Simplex& s) const;
    /** Total number of simplices over all dimensions. */
    std::size_t size() const;

    bool operator==(const SimplicialComplex& o) const { return simplices == o.simplices; }
};

/**
 * The order complex: one k-simplex per (k+1)-element chain, written in
 * increasing vertex-id order.  Throws EmptyPoset when n = 0.
 */
SimplicialComplex order_complex(const Poset& p);

/** Simplex counts (f_0, ..., f_dim). */
std::vector<long long> f_vector(const SimplicialComplex& k);

/** Sum of (-1)^k f_k. */
long long euler_char(const SimplicialComplex& k);

/**
 * Closed-form Euler characteristic for an antichain middle layer:
 * (m+r+n) - (sum(beta_j + alpha_j) + C_ca) + sum(beta_j * alpha_j).
 * Throws PreconditionViolated when E_B is nonempty.
 */
long long euler_formula_antichain(const LevelData& d);

/**
 * Closed-form Euler characteristic when B contains no 3-chain, from
 * the four closed-form simplex counts
 *   f0 = m+r+n
 *   f1 = sum(beta) + |E_B| + sum(alpha) + C_ca
 *   f2 = sum(beta_j alpha_j) + sum_{(i,k) in E_B}(beta_i + alpha_k)
 *   f3 = sum_{(i,k) in E_B} beta_i alpha_k.
 * Throws PreconditionViolated when B contains a 3-chain.
 */
long long euler_formula_h3(const LevelData& d);

/**
 * Dump format: `dim <d>`, then one line `k: v0 v1 ... vk` per simplex
 * in dimension order; used by golden tests.
 */
std::string dump(const SimplicialComplex& k);

}  // namespace finspace

#endif  // FINSPACE_COMPLEX_HPP
