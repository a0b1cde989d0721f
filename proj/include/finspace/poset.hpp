/**
 * Core finite-poset value type.
 *
 * A finite T0-space is stored as its specialisation order: a strict
 * partial order on {0, ..., n-1} with n <= 16, kept as one bit-row per
 * element in both directions so that closure, subset and degree tests
 * are single-word operations.  Posets are immutable after construction;
 * every function here is safe to call concurrently on shared values.
 */
#ifndef FINSPACE_POSET_HPP
#define FINSPACE_POSET_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finspace {

/** Base class of all errors thrown by this library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleDetected : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct EmptyPoset : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };

/** Maximum number of elements representable (one bit-row per machine word). */
inline constexpr int kMaxElements = 16;

/** Subset of {0,...,15} as a bit mask. */
using Mask = std::uint16_t;

inline Mask bit(int i) { return static_cast<Mask>(1u << i); }

/** Elements of a mask in increasing order. */
std::vector<int> mask_elements(Mask m);

/**
 * A finite poset on elements 0..n-1.
 *
 * `up[i]` holds the strict successors of i (all j with i < j in the
 * order, including transitive ones) and `down[i]` the strict
 * predecessors; together they are the strict-order matrix.  The two
 * directions are kept consistent by every constructor function.
 * `labels` is optional display text, either empty or of size n.
 */
struct Poset {
    int n = 0;
    std::array<Mask, kMaxElements> up{};
    std::array<Mask, kMaxElements> down{};
    std::vector<std::string> labels;

    /** rel[i][j]: does i < j hold? No bounds checking. */
    bool less(int i, int j) const { return (up[i] >> j) & 1u; }
    bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

    Mask all_mask() const { return n >= 16 ? Mask(0xFFFFu) : Mask((1u << n) - 1u); }

    /** Display name of element i (its label, or the decimal index). */
    std::string name(int i) const;

    bool operator==(const Poset& o) const { return n == o.n && up == o.up; }
};

/**
 * Build a poset as the transitive closure of a cover/relation list.
 * Redundant (already implied) pairs are accepted and absorbed.
 *
 * Throws IndexOutOfRange if some i or j is outside 0..n-1, and
 * CycleDetected if the pairs imply i < i for some element.
 */
Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

/** The order dual: same elements, all comparabilities reversed. */
Poset dual(const Poset& p);

/**
 * The covering relation (Hasse diagram) of p: pairs (i, j) with i < j
 * and no element strictly between, in lexicographic order.
 */
std::vector<std::pair<int, int>> cover_pairs(const Poset& p);

/** {y : y >= x} including x itself (customarily written F_x). */
Mask up_set(const Poset& p, int x);
/** {y : y <= x} including x itself (customarily written U_x). */
Mask down_set(const Poset& p, int x);
/** {y : y > x} (the strict up-set, F^_x). */
Mask strict_up_set(const Poset& p, int x);
/** {y : y < x} (the strict down-set, U^_x). */
Mask strict_down_set(const Poset& p, int x);

/** Minimal / maximal elements as masks. */
Mask minimal_elements(const Poset& p);
Mask maximal_elements(const Poset& p);

/**
 * Length of the longest chain below x (0 for minimal elements); the
 * element's level in the layer decomposition.
 */
int level(const Poset& p, int x);

/** Maximum over maximal chains of (element count - 1). Throws EmptyPoset. */
int height(const Poset& p);

/** The n-element chain 0 < 1 < ... < n-1. */
Poset chain(int n);
/** The n-element antichain. */
Poset antichain(int n);

/** Induced subposet on the elements of `keep`, relabelled in increasing order. */
Poset induced_subposet(const Poset& p, Mask keep);

/** Image of p under the bijection i -> perm[i]. */
Poset relabel(const Poset& p, const std::vector<int>& perm);

/**
 * Complete isomorphism invariant: the lexicographically minimal
 * row-major encoding of the strict-order matrix over all vertex
 * permutations consistent with an iso-invariant refinement partition.
 *
 * The packed code orders canonical vertices by ascending level, so the
 * canonical index order is always a linear extension.  Equal codes
 * hold exactly for isomorphic posets; the code decodes back to a
 * representative via `poset_from_canonical`.
 */
struct CanonicalForm {
    std::uint8_t n = 0;
    /** n*n bits, row-major, packed MSB-first so word order = lexicographic order. */
    std::array<std::uint64_t, 4> bits{};

    auto operator<=>(const CanonicalForm&) const = default;

    /** The code as a byte sequence: n, then ceil(n*n/8) packed bytes. */
    std::vector<std::uint8_t> bytes() const;
    /** Hexadecimal rendering of bytes(), for reports. */
    std::string hex() const;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ c.n;
        for (std::uint64_t w : c.bits) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

CanonicalForm canonical_form(const Poset& p);

/** Decode a canonical code into its representative poset (no labels). */
Poset poset_from_canonical(const CanonicalForm& c);

/** canonical_form(p) == canonical_form(q), i.e. order isomorphism. */
bool is_isomorphic(const Poset& p, const Poset& q);

}  // namespace finspace

#endif  // FINSPACE_POSET_HPP
