/**
 * Isomorph-free enumeration of finite posets and the classification
 * pipeline: enumerate, filter to spaces with no beat points, decide
 * homotopical triviality, and match the ten-point survivors against
 * the built-in type fixtures.
 */
#ifndef FINSPACE_CLASSIFY_HPP
#define FINSPACE_CLASSIFY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "finspace/homology.hpp"
#include "finspace/poset.hpp"

namespace finspace {

struct UnmatchedSurvivor : Error { using Error::Error; };

enum class TypeLabel { I, II, III, IV, V, VI, VII, Iop, IIop, IIIop, Unmatched };

std::string type_name(TypeLabel t);

/** One surviving space with everything a report line needs. */
struct ClassificationRecord {
    CanonicalForm canon;
    std::array<int, 3> layer_vector{};  // (|C|, |B|, |A|)
    int height = 0;
    bool antichain_B = false;
    int D = 0;
    std::vector<int> beta_multiset, alpha_multiset;  // sorted
    std::vector<int> s_multiset, t_multiset;         // sorted
    HomologyProfile profile;
    TypeLabel matched_type = TypeLabel::Unmatched;
    CanonicalForm dual_canon;
    bool self_dual = false;
    bool greedy_collapsed = false;
    int collapse_steps = 0;
};

struct CensusStats {
    int n = 0;
    std::uint64_t total = 0;      // unlabeled posets
    std::uint64_t minimal = 0;    // posets with no beat points
    std::uint64_t survivors = 0;  // minimal, non-contractible, homotopically trivial
    std::map<int, std::uint64_t> by_middle;  // |B| -> survivor count
};

struct EnumOptions {
    int jobs = 1;
    /** 0 = unlimited; otherwise an estimated cap on dedup-set bytes. */
    std::uint64_t max_mem_bytes = 0;
};

/**
 * Stream exactly one representative per isomorphism class of n-element
 * posets into `sink` and return the class count.  Representatives are
 * canonical-form decodings; the delivery order is unspecified (counts
 * and the set of forms are independent of `jobs`).  Generation extends
 * every (n-1)-class by a new maximal element over each down-closed
 * subset, deduplicating per level by canonical form; the memory cap
 * triggers ResourceLimit.
 */
std::uint64_t enumerate_posets(int n, const std::function<void(const Poset&)>& sink,
                               const EnumOptions& opts = {});

/** Convenience: all representatives collected, sorted by canonical code. */
std::vector<Poset> enumerate_posets(int n, const EnumOptions& opts = {});

/** The posets with no beat points, in input order. */
std::vector<Poset> filter_minimal(const std::vector<Poset>& posets);

/**
 * The full pipeline at size n (throws SizeLimitExceeded for n > 12):
 * census stats plus one record per survivor, sorted by canonical code.
 * Ten-point survivors are matched against the built-in fixtures; an
 * unmatched ten-point survivor throws UnmatchedSurvivor.
 */
std::pair<CensusStats, std::vector<ClassificationRecord>> classify(int n,
                                                                   const EnumOptions& opts = {});

/**
 * Fill matched_type by canonical-form equality against the ten
 * built-in fixtures.  A ten-point record matching none throws
 * UnmatchedSurvivor; records of other sizes are labelled Unmatched
 * quietly (no fixtures exist off ten points).
 */
void match_types(std::vector<ClassificationRecord>& records);

}  // namespace finspace

#endif  // FINSPACE_CLASSIFY_HPP
