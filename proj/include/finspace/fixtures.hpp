/**
 * Built-in fixtures: the ten classified ten-point spaces (Types I-VII
 * and the duals of I-III) with their display labels, the seven
 * published collapse certificates, and the two negative-witness posets
 * used by the homology tests.
 *
 * Element ids run C-block, then B-block, then A-block (c1 = 0, ...).
 */
#ifndef FINSPACE_FIXTURES_HPP
#define FINSPACE_FIXTURES_HPP

#include <vector>

#include "finspace/classify.hpp"
#include "finspace/collapse.hpp"
#include "finspace/poset.hpp"

namespace finspace {

struct Fixture {
    TypeLabel label;
    Poset poset;
};

/** The displayed poset of one classified type (duals for Iop..IIIop). */
Poset type_poset(TypeLabel t);

/** All ten classified fixtures, in TypeLabel order I..VII, Iop..IIIop. */
std::vector<Fixture> builtin_fixtures();

/**
 * The published triangle-collapse sequence for Types I..VII (the tree
 * phase is synthesized by verify_certificate).  Throws Error for the
 * dual types, which have no separately published sequence.
 */
std::vector<CollapseStep> builtin_certificate(TypeLabel t);

/**
 * A ten-point height-2 poset with a middle 4-cycle whose hexagonal
 * 1-cycle is not a boundary: the standard non-trivial witness.
 */
Poset witness_cycle_poset();

/** The 1-cycle of witness_cycle_poset() that fails is_boundary. */
Chain witness_cycle();

/**
 * A ten-point height-3 poset whose order complex has a 3-cycle that
 * cannot bound (the top boundary map is zero), so rank H_3 >= 1.
 */
Poset witness_h3_poset();

}  // namespace finspace

#endif  // FINSPACE_FIXTURES_HPP
