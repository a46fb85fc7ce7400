#pragma once

// Test-side oracles, implemented independently of the library internals they
// check. Only the event-list representation is shared.

#include "legrep/front.hpp"
#include "legrep/laurent.hpp"

#include <random>

namespace legrep::oracles {

// Jones polynomial of the smooth knot behind a front, as a Laurent
// polynomial in A with t = A^-4 (Kauffman bracket state sum; the descending
// strand is the overstrand). Requires a validated single-component front.
LaurentZ jones_in_A(const FrontDiagram& fd);

// Expected values.
LaurentZ jones_unknot();
LaurentZ jones_trefoil_rh();
LaurentZ jones_trefoil_lh();
LaurentZ jones_figure8();

// Random valid plat front (single basepoint, all strands closed); the caller
// filters for component count or rotation number as needed.
FrontDiagram random_front(std::mt19937& rng, int max_strands = 6, int max_events = 14);

} // namespace legrep::oracles
