#pragma once

#include "sigscope/pairtree.hpp"
#include "sigscope/point.hpp"

namespace sigscope {

struct UniformizeResult {
    EPPoint y;
    // Some step of the run offered infinitely many legal second coordinates;
    // the chosen section is still pointwise least, but the fiber over x is
    // not compact.
    bool noncompact_warning = false;
    long long walk_steps = 0;
};

// Pointwise least second coordinate over the eventually periodic first
// coordinate x: at every step take the smallest y that keeps the rest of x
// realizable. Fails with EmptySection when x is not a projected branch.
UniformizeResult leftmost_uniformize(const PairTree& s, const EPPoint& x);

}  // namespace sigscope
