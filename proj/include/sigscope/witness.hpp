#pragma once

#include <vector>

#include "sigscope/check.hpp"
#include "sigscope/ideal.hpp"
#include "sigscope/ntree.hpp"
#include "sigscope/pairtree.hpp"

namespace sigscope {

// Certificate of positivity: a uniformizing subtree w of the host pair tree
// whose first-coordinate tree tx is perfect with ideal-large branching.
// embedding maps each w state to the host state it plays.
struct WitnessPairTree {
    PairTree w;
    NTree tx;
    std::vector<int> embedding;
};

// Build a witness from the pair kernel of a pruned nonempty tree. Fails with
// NotPositive when the start is outside the kernel.
WitnessPairTree build_witness(const PairTree& s, const Ideal& ideal);

// Recheck a witness against its host from first principles: embedding
// legality, uniformity, prunedness, perfection and large branching of tx,
// tx consistent with w, and sampled containment of tx in the host's first
// coordinates.
CheckReport verify_witness(const PairTree& host, const WitnessPairTree& wit, const Ideal& ideal,
                           int depth = kVerifyDepth, Letter letters = kVerifyLetterBound);

}  // namespace sigscope
