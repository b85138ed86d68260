#pragma once

#include <string>
#include <vector>

#include "sigscope/pairtree.hpp"

namespace sigscope {

enum class RemovalReason {
    ClosureContained,  // branches through the state project into the closure of the
                       // original projection
    Pruned,            // died or became unreachable once other states left
};

struct Removal {
    int stage;  // the first stage the state is absent from
    std::string state;
    RemovalReason reason;
};

struct DerivativeTrace {
    std::vector<PairTree> stages;  // stage 0 is the pruned input
    std::vector<Removal> removals;
    bool stabilized = false;
    int lambda = -1;  // least index with stage == next stage; -1 if cut off
    int game_calls = 0;
};

// Iterate the state derivative: at each stage drop every state whose visiting
// subtree projects inside the closure of the original projection, then prune,
// until the sequence stabilizes or max_depth stages have been produced.
DerivativeTrace derive_sequence(const PairTree& s, int max_depth);

// The visiting subtree a ClosureContained removal was judged by.
PairTree removal_piece(const DerivativeTrace& trace, const Removal& removal);

}  // namespace sigscope
