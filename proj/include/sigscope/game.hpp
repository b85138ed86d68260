#pragma once

#include <optional>

#include "sigscope/ntree.hpp"
#include "sigscope/point.hpp"

namespace sigscope {

struct GameResult {
    bool contained = true;
    std::optional<EPPoint> counterexample;  // a branch of the left tree outside the right
    int positions_explored = 0;
};

// Does every branch of left lie in the denoted set of right? Both trees must
// be pruned. Decided by reachability in the deterministic product over the
// merged collapsed alphabet; a violation yields an eventually periodic branch
// of left with a finite prefix that right rejects.
GameResult closure_contained(const NTree& left, const NTree& right);

// The lexicographically least branch of a nonempty pruned tree: repeatedly
// take the least legal letter until a state repeats.
EPPoint least_branch(const NTree& t);

}  // namespace sigscope
