#pragma once

#include <vector>

#include "sigscope/ideal.hpp"
#include "sigscope/ntree.hpp"
#include "sigscope/pairtree.hpp"

namespace sigscope {

struct KernelResult {
    std::vector<char> kernel;  // indicator over states
    bool start_in_kernel = false;
    int iterations = 0;
};

// Greatest fixpoint of the operator keeping a state iff it can reach (along
// any rules, reflexively) a state whose successor family into the kept set is
// not ideal-small. The start lies in the kernel exactly when the denoted tree
// has an ideal-positive subtree.
KernelResult positive_kernel(const NTree& t, const Ideal& ideal);

// Same operator with first-coordinate families of a pair tree.
KernelResult pair_kernel(const PairTree& s, const Ideal& ideal);

inline constexpr int kOracleStateCap = 12;

// Independent computation of the same fixpoints as the union of all
// post-fixpoints, by direct subset enumeration. Exponential; refuses trees
// with more than kOracleStateCap states.
std::vector<char> kernel_oracle(const NTree& t, const Ideal& ideal);
std::vector<char> pair_kernel_oracle(const PairTree& s, const Ideal& ideal);

}  // namespace sigscope
