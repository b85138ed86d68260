#pragma once

#include <vector>

#include "sigscope/arith.hpp"
#include "sigscope/ntree.hpp"
#include "sigscope/pairtree.hpp"

namespace sigscope {

// Behavior basis for the first-coordinate letters of a tree. Letters below
// the horizon act individually; letters at or above it act through their
// residue mod the lcm of every tail modulus in sight.
struct LetterCollapse {
    Letter horizon = 1;
    Letter lcm = 1;

    // Least letter >= horizon congruent to r, one per residue class.
    Letter rep(Letter r) const;
    // The tail class a representative stands for: everything >= rep(r) in its
    // residue class. Exact because rep(r) is the least such letter.
    ArithClass rep_class(Letter r) const;
};

LetterCollapse x_collapse(const PairTree& s);
LetterCollapse letter_collapse(const NTree& t);
LetterCollapse merge_collapse(const LetterCollapse& a, const LetterCollapse& b);

inline constexpr int kSubsetBudget = 100000;

// The tree of first coordinates of a nonempty pruned pair tree, presented by
// subset construction over the collapsed alphabet. Every string accepted by
// the result is the first coordinate of a member pair and vice versa.
NTree project(const PairTree& s);

// Letter-deterministic presentation of the union of the given trees.
NTree ntree_union(const std::vector<NTree>& trees);

}  // namespace sigscope
