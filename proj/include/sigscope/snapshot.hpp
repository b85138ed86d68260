#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "sigscope/arith.hpp"
#include "sigscope/ntree.hpp"
#include "sigscope/pairtree.hpp"

namespace sigscope {

// Finite letter alphabets used to sample trees at bounded depth.
using LetterSet = std::vector<Letter>;

// {0, ..., bound}
LetterSet interval_letters(Letter bound);

// Interval plus, for every tail class in the tree, a few members at and past
// the class threshold. Sampling over this alphabet separates trees whose tail
// classes differ even when every class member exceeds the interval.
LetterSet extended_letters(const NTree& t, Letter bound);
LetterSet extended_letters(const PairTree& s, Letter bound);

using StringSet = std::set<std::vector<Letter>>;
using PairSet = std::set<std::pair<std::vector<Letter>, std::vector<Letter>>>;

inline constexpr std::size_t kSnapshotBudget = 2'000'000;

// Members of tree(t) of length <= depth whose letters come from the alphabet.
StringSet snapshot_ntree(const NTree& t, const LetterSet& letters, int depth,
                         std::size_t budget = kSnapshotBudget);

// Pairs in the tree with both coordinates drawn from the alphabet.
PairSet snapshot_pair(const PairTree& s, const LetterSet& letters, int depth,
                      std::size_t budget = kSnapshotBudget);

// First coordinates: x-strings over the alphabet that some pair in the tree
// carries, with the second coordinate unconstrained.
StringSet proj_snapshot_pair(const PairTree& s, const LetterSet& letters, int depth,
                             std::size_t budget = kSnapshotBudget);

// Is xs the first coordinate of some pair in the tree? Second coordinate free.
bool pair_proj_contains(const PairTree& s, const std::vector<Letter>& xs);

// Decide snapshot equality (resp. inclusion) of two deterministic trees
// without materializing the string sets. The product walk is memoized on
// state pairs, so cost stays polynomial in the presentations even when the
// alphabet carries many class samples.
bool snapshots_agree(const NTree& a, const NTree& b, const LetterSet& letters, int depth);
bool snapshot_within(const NTree& inner, const NTree& outer, const LetterSet& letters, int depth);

}  // namespace sigscope
