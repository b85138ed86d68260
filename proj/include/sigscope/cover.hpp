#pragma once

#include <vector>

#include "sigscope/check.hpp"
#include "sigscope/ideal.hpp"
#include "sigscope/ntree.hpp"
#include "sigscope/pairtree.hpp"

namespace sigscope {

enum class CoverMode {
    LetterBound,    // bound first coordinates at large-family states of the host
    DerivedPieces,  // same bound applied piecewise to visiting subtrees
};

// Certificate of smallness: an increasing family of ideal-small trees T_n,
// generated on demand from the stored source, whose union holds every first
// coordinate of the host.
struct CoverScheme {
    CoverMode mode = CoverMode::LetterBound;
    PairTree source;
    std::vector<PairTree> pieces;
    Ideal ideal;
};

// Kernel-gated construction; fails with NotSmall when the start sits in the
// kernel, since no ideal-small family can then cover the projection.
CoverScheme build_cover(const PairTree& s, const Ideal& ideal);

// The same scheme without the kernel gate. Exists so tests can demonstrate
// how the scheme leaks on a positive tree.
CoverScheme cover_scheme_unchecked(const PairTree& s, const Ideal& ideal);

CoverScheme build_cover_pieces(std::vector<PairTree> pieces, const Ideal& ideal);

// n-th tree of the family.
NTree cover_tree(const CoverScheme& scheme, Letter n);

// Recheck a scheme against its host: every T_n ideal-small state by state,
// snapshots monotone in n, and every sampled first coordinate of the host
// covered by some T_n.
CheckReport verify_cover(const PairTree& host, const CoverScheme& scheme, const Ideal& ideal,
                         int depth = kVerifyDepth, Letter letters = kVerifyLetterBound,
                         Letter nmax = kVerifyNMax);

}  // namespace sigscope
