#include "sigscope/cover.hpp"

#include <algorithm>

#include "sigscope/errors.hpp"
#include "sigscope/kernel.hpp"
#include "sigscope/project.hpp"
#include "sigscope/snapshot.hpp"

namespace sigscope {

namespace {

// Drop every first coordinate above n at states whose full family is not
// ideal-small; class members below the bound become explicit moves.
PairTree restrict_letters(const PairTree& s, const Ideal& ideal, Letter n) {
    PairTree out;
    if (s.is_empty()) return out;
    for (int q = 0; q < s.state_count(); ++q) out.add_state(s.state(q).name);
    out.set_start(s.start());
    for (int q = 0; q < s.state_count(); ++q) {
        const PairState& st = s.state(q);
        if (ideal_member(s.x_family(q), ideal)) {
            for (const auto& e : st.edges) out.add_edge(q, e.x, e.y, e.target);
            for (const auto& m : st.xtails) out.add_xtail(q, m.xcls, m.y, m.target);
            for (const auto& m : st.ytails) out.add_ytail(q, m.x, m.ycls, m.target);
            for (const auto& m : st.diags) out.add_diag(q, m.cls, m.target);
            continue;
        }
        for (const auto& e : st.edges)
            if (e.x <= n) out.add_edge(q, e.x, e.y, e.target);
        for (const auto& m : st.xtails)
            for (Letter a : EPSet::of_class(m.xcls).members_upto(n))
                out.add_edge(q, a, m.y, m.target);
        for (const auto& m : st.ytails)
            if (m.x <= n) out.add_ytail(q, m.x, m.ycls, m.target);
        for (const auto& m : st.diags)
            for (Letter a : EPSet::of_class(m.cls).members_upto(n))
                out.add_edge(q, a, a, m.target);
    }
    return pair_prune(out);
}

NTree bounded_projection(const PairTree& s, const Ideal& ideal, Letter n) {
    PairTree r = restrict_letters(s, ideal, n);
    if (r.is_empty()) return NTree::empty_tree();
    return project(r);
}

}  // namespace

CoverScheme cover_scheme_unchecked(const PairTree& s, const Ideal& ideal) {
    CoverScheme scheme;
    scheme.mode = CoverMode::LetterBound;
    scheme.source = pair_prune(s);
    scheme.ideal = ideal;
    return scheme;
}

CoverScheme build_cover(const PairTree& s, const Ideal& ideal) {
    PairTree pruned = pair_prune(s);
    if (!pruned.is_empty() && pair_kernel(pruned, ideal).start_in_kernel)
        fail(Errc::NotSmall, "start state sits in the kernel; no small cover exists");
    return cover_scheme_unchecked(pruned, ideal);
}

CoverScheme build_cover_pieces(std::vector<PairTree> pieces, const Ideal& ideal) {
    CoverScheme scheme;
    scheme.mode = CoverMode::DerivedPieces;
    scheme.pieces = std::move(pieces);
    scheme.ideal = ideal;
    return scheme;
}

NTree cover_tree(const CoverScheme& scheme, Letter n) {
    if (scheme.mode == CoverMode::LetterBound) {
        if (scheme.source.is_empty()) return NTree::empty_tree();
        return bounded_projection(scheme.source, scheme.ideal, n);
    }
    std::vector<NTree> parts;
    for (const PairTree& piece : scheme.pieces) {
        NTree t = bounded_projection(piece, scheme.ideal, n);
        if (!t.is_empty()) parts.push_back(t);
    }
    return ntree_union(parts);
}

CheckReport verify_cover(const PairTree& host, const CoverScheme& scheme, const Ideal& ideal,
                         int depth, Letter letters, Letter nmax) {
    CheckReport rep;
    Letter bound = letters;

    std::vector<NTree> trees;
    for (Letter n = 0; n <= nmax; ++n) trees.push_back(cover_tree(scheme, n));

    for (Letter n = 0; n <= nmax; ++n)
        for (int q = 0; q < trees[n].state_count(); ++q)
            if (!ideal_member(trees[n].successor_family(q), ideal))
                rep.add("cover tree " + std::to_string(n) + " has a large family at state " +
                        trees[n].state(q).name);

    for (Letter n = 0; n < nmax; ++n) {
        LetterSet samples = extended_letters(trees[n], bound);
        for (Letter a : extended_letters(trees[n + 1], bound)) samples.push_back(a);
        std::sort(samples.begin(), samples.end());
        samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
        if (!snapshot_within(trees[n], trees[n + 1], samples, depth))
            rep.add("cover tree " + std::to_string(n + 1) + " loses strings of cover tree " +
                    std::to_string(n));
    }

    LetterSet probe = interval_letters(bound);
    int listed = 0;
    for (const auto& xs : proj_snapshot_pair(host, probe, depth)) {
        bool covered = false;
        for (Letter n = 0; n <= nmax && !covered; ++n)
            covered = contains_string(trees[n], xs);
        if (!covered && listed++ < 5) {
            std::string word;
            for (Letter a : xs) word += (word.empty() ? "" : ",") + std::to_string(a);
            rep.add("projected string <" + word + "> is covered by no cover tree");
        }
    }

    return rep;
}

}  // namespace sigscope
