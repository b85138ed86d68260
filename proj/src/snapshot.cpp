#include "sigscope/snapshot.hpp"

#include <algorithm>
#include <deque>

#include "sigscope/errors.hpp"

namespace sigscope {

LetterSet interval_letters(Letter bound) {
    LetterSet out;
    for (Letter a = 0; a <= bound; ++a) out.push_back(a);
    return out;
}

namespace {

void add_class_samples(LetterSet& out, const ArithClass& cls, Letter bound) {
    Letter lo = cls.least();
    out.push_back(lo);
    out.push_back(lo + cls.modulus);
    out.push_back(lo + 7 * cls.modulus);
    Letter hi = cls.least_above(bound);
    out.push_back(hi);
    out.push_back(hi + cls.modulus);
}

void finish(LetterSet& out) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

LetterSet extended_letters(const NTree& t, Letter bound) {
    LetterSet out = interval_letters(bound);
    for (int q = 0; q < t.state_count(); ++q)
        for (const auto& tl : t.state(q).tails) add_class_samples(out, tl.cls, bound);
    finish(out);
    return out;
}

LetterSet extended_letters(const PairTree& s, Letter bound) {
    LetterSet out = interval_letters(bound);
    for (int q = 0; q < s.state_count(); ++q) {
        const PairState& st = s.state(q);
        for (const auto& m : st.xtails) add_class_samples(out, m.xcls, bound);
        for (const auto& m : st.ytails) add_class_samples(out, m.ycls, bound);
        for (const auto& m : st.diags) add_class_samples(out, m.cls, bound);
    }
    finish(out);
    return out;
}

namespace {

void snap_ntree_rec(const NTree& t, const LetterSet& letters, int depth, int q,
                    std::vector<Letter>& word, StringSet& out, std::size_t& budget) {
    if (budget == 0) fail(Errc::BoundsTooLarge, "snapshot budget exhausted");
    --budget;
    out.insert(word);
    if (static_cast<int>(word.size()) >= depth) return;
    for (Letter a : letters) {
        int next = t.step(q, a);
        if (next < 0) continue;
        word.push_back(a);
        snap_ntree_rec(t, letters, depth, next, word, out, budget);
        word.pop_back();
    }
}

void snap_pair_rec(const PairTree& s, const LetterSet& letters, int depth, int q,
                   std::vector<Letter>& xs, std::vector<Letter>& ys, PairSet& out,
                   std::size_t& budget) {
    if (budget == 0) fail(Errc::BoundsTooLarge, "snapshot budget exhausted");
    --budget;
    out.insert({xs, ys});
    if (static_cast<int>(xs.size()) >= depth) return;
    for (Letter a : letters)
        for (Letter b : letters) {
            int next = s.step_pair(q, a, b);
            if (next < 0) continue;
            xs.push_back(a);
            ys.push_back(b);
            snap_pair_rec(s, letters, depth, next, xs, ys, out, budget);
            xs.pop_back();
            ys.pop_back();
        }
}

void proj_snap_rec(const PairTree& s, const LetterSet& letters, int depth,
                   const std::vector<int>& reach, std::vector<Letter>& word, StringSet& out,
                   std::size_t& budget) {
    if (budget == 0) fail(Errc::BoundsTooLarge, "snapshot budget exhausted");
    --budget;
    out.insert(word);
    if (static_cast<int>(word.size()) >= depth) return;
    std::vector<int> step_targets;
    for (Letter a : letters) {
        std::vector<int> next;
        for (int q : reach) {
            s.x_targets(q, a, step_targets);
            next.insert(next.end(), step_targets.begin(), step_targets.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) continue;
        word.push_back(a);
        proj_snap_rec(s, letters, depth, next, word, out, budget);
        word.pop_back();
    }
}

}  // namespace

StringSet snapshot_ntree(const NTree& t, const LetterSet& letters, int depth,
                         std::size_t budget) {
    StringSet out;
    if (t.is_empty()) return out;
    std::vector<Letter> word;
    snap_ntree_rec(t, letters, depth, t.start(), word, out, budget);
    return out;
}

PairSet snapshot_pair(const PairTree& s, const LetterSet& letters, int depth,
                      std::size_t budget) {
    PairSet out;
    if (s.is_empty()) return out;
    std::vector<Letter> xs, ys;
    snap_pair_rec(s, letters, depth, s.start(), xs, ys, out, budget);
    return out;
}

StringSet proj_snapshot_pair(const PairTree& s, const LetterSet& letters, int depth,
                             std::size_t budget) {
    StringSet out;
    if (s.is_empty()) return out;
    std::vector<Letter> word;
    proj_snap_rec(s, letters, depth, {s.start()}, word, out, budget);
    return out;
}

namespace {

// Shared walk: scan product states reachable by common strings of length
// < depth. A pair first reached at depth k is never revisited; any divergence
// below a later occurrence is also below the first one, so skipping is safe.
// one_sided(a_step, b_step) flags the divergence the caller cares about.
template <typename OneSided>
bool product_diverges(const NTree& a, const NTree& b, const LetterSet& letters, int depth,
                      OneSided one_sided) {
    std::set<std::pair<int, int>> seen{{a.start(), b.start()}};
    std::deque<std::pair<std::pair<int, int>, int>> queue{{{a.start(), b.start()}, 0}};
    while (!queue.empty()) {
        auto [pos, d] = queue.front();
        queue.pop_front();
        if (d >= depth) continue;
        for (Letter x : letters) {
            int na = a.step(pos.first, x);
            int nb = b.step(pos.second, x);
            if (one_sided(na >= 0, nb >= 0)) return true;
            if (na >= 0 && nb >= 0 && seen.insert({na, nb}).second)
                queue.push_back({{na, nb}, d + 1});
        }
    }
    return false;
}

}  // namespace

bool snapshots_agree(const NTree& a, const NTree& b, const LetterSet& letters, int depth) {
    if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
    return !product_diverges(a, b, letters, depth,
                             [](bool sa, bool sb) { return sa != sb; });
}

bool snapshot_within(const NTree& inner, const NTree& outer, const LetterSet& letters, int depth) {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    return !product_diverges(inner, outer, letters, depth,
                             [](bool sa, bool sb) { return sa && !sb; });
}

bool pair_proj_contains(const PairTree& s, const std::vector<Letter>& xs) {
    if (s.is_empty()) return false;
    std::vector<int> reach{s.start()};
    std::vector<int> step_targets;
    for (Letter a : xs) {
        std::vector<int> next;
        for (int q : reach) {
            s.x_targets(q, a, step_targets);
            next.insert(next.end(), step_targets.begin(), step_targets.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) return false;
        reach = std::move(next);
    }
    return true;
}

}  // namespace sigscope
