#include "sigscope/game.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sigscope/errors.hpp"
#include "sigscope/project.hpp"

namespace sigscope {

namespace {

EPPoint least_branch_from(const NTree& t, int q) {
    EPPoint pt;
    std::map<int, std::size_t> seen;
    std::vector<Letter> walk;
    for (;;) {
        auto it = seen.find(q);
        if (it != seen.end()) {
            pt.prefix.assign(walk.begin(), walk.begin() + it->second);
            pt.period.assign(walk.begin() + it->second, walk.end());
            return pt;
        }
        seen[q] = walk.size();
        EPSet family = t.successor_family(q);
        if (family.is_empty()) fail(Errc::EmptyTree, "tree is not pruned");
        Letter a = *family.least();
        walk.push_back(a);
        q = t.step(q, a);
    }
}

}  // namespace

EPPoint least_branch(const NTree& t) {
    if (t.is_empty()) fail(Errc::EmptyTree, "no branch in an empty tree");
    return least_branch_from(t, t.start());
}

GameResult closure_contained(const NTree& left, const NTree& right) {
    GameResult r;
    if (left.is_empty()) return r;
    if (right.is_empty()) {
        r.contained = false;
        r.counterexample = least_branch(left);
        return r;
    }

    LetterCollapse c = merge_collapse(letter_collapse(left), letter_collapse(right));
    std::vector<Letter> probes;
    for (Letter a = 0; a < c.horizon; ++a) probes.push_back(a);
    for (Letter rr = 0; rr < c.lcm; ++rr) probes.push_back(c.rep(rr));

    struct Position {
        int l, rt;
        int parent;     // index into visited, -1 at the root
        Letter letter;  // move that reached this position
    };
    std::vector<Position> visited;
    std::map<std::pair<int, int>, int> index;
    std::deque<int> queue;
    visited.push_back({left.start(), right.start(), -1, 0});
    index[{left.start(), right.start()}] = 0;
    queue.push_back(0);

    while (!queue.empty()) {
        int at = queue.front();
        queue.pop_front();
        ++r.positions_explored;
        int lq = visited[at].l;
        int rq = visited[at].rt;
        for (Letter a : probes) {
            int lnext = left.step(lq, a);
            if (lnext < 0) continue;
            int rnext = right.step(rq, a);
            if (rnext < 0) {
                // a word of left that right lacks; extend it to a branch
                std::vector<Letter> path;
                for (int i = at; i >= 0; i = visited[i].parent)
                    if (visited[i].parent >= 0) path.push_back(visited[i].letter);
                std::reverse(path.begin(), path.end());
                path.push_back(a);
                EPPoint tail = least_branch_from(left, lnext);
                r.contained = false;
                EPPoint cex;
                cex.prefix = path;
                cex.prefix.insert(cex.prefix.end(), tail.prefix.begin(), tail.prefix.end());
                cex.period = tail.period;
                r.counterexample = cex;
                return r;
            }
            auto key = std::make_pair(lnext, rnext);
            if (index.find(key) == index.end()) {
                index[key] = static_cast<int>(visited.size());
                visited.push_back({lnext, rnext, at, a});
                queue.push_back(index[key]);
            }
        }
    }
    return r;
}

}  // namespace sigscope
