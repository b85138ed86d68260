#include "sigscope/project.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sigscope/errors.hpp"

namespace sigscope {

Letter LetterCollapse::rep(Letter r) const {
    return horizon + (r + lcm - horizon % lcm) % lcm;
}

ArithClass LetterCollapse::rep_class(Letter r) const {
    Letter t = rep(r);
    return ArithClass{t, lcm, t % lcm};
}

LetterCollapse x_collapse(const PairTree& s) {
    LetterCollapse c;
    for (int q = 0; q < s.state_count(); ++q) {
        const PairState& st = s.state(q);
        for (const auto& e : st.edges) c.horizon = std::max(c.horizon, e.x + 1);
        for (const auto& m : st.ytails) c.horizon = std::max(c.horizon, m.x + 1);
        for (const auto& m : st.xtails) {
            c.horizon = std::max(c.horizon, m.xcls.threshold);
            c.lcm = checked_lcm(c.lcm, m.xcls.modulus);
        }
        for (const auto& m : st.diags) {
            c.horizon = std::max(c.horizon, m.cls.threshold);
            c.lcm = checked_lcm(c.lcm, m.cls.modulus);
        }
    }
    return c;
}

LetterCollapse letter_collapse(const NTree& t) {
    LetterCollapse c;
    for (int q = 0; q < t.state_count(); ++q) {
        for (const auto& e : t.state(q).edges) c.horizon = std::max(c.horizon, e.letter + 1);
        for (const auto& tl : t.state(q).tails) {
            c.horizon = std::max(c.horizon, tl.cls.threshold);
            c.lcm = checked_lcm(c.lcm, tl.cls.modulus);
        }
    }
    return c;
}

LetterCollapse merge_collapse(const LetterCollapse& a, const LetterCollapse& b) {
    return LetterCollapse{std::max(a.horizon, b.horizon), checked_lcm(a.lcm, b.lcm)};
}

namespace {

std::string join_names(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += '+';
        out += p;
    }
    return out;
}

}  // namespace

NTree project(const PairTree& s) {
    if (s.is_empty()) fail(Errc::EmptyTree, "cannot project an empty tree");
    LetterCollapse c = x_collapse(s);

    NTree out;
    std::map<std::vector<int>, int> index;
    std::deque<std::vector<int>> queue;
    auto intern = [&](const std::vector<int>& subset) {
        auto it = index.find(subset);
        if (it != index.end()) return it->second;
        if (out.state_count() >= kSubsetBudget)
            fail(Errc::BoundsTooLarge, "projection subset budget exhausted");
        std::vector<std::string> parts;
        for (int q : subset) parts.push_back(s.state(q).name);
        int id = out.add_state(join_names(parts));
        index.emplace(subset, id);
        queue.push_back(subset);
        return id;
    };

    int start_id = intern({s.start()});
    out.set_start(start_id);
    std::vector<int> step_targets;
    while (!queue.empty()) {
        std::vector<int> subset = queue.front();
        queue.pop_front();
        int from = index[subset];
        auto targets_for = [&](Letter a) {
            std::vector<int> next;
            for (int q : subset) {
                s.x_targets(q, a, step_targets);
                next.insert(next.end(), step_targets.begin(), step_targets.end());
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            return next;
        };
        for (Letter a = 0; a < c.horizon; ++a) {
            std::vector<int> next = targets_for(a);
            if (!next.empty()) out.add_edge(from, a, intern(next));
        }
        for (Letter r = 0; r < c.lcm; ++r) {
            std::vector<int> next = targets_for(c.rep(r));
            if (!next.empty()) out.add_tail(from, c.rep_class(r), intern(next));
        }
    }
    // Every subset of live states is itself live, so the output is pruned
    // already; restricting is a cheap invariant guard.
    return prune(out);
}

NTree ntree_union(const std::vector<NTree>& trees) {
    std::vector<const NTree*> live;
    for (const auto& t : trees)
        if (!t.is_empty()) live.push_back(&t);
    if (live.empty()) return NTree::empty_tree();

    LetterCollapse c;
    for (const NTree* t : live) c = merge_collapse(c, letter_collapse(*t));

    // Combined index space: tree i's state q sits at offset[i] + q.
    std::vector<int> offset(live.size(), 0);
    for (std::size_t i = 1; i < live.size(); ++i)
        offset[i] = offset[i - 1] + live[i - 1]->state_count();
    auto owner = [&](int id) {
        std::size_t i = live.size() - 1;
        while (offset[i] > id) --i;
        return i;
    };

    NTree out;
    std::map<std::vector<int>, int> index;
    std::deque<std::vector<int>> queue;
    auto intern = [&](const std::vector<int>& subset) {
        auto it = index.find(subset);
        if (it != index.end()) return it->second;
        if (out.state_count() >= kSubsetBudget)
            fail(Errc::BoundsTooLarge, "union subset budget exhausted");
        int id = out.add_state("u" + std::to_string(out.state_count()));
        index.emplace(subset, id);
        queue.push_back(subset);
        return id;
    };

    std::vector<int> start;
    for (std::size_t i = 0; i < live.size(); ++i) start.push_back(offset[i] + live[i]->start());
    out.set_start(intern(start));
    while (!queue.empty()) {
        std::vector<int> subset = queue.front();
        queue.pop_front();
        int from = index[subset];
        auto targets_for = [&](Letter a) {
            std::vector<int> next;
            for (int id : subset) {
                std::size_t i = owner(id);
                int to = live[i]->step(id - offset[i], a);
                if (to >= 0) next.push_back(offset[i] + to);
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            return next;
        };
        for (Letter a = 0; a < c.horizon; ++a) {
            std::vector<int> next = targets_for(a);
            if (!next.empty()) out.add_edge(from, a, intern(next));
        }
        for (Letter r = 0; r < c.lcm; ++r) {
            std::vector<int> next = targets_for(c.rep(r));
            if (!next.empty()) out.add_tail(from, c.rep_class(r), intern(next));
        }
    }
    return prune(out);
}

}  // namespace sigscope
