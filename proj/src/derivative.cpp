#include "sigscope/derivative.hpp"

#include <deque>

#include "sigscope/errors.hpp"
#include "sigscope/game.hpp"
#include "sigscope/project.hpp"

namespace sigscope {

namespace {

// Stable part of keep: reachable from the start and live, iterated to a
// fixpoint. Indicator over the tree's own state space.
std::vector<char> stable_part(const PairTree& s, std::vector<char> keep) {
    bool changed = true;
    while (changed) {
        changed = false;
        if (s.is_empty()) break;
        // reachability within keep
        std::vector<char> reach(s.state_count(), 0);
        if (keep[s.start()]) {
            std::deque<int> queue{s.start()};
            reach[s.start()] = 1;
            while (!queue.empty()) {
                int q = queue.front();
                queue.pop_front();
                auto visit = [&](int to) {
                    if (keep[to] && !reach[to]) {
                        reach[to] = 1;
                        queue.push_back(to);
                    }
                };
                const PairState& st = s.state(q);
                for (const auto& e : st.edges) visit(e.target);
                for (const auto& m : st.xtails) visit(m.target);
                for (const auto& m : st.ytails) visit(m.target);
                for (const auto& m : st.diags) visit(m.target);
            }
        }
        // liveness within keep
        std::vector<char> live = keep;
        bool live_changed = true;
        while (live_changed) {
            live_changed = false;
            for (int q = 0; q < s.state_count(); ++q) {
                if (!live[q]) continue;
                const PairState& st = s.state(q);
                bool has = false;
                for (const auto& e : st.edges)
                    if (live[e.target]) { has = true; break; }
                if (!has)
                    for (const auto& m : st.xtails)
                        if (live[m.target]) { has = true; break; }
                if (!has)
                    for (const auto& m : st.ytails)
                        if (live[m.target]) { has = true; break; }
                if (!has)
                    for (const auto& m : st.diags)
                        if (live[m.target]) { has = true; break; }
                if (!has) live[q] = 0;
            }
        }
        for (int q = 0; q < s.state_count(); ++q) {
            char next = keep[q] && reach[q] && live[q];
            if (next != keep[q]) {
                keep[q] = next;
                changed = true;
            }
        }
    }
    return keep;
}

}  // namespace

DerivativeTrace derive_sequence(const PairTree& s, int max_depth) {
    DerivativeTrace trace;

    // stage 0: the stable part of the input
    std::vector<char> all(s.state_count(), 1);
    std::vector<char> keep0 = stable_part(s, all);
    for (int q = 0; q < s.state_count(); ++q)
        if (!keep0[q]) trace.removals.push_back({0, s.state(q).name, RemovalReason::Pruned});
    trace.stages.push_back(s.is_empty() ? PairTree::empty_tree() : s.restrict(keep0));

    // Closures are always compared against the original projection, not the
    // projection of the shrinking stage.
    NTree base_proj =
        trace.stages[0].is_empty() ? NTree::empty_tree() : project(trace.stages[0]);

    for (int stage = 0;; ++stage) {
        const PairTree& cur = trace.stages.back();
        if (cur.is_empty()) {
            trace.stabilized = true;
            trace.lambda = stage;
            return trace;
        }
        if (stage >= max_depth) return trace;  // cut off, not stabilized

        std::vector<char> keep(cur.state_count(), 1);
        std::vector<Removal> stage_removals;
        for (int q = 0; q < cur.state_count(); ++q) {
            PairTree piece = visiting_subtree(cur, q);
            GameResult g = piece.is_empty()
                               ? GameResult{}
                               : closure_contained(project(piece), base_proj);
            ++trace.game_calls;
            if (g.contained) {
                keep[q] = 0;
                stage_removals.push_back({stage + 1, cur.state(q).name, RemovalReason::ClosureContained});
            }
        }
        if (stage_removals.empty()) {
            trace.stabilized = true;
            trace.lambda = stage;
            return trace;
        }
        std::vector<char> stable = stable_part(cur, keep);
        for (int q = 0; q < cur.state_count(); ++q)
            if (keep[q] && !stable[q])
                stage_removals.push_back({stage + 1, cur.state(q).name, RemovalReason::Pruned});
        trace.removals.insert(trace.removals.end(), stage_removals.begin(), stage_removals.end());
        bool any = false;
        for (int q = 0; q < cur.state_count(); ++q) any = any || stable[q];
        trace.stages.push_back(any ? cur.restrict(stable) : PairTree::empty_tree());
    }
}

PairTree removal_piece(const DerivativeTrace& trace, const Removal& removal) {
    if (removal.reason != RemovalReason::ClosureContained || removal.stage < 1)
        fail(Errc::Validation, "no piece for this removal");
    const PairTree& from = trace.stages[removal.stage - 1];
    int q = from.state_by_name(removal.state);
    if (q < 0) fail(Errc::Validation, "removed state not present in its stage");
    return visiting_subtree(from, q);
}

}  // namespace sigscope
