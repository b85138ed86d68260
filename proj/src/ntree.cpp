#include "sigscope/ntree.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sigscope/errors.hpp"

namespace sigscope {

namespace {

bool branches_here(const NTreeState& st) {
    // A tail class denotes infinitely many letters.
    return !st.tails.empty() || st.edges.size() >= 2;
}

}  // namespace

int NTree::add_state(const std::string& name) {
    states_.push_back(NTreeState{name, {}, {}});
    return static_cast<int>(states_.size()) - 1;
}

void NTree::add_edge(int from, Letter letter, int to) {
    states_[from].edges.push_back(NTreeEdge{letter, to});
}

void NTree::add_tail(int from, const ArithClass& cls, int to) {
    states_[from].tails.push_back(NTreeTail{cls, to});
}

int NTree::state_by_name(const std::string& name) const {
    for (int i = 0; i < state_count(); ++i)
        if (states_[i].name == name) return i;
    return -1;
}

int NTree::step(int q, Letter letter) const {
    const NTreeState& st = states_[q];
    for (const auto& e : st.edges)
        if (e.letter == letter) return e.target;
    for (const auto& t : st.tails)
        if (t.cls.contains(letter)) return t.target;
    return -1;
}

std::optional<int> NTree::run(const std::vector<Letter>& s) const {
    if (is_empty()) return std::nullopt;
    int q = start_;
    for (Letter a : s) {
        q = step(q, a);
        if (q < 0) return std::nullopt;
    }
    return q;
}

EPSet NTree::successor_family(int q) const {
    EPSet out;
    for (const auto& e : states_[q].edges) out.add_letter(e.letter);
    for (const auto& t : states_[q].tails) out.add_class(t.cls);
    return out;
}

EPSet NTree::successor_family_into(int q, const std::vector<char>& keep) const {
    EPSet out;
    for (const auto& e : states_[q].edges)
        if (keep[e.target]) out.add_letter(e.letter);
    for (const auto& t : states_[q].tails)
        if (keep[t.target]) out.add_class(t.cls);
    return out;
}

std::vector<char> NTree::live_states() const {
    std::vector<char> live(states_.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < states_.size(); ++q) {
            if (!live[q]) continue;
            bool has = false;
            for (const auto& e : states_[q].edges)
                if (live[e.target]) { has = true; break; }
            if (!has)
                for (const auto& t : states_[q].tails)
                    if (live[t.target]) { has = true; break; }
            if (!has) {
                live[q] = 0;
                changed = true;
            }
        }
    }
    return live;
}

NTree NTree::restrict(const std::vector<char>& keep) const {
    NTree out;
    if (is_empty() || !keep[start_]) return out;

    // reachability from the start through kept states only
    std::vector<char> seen(states_.size(), 0);
    std::deque<int> queue{start_};
    seen[start_] = 1;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        auto visit = [&](int to) {
            if (keep[to] && !seen[to]) {
                seen[to] = 1;
                queue.push_back(to);
            }
        };
        for (const auto& e : states_[q].edges) visit(e.target);
        for (const auto& t : states_[q].tails) visit(t.target);
    }

    std::vector<int> remap(states_.size(), -1);
    for (std::size_t q = 0; q < states_.size(); ++q)
        if (seen[q]) remap[q] = out.add_state(states_[q].name);
    out.set_start(remap[start_]);
    for (std::size_t q = 0; q < states_.size(); ++q) {
        if (!seen[q]) continue;
        for (const auto& e : states_[q].edges)
            if (seen[e.target]) out.add_edge(remap[q], e.letter, remap[e.target]);
        for (const auto& t : states_[q].tails)
            if (seen[t.target]) out.add_tail(remap[q], t.cls, remap[t.target]);
    }
    return out;
}

void NTree::validate() const {
    if (states_.empty() && start_ < 0) return;  // canonical empty tree
    if (start_ < 0 || start_ >= state_count()) fail(Errc::Validation, "missing start state");
    for (int q = 0; q < state_count(); ++q) {
        const NTreeState& st = states_[q];
        for (const auto& e : st.edges)
            if (e.target < 0 || e.target >= state_count())
                fail(Errc::Validation, "edge target out of range at state " + st.name);
        for (const auto& t : st.tails)
            if (t.target < 0 || t.target >= state_count())
                fail(Errc::Validation, "tail target out of range at state " + st.name);
        for (std::size_t i = 0; i < st.edges.size(); ++i)
            for (std::size_t j = i + 1; j < st.edges.size(); ++j)
                if (st.edges[i].letter == st.edges[j].letter)
                    fail(Errc::Validation, "duplicate edge letter " + std::to_string(st.edges[i].letter) +
                                               " at state " + st.name);
        for (const auto& e : st.edges)
            for (const auto& t : st.tails)
                if (t.cls.contains(e.letter))
                    fail(Errc::Validation, "edge letter " + std::to_string(e.letter) +
                                               " overlaps a tail class at state " + st.name);
        for (std::size_t i = 0; i < st.tails.size(); ++i)
            for (std::size_t j = i + 1; j < st.tails.size(); ++j)
                if (classes_intersect(st.tails[i].cls, st.tails[j].cls))
                    fail(Errc::Validation, "overlapping tail classes at state " + st.name);
    }
    std::vector<char> seen(states_.size(), 0);
    std::deque<int> queue{start_};
    seen[start_] = 1;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        auto visit = [&](int to) {
            if (!seen[to]) {
                seen[to] = 1;
                queue.push_back(to);
            }
        };
        for (const auto& e : states_[q].edges) visit(e.target);
        for (const auto& t : states_[q].tails) visit(t.target);
    }
    for (int q = 0; q < state_count(); ++q)
        if (!seen[q]) fail(Errc::Validation, "state " + states_[q].name + " is unreachable from the start");
}

bool contains_string(const NTree& t, const std::vector<Letter>& s) { return t.run(s).has_value(); }

EPSet successor_set(const NTree& t, const std::vector<Letter>& s) {
    auto q = t.run(s);
    if (!q) fail(Errc::NotInTree, "string is not a member of the tree");
    return t.successor_family(*q);
}

NTree prune(const NTree& t) {
    if (t.is_empty()) return NTree::empty_tree();
    return t.restrict(t.live_states());
}

bool branch_member(const NTree& t, const EPPoint& x) {
    if (t.is_empty()) return false;
    int q = t.start();
    std::set<std::pair<int, std::size_t>> seen;
    for (std::size_t i = 0;; ++i) {
        std::size_t ph = x.phase(i);
        if (i >= x.prefix.size() && !seen.insert({q, ph}).second) return true;
        q = t.step(q, x.at(i));
        if (q < 0) return false;
    }
}

StemInfo stem_and_diam(const NTree& t) {
    if (t.is_empty()) fail(Errc::EmptyTree, "stem of the empty tree");
    StemInfo info;
    std::vector<char> seen(t.state_count(), 0);
    std::vector<Letter> path;
    int q = t.start();
    for (;;) {
        const NTreeState& st = t.state(q);
        if (branches_here(st)) {
            info.stem = path;
            info.diam_num = 1;
            info.diam_den = 1 + static_cast<long>(path.size());
            return info;
        }
        if (st.edges.empty()) fail(Errc::EmptyTree, "stem walk reached a dead state; input not pruned");
        if (seen[q]) return info;  // single forced cycle: the branch set is one point
        seen[q] = 1;
        path.push_back(st.edges[0].letter);
        q = st.edges[0].target;
    }
}

std::size_t branching_height(const NTree& t, const std::vector<Letter>& s) {
    if (t.is_empty()) fail(Errc::NotInTree, "string is not a member of the tree");
    std::size_t height = 0;
    int q = t.start();
    for (Letter a : s) {
        if (branches_here(t.state(q))) ++height;
        q = t.step(q, a);
        if (q < 0) fail(Errc::NotInTree, "string is not a member of the tree");
    }
    return height;
}

bool is_compact_tree(const NTree& t) {
    if (t.is_empty()) return true;
    auto live = t.live_states();
    for (int q = 0; q < t.state_count(); ++q) {
        if (!live[q]) return false;  // presentation is not pruned
        if (!t.state(q).tails.empty()) return false;
    }
    return true;
}

bool is_perfect_tree(const NTree& t) {
    if (t.is_empty()) return true;
    // states that reach (possibly in zero steps) a branching state
    std::vector<char> good(t.state_count(), 0);
    for (int q = 0; q < t.state_count(); ++q)
        if (branches_here(t.state(q))) good[q] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int q = 0; q < t.state_count(); ++q) {
            if (good[q]) continue;
            for (const auto& e : t.state(q).edges)
                if (good[e.target]) { good[q] = 1; changed = true; break; }
            if (!good[q])
                for (const auto& tl : t.state(q).tails)
                    if (good[tl.target]) { good[q] = 1; changed = true; break; }
        }
    }
    for (int q = 0; q < t.state_count(); ++q)
        if (!good[q]) return false;
    return true;
}

}  // namespace sigscope
