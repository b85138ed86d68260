#include "sigscope/pairtree.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sigscope/errors.hpp"

namespace sigscope {

int PairTree::add_state(const std::string& name) {
    states_.push_back(PairState{name, {}, {}, {}, {}});
    return static_cast<int>(states_.size()) - 1;
}

void PairTree::add_edge(int from, Letter x, Letter y, int to) {
    states_[from].edges.push_back(PairEdge{x, y, to});
}

void PairTree::add_xtail(int from, const ArithClass& xcls, Letter y, int to) {
    states_[from].xtails.push_back(XTailMove{xcls, y, to});
}

void PairTree::add_ytail(int from, Letter x, const ArithClass& ycls, int to) {
    states_[from].ytails.push_back(YTailMove{x, ycls, to});
}

void PairTree::add_diag(int from, const ArithClass& cls, int to) {
    states_[from].diags.push_back(DiagMove{cls, to});
}

int PairTree::state_by_name(const std::string& name) const {
    for (int i = 0; i < state_count(); ++i)
        if (states_[i].name == name) return i;
    return -1;
}

int PairTree::step_pair(int q, Letter x, Letter y) const {
    const PairState& st = states_[q];
    for (const auto& e : st.edges)
        if (e.x == x && e.y == y) return e.target;
    for (const auto& m : st.xtails)
        if (m.y == y && m.xcls.contains(x)) return m.target;
    for (const auto& m : st.ytails)
        if (m.x == x && m.ycls.contains(y)) return m.target;
    for (const auto& m : st.diags)
        if (x == y && m.cls.contains(x)) return m.target;
    return -1;
}

std::optional<int> PairTree::run(const std::vector<Letter>& xs, const std::vector<Letter>& ys) const {
    if (is_empty() || xs.size() != ys.size()) return std::nullopt;
    int q = start_;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        q = step_pair(q, xs[i], ys[i]);
        if (q < 0) return std::nullopt;
    }
    return q;
}

void PairTree::x_targets(int q, Letter m, std::vector<int>& out) const {
    out.clear();
    const PairState& st = states_[q];
    for (const auto& e : st.edges)
        if (e.x == m) out.push_back(e.target);
    for (const auto& mv : st.xtails)
        if (mv.xcls.contains(m)) out.push_back(mv.target);
    for (const auto& mv : st.ytails)
        if (mv.x == m) out.push_back(mv.target);
    for (const auto& mv : st.diags)
        if (mv.cls.contains(m)) out.push_back(mv.target);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

EPSet PairTree::x_family(int q) const {
    std::vector<char> all(states_.size(), 1);
    return x_family_into(q, all);
}

EPSet PairTree::x_family_into(int q, const std::vector<char>& keep) const {
    EPSet out;
    const PairState& st = states_[q];
    for (const auto& e : st.edges)
        if (keep[e.target]) out.add_letter(e.x);
    for (const auto& m : st.xtails)
        if (keep[m.target]) out.add_class(m.xcls);
    for (const auto& m : st.ytails)
        if (keep[m.target]) out.add_letter(m.x);
    for (const auto& m : st.diags)
        if (keep[m.target]) out.add_class(m.cls);
    return out;
}

std::vector<char> PairTree::live_states() const {
    std::vector<char> live(states_.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < states_.size(); ++q) {
            if (!live[q]) continue;
            const PairState& st = states_[q];
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
            if (!has) {
                live[q] = 0;
                changed = true;
            }
        }
    }
    return live;
}

PairTree PairTree::restrict(const std::vector<char>& keep) const {
    PairTree out;
    if (is_empty() || !keep[start_]) return out;
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
        const PairState& st = states_[q];
        for (const auto& e : st.edges) visit(e.target);
        for (const auto& m : st.xtails) visit(m.target);
        for (const auto& m : st.ytails) visit(m.target);
        for (const auto& m : st.diags) visit(m.target);
    }
    std::vector<int> remap(states_.size(), -1);
    for (std::size_t q = 0; q < states_.size(); ++q)
        if (seen[q]) remap[q] = out.add_state(states_[q].name);
    out.set_start(remap[start_]);
    for (std::size_t q = 0; q < states_.size(); ++q) {
        if (!seen[q]) continue;
        const PairState& st = states_[q];
        for (const auto& e : st.edges)
            if (seen[e.target]) out.add_edge(remap[q], e.x, e.y, remap[e.target]);
        for (const auto& m : st.xtails)
            if (seen[m.target]) out.add_xtail(remap[q], m.xcls, m.y, remap[m.target]);
        for (const auto& m : st.ytails)
            if (seen[m.target]) out.add_ytail(remap[q], m.x, m.ycls, remap[m.target]);
        for (const auto& m : st.diags)
            if (seen[m.target]) out.add_diag(remap[q], m.cls, remap[m.target]);
    }
    return out;
}

void PairTree::validate() const {
    if (states_.empty() && start_ < 0) return;
    if (start_ < 0 || start_ >= state_count()) fail(Errc::Validation, "missing start state");
    for (int q = 0; q < state_count(); ++q) {
        const PairState& st = states_[q];
        auto check_target = [&](int to) {
            if (to < 0 || to >= state_count())
                fail(Errc::Validation, "move target out of range at state " + st.name);
        };
        for (const auto& e : st.edges) check_target(e.target);
        for (const auto& m : st.xtails) check_target(m.target);
        for (const auto& m : st.ytails) check_target(m.target);
        for (const auto& m : st.diags) check_target(m.target);

        auto overlap = [&](const std::string& what) {
            fail(Errc::Validation, "moves overlap on a pair at state " + st.name + " (" + what + ")");
        };
        for (std::size_t i = 0; i < st.edges.size(); ++i)
            for (std::size_t j = i + 1; j < st.edges.size(); ++j)
                if (st.edges[i].x == st.edges[j].x && st.edges[i].y == st.edges[j].y)
                    overlap("edge/edge");
        for (const auto& e : st.edges) {
            for (const auto& m : st.xtails)
                if (m.y == e.y && m.xcls.contains(e.x)) overlap("edge/xtail");
            for (const auto& m : st.ytails)
                if (m.x == e.x && m.ycls.contains(e.y)) overlap("edge/ytail");
            for (const auto& m : st.diags)
                if (e.x == e.y && m.cls.contains(e.x)) overlap("edge/dtail");
        }
        for (std::size_t i = 0; i < st.xtails.size(); ++i)
            for (std::size_t j = i + 1; j < st.xtails.size(); ++j)
                if (st.xtails[i].y == st.xtails[j].y &&
                    classes_intersect(st.xtails[i].xcls, st.xtails[j].xcls))
                    overlap("xtail/xtail");
        for (const auto& a : st.xtails) {
            for (const auto& b : st.ytails)
                if (a.xcls.contains(b.x) && b.ycls.contains(a.y)) overlap("xtail/ytail");
            for (const auto& d : st.diags)
                if (a.xcls.contains(a.y) && d.cls.contains(a.y)) overlap("xtail/dtail");
        }
        for (std::size_t i = 0; i < st.ytails.size(); ++i)
            for (std::size_t j = i + 1; j < st.ytails.size(); ++j)
                if (st.ytails[i].x == st.ytails[j].x &&
                    classes_intersect(st.ytails[i].ycls, st.ytails[j].ycls))
                    overlap("ytail/ytail");
        for (const auto& b : st.ytails)
            for (const auto& d : st.diags)
                if (b.ycls.contains(b.x) && d.cls.contains(b.x)) overlap("ytail/dtail");
        for (std::size_t i = 0; i < st.diags.size(); ++i)
            for (std::size_t j = i + 1; j < st.diags.size(); ++j)
                if (classes_intersect(st.diags[i].cls, st.diags[j].cls)) overlap("dtail/dtail");
    }
    std::vector<char> all(states_.size(), 1);
    PairTree reachable = restrict(all);
    if (reachable.state_count() != state_count())
        fail(Errc::Validation, "some states are unreachable from the start");
}

PairTree pair_prune(const PairTree& s) {
    if (s.is_empty()) return PairTree::empty_tree();
    return s.restrict(s.live_states());
}

PairTree pair_subtree(const PairTree& s, const std::vector<Letter>& u, const std::vector<Letter>& v) {
    if (u.size() != v.size()) fail(Errc::NotInTree, "pair coordinates differ in length");
    if (s.is_empty()) fail(Errc::NotInTree, "pair is not a member of the tree");
    std::vector<int> run_states{s.start()};
    for (std::size_t i = 0; i < u.size(); ++i) {
        int next = s.step_pair(run_states.back(), u[i], v[i]);
        if (next < 0) fail(Errc::NotInTree, "pair is not a member of the tree");
        run_states.push_back(next);
    }
    if (u.empty()) return s;

    PairTree out;
    std::size_t k = u.size();
    // chain nodes for the proper prefixes of (u, v)
    for (std::size_t i = 0; i < k; ++i)
        out.add_state(s.state(run_states[i]).name + "@" + std::to_string(i));
    int base = out.state_count();
    for (int q = 0; q < s.state_count(); ++q) out.add_state(s.state(q).name);
    out.set_start(0);
    for (std::size_t i = 0; i < k; ++i) {
        int to = (i + 1 < k) ? static_cast<int>(i + 1) : base + run_states[k];
        out.add_edge(static_cast<int>(i), u[i], v[i], to);
    }
    for (int q = 0; q < s.state_count(); ++q) {
        const PairState& st = s.state(q);
        for (const auto& e : st.edges) out.add_edge(base + q, e.x, e.y, base + e.target);
        for (const auto& m : st.xtails) out.add_xtail(base + q, m.xcls, m.y, base + m.target);
        for (const auto& m : st.ytails) out.add_ytail(base + q, m.x, m.ycls, base + m.target);
        for (const auto& m : st.diags) out.add_diag(base + q, m.cls, base + m.target);
    }
    std::vector<char> all(out.state_count(), 1);
    return out.restrict(all);  // drop unreachable copies
}

namespace {

PairTree visiting_product(const PairTree& s, const std::vector<char>& stage, int q) {
    // Product with a visited-q flag over the stage-restricted presentation.
    PairTree prod;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int p, int f) {
        auto it = index.find({p, f});
        if (it != index.end()) return it->second;
        int id = prod.add_state(s.state(p).name + (f ? "'" : ""));
        index.emplace(std::make_pair(p, f), id);
        queue.push_back({p, f});
        return id;
    };
    if (s.is_empty() || !stage[s.start()] || !stage[q]) return PairTree::empty_tree();
    int start_id = intern(s.start(), s.start() == q ? 1 : 0);
    prod.set_start(start_id);
    while (!queue.empty()) {
        auto [p, f] = queue.front();
        queue.pop_front();
        int from = index[{p, f}];
        const PairState& st = s.state(p);
        auto flag_for = [&](int to) { return f || to == q ? 1 : 0; };
        for (const auto& e : st.edges)
            if (stage[e.target]) prod.add_edge(from, e.x, e.y, intern(e.target, flag_for(e.target)));
        for (const auto& m : st.xtails)
            if (stage[m.target]) prod.add_xtail(from, m.xcls, m.y, intern(m.target, flag_for(m.target)));
        for (const auto& m : st.ytails)
            if (stage[m.target]) prod.add_ytail(from, m.x, m.ycls, intern(m.target, flag_for(m.target)));
        for (const auto& m : st.diags)
            if (stage[m.target]) prod.add_diag(from, m.cls, intern(m.target, flag_for(m.target)));
    }

    // Keep flag-1 states that are live, and flag-0 states that can still reach
    // a live flag-1 state; prune the rest away.
    std::vector<char> live = prod.live_states();
    std::vector<char> keep(prod.state_count(), 0);
    for (const auto& [key, id] : index)
        if (key.second == 1 && live[id]) keep[id] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < prod.state_count(); ++i) {
            if (keep[i]) continue;
            const PairState& st = prod.state(i);
            bool reaches = false;
            for (const auto& e : st.edges)
                if (keep[e.target]) { reaches = true; break; }
            if (!reaches)
                for (const auto& m : st.xtails)
                    if (keep[m.target]) { reaches = true; break; }
            if (!reaches)
                for (const auto& m : st.ytails)
                    if (keep[m.target]) { reaches = true; break; }
            if (!reaches)
                for (const auto& m : st.diags)
                    if (keep[m.target]) { reaches = true; break; }
            if (reaches) {
                keep[i] = 1;
                changed = true;
            }
        }
    }
    return pair_prune(prod.restrict(keep));
}

}  // namespace

PairTree visiting_subtree(const PairTree& s, int q) {
    std::vector<char> all(s.state_count(), 1);
    return visiting_product(s, all, q);
}

PairTree visiting_subtree_within(const PairTree& s, const std::vector<char>& stage, int q) {
    return visiting_product(s, stage, q);
}

PairTree diag_pairize(const NTree& t) {
    PairTree out;
    if (t.is_empty()) return out;
    for (int q = 0; q < t.state_count(); ++q) out.add_state(t.state(q).name);
    out.set_start(t.start());
    for (int q = 0; q < t.state_count(); ++q) {
        for (const auto& e : t.state(q).edges) out.add_edge(q, e.letter, e.letter, e.target);
        for (const auto& tl : t.state(q).tails) out.add_diag(q, tl.cls, tl.target);
    }
    return out;
}

}  // namespace sigscope
