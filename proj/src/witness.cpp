#include "sigscope/witness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "sigscope/errors.hpp"
#include "sigscope/kernel.hpp"
#include "sigscope/project.hpp"
#include "sigscope/snapshot.hpp"

namespace sigscope {

namespace {

// Rules of a pair state in one flat, declaration-ordered list.
struct FlatRule {
    int kind;  // 0 edge, 1 xtail, 2 ytail, 3 diag
    int local;
    int target;
};

std::vector<FlatRule> flat_rules(const PairState& st) {
    std::vector<FlatRule> out;
    for (std::size_t i = 0; i < st.edges.size(); ++i)
        out.push_back({0, static_cast<int>(i), st.edges[i].target});
    for (std::size_t i = 0; i < st.xtails.size(); ++i)
        out.push_back({1, static_cast<int>(i), st.xtails[i].target});
    for (std::size_t i = 0; i < st.ytails.size(); ++i)
        out.push_back({2, static_cast<int>(i), st.ytails[i].target});
    for (std::size_t i = 0; i < st.diags.size(); ++i)
        out.push_back({3, static_cast<int>(i), st.diags[i].target});
    return out;
}

// Concrete least pair a rule admits.
std::pair<Letter, Letter> least_pair(const PairState& st, const FlatRule& r) {
    switch (r.kind) {
        case 0: return {st.edges[r.local].x, st.edges[r.local].y};
        case 1: return {st.xtails[r.local].xcls.least(), st.xtails[r.local].y};
        case 2: return {st.ytails[r.local].x, st.ytails[r.local].ycls.least()};
        default: {
            Letter m = st.diags[r.local].cls.least();
            return {m, m};
        }
    }
}

// First coordinates a rule admits.
EPSet x_set(const PairState& st, const FlatRule& r) {
    switch (r.kind) {
        case 0: return EPSet::single(st.edges[r.local].x);
        case 1: return EPSet::of_class(st.xtails[r.local].xcls);
        case 2: return EPSet::single(st.ytails[r.local].x);
        default: return EPSet::of_class(st.diags[r.local].cls);
    }
}

struct PathInfo {
    std::vector<int> states;  // from the kernel state to its branch state
    std::vector<FlatRule> moves;
};

// Shortest route (ties to the smallest state id) from b to a state whose
// first-coordinate family into the kernel is not ideal-small.
PathInfo branch_path(const PairTree& s, const std::vector<char>& kernel, const Ideal& ideal,
                     int b) {
    int n = s.state_count();
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<FlatRule> via(n, FlatRule{-1, -1, -1});
    std::deque<int> queue{b};
    dist[b] = 0;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const FlatRule& r : flat_rules(s.state(q))) {
            if (dist[r.target] >= 0) continue;
            dist[r.target] = dist[q] + 1;
            parent[r.target] = q;
            via[r.target] = r;
            queue.push_back(r.target);
        }
    }
    int best = -1;
    for (int p = 0; p < n; ++p) {
        if (dist[p] < 0) continue;
        if (ideal_member(s.x_family_into(p, kernel), ideal)) continue;
        if (best < 0 || dist[p] < dist[best] || (dist[p] == dist[best] && p < best)) best = p;
    }
    if (best < 0)
        fail(Errc::InternalSoundness, "kernel state cannot reach a large-family state");
    PathInfo info;
    for (int q = best; q != b; q = parent[q]) {
        info.states.push_back(q);
        info.moves.push_back(via[q]);
    }
    info.states.push_back(b);
    std::reverse(info.states.begin(), info.states.end());
    std::reverse(info.moves.begin(), info.moves.end());
    return info;
}

}  // namespace

WitnessPairTree build_witness(const PairTree& s, const Ideal& ideal) {
    KernelResult kr = pair_kernel(s, ideal);
    if (!kr.start_in_kernel) fail(Errc::NotPositive, "start state is outside the kernel");

    WitnessPairTree wit;
    std::map<std::pair<int, int>, int> node_id;  // (kernel state, path offset) -> w state
    std::deque<int> worklist;
    std::map<int, PathInfo> paths;

    auto path_of = [&](int b) -> const PathInfo& {
        auto it = paths.find(b);
        if (it == paths.end())
            it = paths.emplace(b, branch_path(s, kr.kernel, ideal, b)).first;
        return it->second;
    };
    auto intern_entry = [&](int b) {
        auto key = std::make_pair(b, 0);
        auto it = node_id.find(key);
        if (it != node_id.end()) return it->second;
        const PathInfo& pi = path_of(b);
        for (std::size_t i = 0; i < pi.states.size(); ++i) {
            int id = wit.w.add_state(s.state(pi.states[i]).name + "." + std::to_string(i));
            node_id[{b, static_cast<int>(i)}] = id;
            wit.embedding.push_back(pi.states[i]);
        }
        worklist.push_back(b);
        return node_id[key];
    };

    wit.w.set_start(intern_entry(s.start()));
    while (!worklist.empty()) {
        int b = worklist.front();
        worklist.pop_front();
        const PathInfo& pi = path_of(b);
        for (std::size_t i = 0; i + 1 < pi.states.size(); ++i) {
            const PairState& st = s.state(pi.states[i]);
            auto [x, y] = least_pair(st, pi.moves[i]);
            wit.w.add_edge(node_id[{b, static_cast<int>(i)}], x, y,
                           node_id[{b, static_cast<int>(i + 1)}]);
        }

        int p = pi.states.back();
        int from = node_id[{b, static_cast<int>(pi.states.size()) - 1}];
        const PairState& st = s.state(p);
        struct Candidate {
            int target;
            Letter ykey;
            int rule;
            FlatRule fr;
        };
        std::vector<Candidate> cands;
        int rule_idx = 0;
        for (const FlatRule& r : flat_rules(st)) {
            if (kr.kernel[r.target]) {
                Letter ykey = 0;
                switch (r.kind) {
                    case 0: ykey = st.edges[r.local].y; break;
                    case 1: ykey = st.xtails[r.local].y; break;
                    case 2: ykey = st.ytails[r.local].ycls.least(); break;
                    default: ykey = st.diags[r.local].cls.least(); break;
                }
                cands.push_back({r.target, ykey, rule_idx, r});
            }
            ++rule_idx;
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& c) {
            return std::tie(a.target, a.ykey, a.rule) < std::tie(c.target, c.ykey, c.rule);
        });

        EPSet claimed;
        for (const Candidate& cand : cands) {
            EPSet avail = set_difference(x_set(st, cand.fr), claimed);
            if (avail.is_empty()) continue;
            claimed = set_union(claimed, avail);
            int to = intern_entry(cand.target);
            switch (cand.fr.kind) {
                case 0:
                    wit.w.add_edge(from, st.edges[cand.fr.local].x, st.edges[cand.fr.local].y, to);
                    break;
                case 1: {
                    Letter y = st.xtails[cand.fr.local].y;
                    for (Letter e : avail.explicit_letters) wit.w.add_edge(from, e, y, to);
                    for (const ArithClass& c : avail.classes) wit.w.add_xtail(from, c, y, to);
                    break;
                }
                case 2:
                    wit.w.add_edge(from, st.ytails[cand.fr.local].x,
                                   st.ytails[cand.fr.local].ycls.least(), to);
                    break;
                default:
                    for (Letter e : avail.explicit_letters) wit.w.add_edge(from, e, e, to);
                    for (const ArithClass& c : avail.classes) wit.w.add_diag(from, c, to);
                    break;
            }
        }
    }

    wit.w.validate();
    wit.tx = project(wit.w);
    return wit;
}

namespace {

// First coordinates m for which the host state has a move (m, y) -> target.
EPSet host_x_into(const PairState& st, Letter y, int target) {
    EPSet out;
    for (const auto& e : st.edges)
        if (e.y == y && e.target == target) out.add_letter(e.x);
    for (const auto& m : st.xtails)
        if (m.y == y && m.target == target) out.add_class(m.xcls);
    for (const auto& m : st.ytails)
        if (m.ycls.contains(y) && m.target == target) out.add_letter(m.x);
    for (const auto& m : st.diags)
        if (m.cls.contains(y) && m.target == target) out.add_letter(y);
    return out;
}

// First coordinates m for which the host state has a move (m, m) -> target.
EPSet host_diag_into(const PairState& st, int target) {
    EPSet out;
    for (const auto& e : st.edges)
        if (e.x == e.y && e.target == target) out.add_letter(e.x);
    for (const auto& m : st.xtails)
        if (m.xcls.contains(m.y) && m.target == target) out.add_letter(m.y);
    for (const auto& m : st.ytails)
        if (m.ycls.contains(m.x) && m.target == target) out.add_letter(m.x);
    for (const auto& m : st.diags)
        if (m.target == target) out.add_class(m.cls);
    return out;
}

}  // namespace

CheckReport verify_witness(const PairTree& host, const WitnessPairTree& wit, const Ideal& ideal,
                           int depth, Letter letter_bound) {
    CheckReport rep;
    const PairTree& w = wit.w;

    if (w.is_empty()) {
        rep.add("witness tree is empty");
        return rep;
    }
    try {
        w.validate();
    } catch (const Error& e) {
        rep.add(std::string("witness tree malformed: ") + e.what());
        return rep;
    }
    if (static_cast<int>(wit.embedding.size()) != w.state_count()) {
        rep.add("embedding does not cover the witness states");
        return rep;
    }
    for (int v : wit.embedding)
        if (v < 0 || v >= host.state_count()) {
            rep.add("embedding leaves the host state space");
            return rep;
        }
    if (host.is_empty() || wit.embedding[w.start()] != host.start())
        rep.add("embedding does not send start to start");

    // prunedness
    std::vector<char> live = w.live_states();
    for (int q = 0; q < w.state_count(); ++q)
        if (!live[q]) rep.add("witness state " + w.state(q).name + " is dead");

    for (int q = 0; q < w.state_count(); ++q) {
        const PairState& st = w.state(q);
        int h = wit.embedding[q];
        const PairState& hst = host.state(h);

        // uniformity: one second coordinate per first coordinate
        if (!st.ytails.empty())
            rep.add("witness state " + st.name + " has an infinite second-coordinate family");
        std::vector<EPSet> xsets;
        for (const auto& e : st.edges) xsets.push_back(EPSet::single(e.x));
        for (const auto& m : st.xtails) xsets.push_back(EPSet::of_class(m.xcls));
        for (const auto& m : st.diags) xsets.push_back(EPSet::of_class(m.cls));
        for (std::size_t i = 0; i < xsets.size(); ++i)
            for (std::size_t j = i + 1; j < xsets.size(); ++j)
                if (!set_intersect(xsets[i], xsets[j]).is_empty())
                    rep.add("witness state " + st.name + " maps a first coordinate two ways");

        // embedding legality: every witness move is a host move
        for (const auto& e : st.edges)
            if (host.step_pair(h, e.x, e.y) != wit.embedding[e.target])
                rep.add("witness move at " + st.name + " is not a host move");
        for (const auto& m : st.xtails)
            if (!is_subset(EPSet::of_class(m.xcls),
                           host_x_into(hst, m.y, wit.embedding[m.target])))
                rep.add("witness tail at " + st.name + " is not a host move family");
        for (const auto& m : st.diags)
            if (!is_subset(EPSet::of_class(m.cls), host_diag_into(hst, wit.embedding[m.target])))
                rep.add("witness diagonal at " + st.name + " is not a host move family");

        // branching discipline: non-singleton families must be ideal-large
        EPSet family = w.x_family(q);
        bool single = family.classes.empty() && family.explicit_letters.size() == 1;
        if (!single && ideal_member(family, ideal))
            rep.add("witness state " + st.name + " branches into an ideal-small family");
    }

    // first-coordinate tree: perfect, pruned, and consistent with w
    if (wit.tx.is_empty()) {
        rep.add("first-coordinate tree is empty");
        return rep;
    }
    try {
        wit.tx.validate();
    } catch (const Error& e) {
        rep.add(std::string("first-coordinate tree malformed: ") + e.what());
        return rep;
    }
    std::vector<char> tx_live = wit.tx.live_states();
    for (int q = 0; q < wit.tx.state_count(); ++q)
        if (!tx_live[q]) rep.add("first-coordinate state " + wit.tx.state(q).name + " is dead");
    if (!is_perfect_tree(wit.tx))
        rep.add("first-coordinate tree is not perfect");

    NTree pw = project(w);
    LetterSet letters = extended_letters(wit.tx, letter_bound);
    for (Letter a : extended_letters(pw, letter_bound))
        letters.push_back(a);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (!snapshots_agree(wit.tx, pw, letters, depth))
        rep.add("first-coordinate tree disagrees with the witness projection");

    // sampled containment in the host's first coordinates
    int listed = 0;
    for (const auto& xs : snapshot_ntree(wit.tx, interval_letters(letter_bound), depth))
        if (!pair_proj_contains(host, xs)) {
            if (listed++ < 5) {
                std::string word;
                for (Letter a : xs) word += (word.empty() ? "" : ",") + std::to_string(a);
                rep.add("first-coordinate string <" + word + "> is not projected from the host");
            }
        }

    return rep;
}

}  // namespace sigscope
