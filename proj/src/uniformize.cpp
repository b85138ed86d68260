#include "sigscope/uniformize.hpp"

#include <map>
#include <optional>

#include "sigscope/errors.hpp"

namespace sigscope {

UniformizeResult leftmost_uniformize(const PairTree& s, const EPPoint& x) {
    PairTree t = pair_prune(s);
    if (t.is_empty()) fail(Errc::EmptySection, "tree has no branches");
    std::size_t phases = x.phase_count();
    auto letter_of = [&](std::size_t ph) {
        return ph < x.prefix.size() ? x.prefix[ph] : x.period[ph - x.prefix.size()];
    };
    auto next_phase = [&](std::size_t ph) {
        return ph + 1 < phases ? ph + 1 : x.prefix.size();
    };

    // alive(q, ph): the rest of x is realizable from state q at phase ph
    std::vector<std::vector<char>> alive(t.state_count(), std::vector<char>(phases, 1));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int q = 0; q < t.state_count(); ++q)
            for (std::size_t ph = 0; ph < phases; ++ph) {
                if (!alive[q][ph]) continue;
                Letter a = letter_of(ph);
                std::size_t np = next_phase(ph);
                const PairState& st = t.state(q);
                bool ok = false;
                for (const auto& e : st.edges)
                    if (e.x == a && alive[e.target][np]) { ok = true; break; }
                if (!ok)
                    for (const auto& m : st.xtails)
                        if (m.xcls.contains(a) && alive[m.target][np]) { ok = true; break; }
                if (!ok)
                    for (const auto& m : st.ytails)
                        if (m.x == a && alive[m.target][np]) { ok = true; break; }
                if (!ok)
                    for (const auto& m : st.diags)
                        if (m.cls.contains(a) && alive[m.target][np]) { ok = true; break; }
                if (!ok) {
                    alive[q][ph] = 0;
                    changed = true;
                }
            }
    }
    if (!alive[t.start()][0])
        fail(Errc::EmptySection, "the first coordinate is not a projected branch");

    UniformizeResult out;
    std::vector<Letter> ys;
    std::map<std::pair<int, std::size_t>, std::size_t> seen;
    int q = t.start();
    std::size_t ph = 0;
    for (;;) {
        if (ph >= x.prefix.size()) {
            auto key = std::make_pair(q, ph);
            auto it = seen.find(key);
            if (it != seen.end()) {
                out.y.prefix.assign(ys.begin(), ys.begin() + it->second);
                out.y.period.assign(ys.begin() + it->second, ys.end());
                return out;
            }
            seen[key] = ys.size();
        }
        Letter a = letter_of(ph);
        std::size_t np = next_phase(ph);
        const PairState& st = t.state(q);
        std::optional<Letter> best;
        int best_target = -1;
        auto offer = [&](Letter y, int target) {
            if (!alive[target][np]) return;
            if (!best || y < *best) {
                best = y;
                best_target = target;
            }
        };
        for (const auto& e : st.edges)
            if (e.x == a) offer(e.y, e.target);
        for (const auto& m : st.xtails)
            if (m.xcls.contains(a)) offer(m.y, m.target);
        for (const auto& m : st.ytails)
            if (m.x == a && alive[m.target][np]) {
                out.noncompact_warning = true;
                offer(m.ycls.least(), m.target);
            }
        for (const auto& m : st.diags)
            if (m.cls.contains(a)) offer(a, m.target);
        if (!best) fail(Errc::InternalSoundness, "alive state ran out of moves");
        ys.push_back(*best);
        ++out.walk_steps;
        q = best_target;
        ph = np;
    }
}

}  // namespace sigscope
