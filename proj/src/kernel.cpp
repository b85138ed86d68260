#include "sigscope/kernel.hpp"

#include <deque>

#include "sigscope/errors.hpp"

namespace sigscope {

namespace {

// Successor lists (targets of any rule) per state.
template <typename Tree>
std::vector<std::vector<int>> successors(const Tree& t);

template <>
std::vector<std::vector<int>> successors(const NTree& t) {
    std::vector<std::vector<int>> out(t.state_count());
    for (int q = 0; q < t.state_count(); ++q) {
        for (const auto& e : t.state(q).edges) out[q].push_back(e.target);
        for (const auto& tl : t.state(q).tails) out[q].push_back(tl.target);
    }
    return out;
}

template <>
std::vector<std::vector<int>> successors(const PairTree& s) {
    std::vector<std::vector<int>> out(s.state_count());
    for (int q = 0; q < s.state_count(); ++q) {
        const PairState& st = s.state(q);
        for (const auto& e : st.edges) out[q].push_back(e.target);
        for (const auto& m : st.xtails) out[q].push_back(m.target);
        for (const auto& m : st.ytails) out[q].push_back(m.target);
        for (const auto& m : st.diags) out[q].push_back(m.target);
    }
    return out;
}

// Reflexive backward closure of seed along the successor relation.
std::vector<char> can_reach(const std::vector<std::vector<int>>& succ,
                            const std::vector<char>& seed) {
    std::vector<char> out = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < succ.size(); ++q) {
            if (out[q]) continue;
            for (int to : succ[q])
                if (out[to]) {
                    out[q] = 1;
                    changed = true;
                    break;
                }
        }
    }
    return out;
}

template <typename Tree, typename FamilyInto>
KernelResult kernel_gfp(const Tree& t, const Ideal& ideal, FamilyInto family_into) {
    KernelResult r;
    if (t.is_empty()) return r;
    auto succ = successors(t);
    std::vector<char> kept(t.state_count(), 1);
    for (;;) {
        ++r.iterations;
        std::vector<char> large(t.state_count(), 0);
        for (int p = 0; p < t.state_count(); ++p)
            if (kept[p] && !ideal_member(family_into(p, kept), ideal)) large[p] = 1;
        std::vector<char> next = can_reach(succ, large);
        for (int q = 0; q < t.state_count(); ++q) next[q] = next[q] && kept[q];
        if (next == kept) break;
        kept = next;
    }
    r.kernel = kept;
    r.start_in_kernel = kept[t.start()];
    return r;
}

template <typename Tree, typename FamilyInto>
std::vector<char> oracle_gfp(const Tree& t, const Ideal& ideal, FamilyInto family_into) {
    if (t.is_empty()) return {};
    int n = t.state_count();
    if (n > kOracleStateCap)
        fail(Errc::BoundsTooLarge, "subset enumeration limited to " +
                                       std::to_string(kOracleStateCap) + " states");
    auto succ = successors(t);
    std::vector<char> result(n, 0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<char> sub(n, 0);
        for (int q = 0; q < n; ++q) sub[q] = (mask >> q) & 1;
        std::vector<char> large(n, 0);
        for (int p = 0; p < n; ++p)
            if (!ideal_member(family_into(p, sub), ideal)) large[p] = 1;
        std::vector<char> reach_large = can_reach(succ, large);
        bool post = true;
        for (int q = 0; q < n && post; ++q)
            if (sub[q] && !reach_large[q]) post = false;
        if (post)
            for (int q = 0; q < n; ++q) result[q] = result[q] || sub[q];
    }
    return result;
}

}  // namespace

KernelResult positive_kernel(const NTree& t, const Ideal& ideal) {
    return kernel_gfp(t, ideal, [&](int p, const std::vector<char>& kept) {
        return t.successor_family_into(p, kept);
    });
}

KernelResult pair_kernel(const PairTree& s, const Ideal& ideal) {
    return kernel_gfp(s, ideal, [&](int p, const std::vector<char>& kept) {
        return s.x_family_into(p, kept);
    });
}

std::vector<char> kernel_oracle(const NTree& t, const Ideal& ideal) {
    return oracle_gfp(t, ideal, [&](int p, const std::vector<char>& sub) {
        return t.successor_family_into(p, sub);
    });
}

std::vector<char> pair_kernel_oracle(const PairTree& s, const Ideal& ideal) {
    return oracle_gfp(s, ideal, [&](int p, const std::vector<char>& sub) {
        return s.x_family_into(p, sub);
    });
}

}  // namespace sigscope
