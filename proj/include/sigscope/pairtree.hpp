#ifndef SIGSCOPE_PAIRTREE_HPP
#define SIGSCOPE_PAIRTREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sigscope/arith.hpp"
#include "sigscope/ntree.hpp"

namespace sigscope {

/// Presentation of a tree of equal-length string pairs. Moves consume one
/// (x, y) letter pair each. Pair-determinism: at every state at most one move
/// applies to any concrete pair.
struct PairEdge {
    Letter x, y;
    int target;
};

/// Class of x-letters, fixed y-letter.
struct XTailMove {
    ArithClass xcls;
    Letter y;
    int target;
};

/// Fixed x-letter, class of y-letters.
struct YTailMove {
    Letter x;
    ArithClass ycls;
    int target;
};

/// Class of letters taken on both coordinates at once (x = y).
struct DiagMove {
    ArithClass cls;
    int target;
};

struct PairState {
    std::string name;
    std::vector<PairEdge> edges;
    std::vector<XTailMove> xtails;
    std::vector<YTailMove> ytails;
    std::vector<DiagMove> diags;

    bool has_moves() const {
        return !edges.empty() || !xtails.empty() || !ytails.empty() || !diags.empty();
    }
};

class PairTree {
  public:
    PairTree() = default;

    static PairTree empty_tree() { return PairTree(); }

    int add_state(const std::string& name);
    void set_start(int s) { start_ = s; }
    void add_edge(int from, Letter x, Letter y, int to);
    void add_xtail(int from, const ArithClass& xcls, Letter y, int to);
    void add_ytail(int from, Letter x, const ArithClass& ycls, int to);
    void add_diag(int from, const ArithClass& cls, int to);

    bool is_empty() const { return start_ < 0; }
    int start() const { return start_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    const PairState& state(int i) const { return states_[i]; }
    const std::vector<PairState>& states() const { return states_; }
    int state_by_name(const std::string& name) const;

    /// Target of the unique move admitting the pair, or -1.
    int step_pair(int q, Letter x, Letter y) const;

    std::optional<int> run(const std::vector<Letter>& xs, const std::vector<Letter>& ys) const;

    /// Targets reachable on x-letter m with some y-letter, ascending, unique.
    void x_targets(int q, Letter m, std::vector<int>& out) const;

    /// All x-letters with a move at the state.
    EPSet x_family(int q) const;

    /// x-letters of moves whose target satisfies keep[target].
    EPSet x_family_into(int q, const std::vector<char>& keep) const;

    std::vector<char> live_states() const;
    PairTree restrict(const std::vector<char>& keep) const;

    void validate() const;

  private:
    std::vector<PairState> states_;
    int start_ = -1;
};

/// Largest pair-pruned subtree presentation.
PairTree pair_prune(const PairTree& s);

/// Subtree of nodes comparable with (u, v): the chain down to (u, v) and the
/// original behavior below it. Errors NotInTree if (u, v) is not a member.
PairTree pair_subtree(const PairTree& s, const std::vector<Letter>& u, const std::vector<Letter>& v);

/// Prefix tree of the branches that pass through state q: the product of s
/// with a visited-q flag, restricted to runs that can still reach q or already
/// did, pruned. q must be a state index of s.
PairTree visiting_subtree(const PairTree& s, int q);

/// visiting_subtree computed inside the sub-presentation restricted to the
/// given state set.
PairTree visiting_subtree_within(const PairTree& s, const std::vector<char>& stage, int q);

/// Canonical pair presentation of a single tree: every letter taken on both
/// coordinates (edges become (l, l) edges, tail classes become diag moves).
PairTree diag_pairize(const NTree& t);

}  // namespace sigscope

#endif
