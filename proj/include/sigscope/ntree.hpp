#ifndef SIGSCOPE_NTREE_HPP
#define SIGSCOPE_NTREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sigscope/arith.hpp"
#include "sigscope/point.hpp"

namespace sigscope {

/// One-state-per-node presentation of a tree over natural-number letters.
/// Every state is accepting: a string belongs to the denoted tree iff its run
/// from the start consumes every letter, so the denotation is prefix-closed by
/// construction. Determinism: the explicit edge letters and tail classes at a
/// state are pairwise disjoint.
struct NTreeEdge {
    Letter letter;
    int target;
};

struct NTreeTail {
    ArithClass cls;
    int target;
};

struct NTreeState {
    std::string name;
    std::vector<NTreeEdge> edges;
    std::vector<NTreeTail> tails;
};

class NTree {
  public:
    NTree() = default;

    static NTree empty_tree() { return NTree(); }

    int add_state(const std::string& name);
    void set_start(int s) { start_ = s; }
    void add_edge(int from, Letter letter, int to);
    void add_tail(int from, const ArithClass& cls, int to);

    bool is_empty() const { return start_ < 0; }
    int start() const { return start_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    const NTreeState& state(int i) const { return states_[i]; }
    const std::vector<NTreeState>& states() const { return states_; }
    int state_by_name(const std::string& name) const;

    /// Target of the unique rule admitting the letter, or -1.
    int step(int q, Letter letter) const;

    /// Final state of the run consuming s, or nullopt if the run dies.
    std::optional<int> run(const std::vector<Letter>& s) const;

    /// Union of edge letters and tail classes at a state.
    EPSet successor_family(int q) const;

    /// Successor family restricted to rules whose target satisfies keep[target].
    EPSet successor_family_into(int q, const std::vector<char>& keep) const;

    /// States with an infinite path (a cycle reachable through kept rules).
    std::vector<char> live_states() const;

    /// name collision-free copy restricted to states with keep[i], re-rooted at
    /// the original start. Returns the canonical empty tree when the start is
    /// not kept or dies.
    NTree restrict(const std::vector<char>& keep) const;

    /// Validation: determinism at every state, rule targets in range, every
    /// state reachable from the start. Throws ValidationError.
    void validate() const;

  private:
    std::vector<NTreeState> states_;
    int start_ = -1;
};

bool contains_string(const NTree& t, const std::vector<Letter>& s);

/// Successor family of the node reached by s. Errors NotInTree when s is not a
/// member.
EPSet successor_set(const NTree& t, const std::vector<Letter>& s);

/// Largest pruned subtree presentation: the restriction to live states. The
/// branch set is unchanged. Returns the canonical empty tree when no live state
/// is reachable from the start.
NTree prune(const NTree& t);

/// Whether the eventually periodic point is a branch; decided by running it
/// until a (state, phase) pair repeats.
bool branch_member(const NTree& t, const EPPoint& x);

struct StemInfo {
    std::optional<std::vector<Letter>> stem;  // absent when the branch set is a singleton
    long diam_num = 0;
    long diam_den = 1;
};

/// Stem (shortest node with >= 2 successors) and diameter 1/(1 + lh stem) of
/// the branch set; (absent, 0) for a singleton branch set. Requires a pruned,
/// nonempty presentation; errors EmptyTree otherwise.
StemInfo stem_and_diam(const NTree& t);

/// Number of proper prefixes of s with >= 2 successors. Errors NotInTree.
std::size_t branching_height(const NTree& t, const std::vector<Letter>& s);

/// Pruned with only finite successor families: all states live and no tails.
bool is_compact_tree(const NTree& t);

/// Every state reaches a state with >= 2 successors. Requires pruned input.
bool is_perfect_tree(const NTree& t);

}  // namespace sigscope

#endif
