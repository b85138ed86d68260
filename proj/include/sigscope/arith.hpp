#ifndef SIGSCOPE_ARITH_HPP
#define SIGSCOPE_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sigscope {

using Letter = std::uint64_t;

/// Arithmetic letter class {n : n >= threshold and n == residue (mod modulus)}.
/// modulus >= 1, residue < modulus. Always denotes an infinite set.
struct ArithClass {
    Letter threshold = 0;
    Letter modulus = 1;
    Letter residue = 0;

    bool contains(Letter n) const { return n >= threshold && n % modulus == residue; }

    /// Smallest member.
    Letter least() const;

    /// Smallest member strictly greater than b.
    Letter least_above(Letter b) const;

    bool operator==(const ArithClass&) const = default;
};

/// Check an (threshold, modulus, residue) triple and build the class.
ArithClass make_class(Letter threshold, Letter modulus, Letter residue);

bool classes_intersect(const ArithClass& a, const ArithClass& b);

/// Finite union of explicit letters and arithmetic classes. The workhorse set
/// representation: successor families, ideal bases and letter families are all
/// EPSets. Membership beyond every threshold and explicit letter depends only on
/// the residue modulo the lcm of the moduli, which makes the full Boolean
/// algebra decidable.
struct EPSet {
    std::vector<Letter> explicit_letters;  // sorted, unique
    std::vector<ArithClass> classes;

    static EPSet empty() { return EPSet{}; }
    static EPSet single(Letter n) { return EPSet{{n}, {}}; }
    static EPSet of_class(const ArithClass& c) { return EPSet{{}, {c}}; }

    bool contains(Letter n) const;
    bool is_empty() const { return explicit_letters.empty() && classes.empty(); }

    /// A class denotes an infinite set, so the representation is finite iff it
    /// carries no class. Canonical forms produced by rebuild() only carry
    /// classes for genuinely infinite residues.
    bool is_finite() const { return classes.empty(); }

    std::optional<Letter> least() const;

    /// Number of members <= b.
    std::size_t count_upto(Letter b) const;

    /// All members <= b, ascending.
    std::vector<Letter> members_upto(Letter b) const;

    void add_letter(Letter n);
    void add_class(const ArithClass& c);

    std::string to_string() const;
};

/// Horizon H and modulus L such that membership of any n >= H in the set
/// depends only on n mod L.
struct SetProfile {
    Letter horizon;
    Letter lcm;
};

SetProfile profile_of(const EPSet& a);
SetProfile merge_profiles(SetProfile x, SetProfile y);

/// Canonical EPSet for an arbitrary predicate sampled on [0, H) and on one
/// representative per residue class at or beyond H.
template <typename Pred>
EPSet rebuild(SetProfile p, Pred&& member) {
    EPSet out;
    for (Letter n = 0; n < p.horizon; ++n)
        if (member(n)) out.explicit_letters.push_back(n);
    for (Letter r = 0; r < p.lcm; ++r) {
        Letter rep = p.horizon + (r + p.lcm - p.horizon % p.lcm) % p.lcm;
        if (member(rep)) out.classes.push_back(ArithClass{rep, p.lcm, rep % p.lcm});
    }
    return out;
}

EPSet set_union(const EPSet& a, const EPSet& b);
EPSet set_intersect(const EPSet& a, const EPSet& b);
EPSet set_difference(const EPSet& a, const EPSet& b);
EPSet set_complement(const EPSet& a);
bool sets_equal(const EPSet& a, const EPSet& b);
bool is_subset(const EPSet& a, const EPSet& b);

/// Exact finiteness of the denoted difference a \ b.
bool difference_finite(const EPSet& a, const EPSet& b);

Letter checked_lcm(Letter a, Letter b);

}  // namespace sigscope

#endif
