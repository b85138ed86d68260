#include "sigscope/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sigscope/errors.hpp"

namespace sigscope {

Letter ArithClass::least() const {
    // smallest n >= threshold with n % modulus == residue
    Letter r = threshold % modulus;
    Letter add = (residue + modulus - r) % modulus;
    return threshold + add;
}

Letter ArithClass::least_above(Letter b) const {
    Letter base = std::max(threshold, b + 1);
    Letter r = base % modulus;
    Letter add = (residue + modulus - r) % modulus;
    return base + add;
}

ArithClass make_class(Letter threshold, Letter modulus, Letter residue) {
    if (modulus < 1) fail(Errc::Validation, "class modulus must be >= 1");
    if (residue >= modulus) fail(Errc::Validation, "class residue must be < modulus");
    return ArithClass{threshold, modulus, residue};
}

bool classes_intersect(const ArithClass& a, const ArithClass& b) {
    // Solvability of n == a.residue (mod a.modulus), n == b.residue (mod b.modulus)
    // with n >= max threshold. A solution mod lcm, if any, repeats forever, so the
    // threshold never blocks it.
    Letter g = std::gcd(a.modulus, b.modulus);
    if (a.residue % g != b.residue % g) return false;
    return true;
}

bool EPSet::contains(Letter n) const {
    if (std::binary_search(explicit_letters.begin(), explicit_letters.end(), n)) return true;
    for (const auto& c : classes)
        if (c.contains(n)) return true;
    return false;
}

std::optional<Letter> EPSet::least() const {
    std::optional<Letter> best;
    if (!explicit_letters.empty()) best = explicit_letters.front();
    for (const auto& c : classes) {
        Letter l = c.least();
        if (!best || l < *best) best = l;
    }
    return best;
}

std::size_t EPSet::count_upto(Letter b) const {
    std::size_t n = 0;
    for (Letter x = 0; x <= b; ++x) {
        if (contains(x)) ++n;
        if (x == b) break;
    }
    return n;
}

std::vector<Letter> EPSet::members_upto(Letter b) const {
    std::vector<Letter> out;
    for (Letter x = 0;; ++x) {
        if (contains(x)) out.push_back(x);
        if (x == b) break;
    }
    return out;
}

void EPSet::add_letter(Letter n) {
    auto it = std::lower_bound(explicit_letters.begin(), explicit_letters.end(), n);
    if (it == explicit_letters.end() || *it != n) explicit_letters.insert(it, n);
}

void EPSet::add_class(const ArithClass& c) { classes.push_back(c); }

std::string EPSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Letter n : explicit_letters) {
        if (!first) os << ',';
        os << n;
        first = false;
    }
    for (const auto& c : classes) {
        if (!first) os << ',';
        os << c.threshold << '+' << c.modulus << "k@" << c.residue;
        first = false;
    }
    os << '}';
    return os.str();
}

Letter checked_lcm(Letter a, Letter b) {
    Letter g = std::gcd(a, b);
    Letter q = a / g;
    if (b != 0 && q > (Letter(1) << 40) / b)
        fail(Errc::BoundsTooLarge, "lcm of class moduli exceeds the supported range");
    return q * b;
}

SetProfile profile_of(const EPSet& a) {
    SetProfile p{0, 1};
    for (Letter n : a.explicit_letters) p.horizon = std::max(p.horizon, n + 1);
    for (const auto& c : a.classes) {
        p.horizon = std::max(p.horizon, c.threshold);
        p.lcm = checked_lcm(p.lcm, c.modulus);
    }
    return p;
}

SetProfile merge_profiles(SetProfile x, SetProfile y) {
    return SetProfile{std::max(x.horizon, y.horizon), checked_lcm(x.lcm, y.lcm)};
}

EPSet set_union(const EPSet& a, const EPSet& b) {
    EPSet out = a;
    for (Letter n : b.explicit_letters) out.add_letter(n);
    for (const auto& c : b.classes) out.classes.push_back(c);
    return out;
}

EPSet set_intersect(const EPSet& a, const EPSet& b) {
    SetProfile p = merge_profiles(profile_of(a), profile_of(b));
    return rebuild(p, [&](Letter n) { return a.contains(n) && b.contains(n); });
}

EPSet set_difference(const EPSet& a, const EPSet& b) {
    SetProfile p = merge_profiles(profile_of(a), profile_of(b));
    return rebuild(p, [&](Letter n) { return a.contains(n) && !b.contains(n); });
}

EPSet set_complement(const EPSet& a) {
    SetProfile p = profile_of(a);
    return rebuild(p, [&](Letter n) { return !a.contains(n); });
}

bool sets_equal(const EPSet& a, const EPSet& b) {
    SetProfile p = merge_profiles(profile_of(a), profile_of(b));
    for (Letter n = 0; n < p.horizon; ++n)
        if (a.contains(n) != b.contains(n)) return false;
    for (Letter r = 0; r < p.lcm; ++r) {
        Letter rep = p.horizon + (r + p.lcm - p.horizon % p.lcm) % p.lcm;
        if (a.contains(rep) != b.contains(rep)) return false;
    }
    return true;
}

bool is_subset(const EPSet& a, const EPSet& b) {
    SetProfile p = merge_profiles(profile_of(a), profile_of(b));
    for (Letter n = 0; n < p.horizon; ++n)
        if (a.contains(n) && !b.contains(n)) return false;
    for (Letter r = 0; r < p.lcm; ++r) {
        Letter rep = p.horizon + (r + p.lcm - p.horizon % p.lcm) % p.lcm;
        if (a.contains(rep) && !b.contains(rep)) return false;
    }
    return true;
}

bool difference_finite(const EPSet& a, const EPSet& b) {
    // a \ b is finite iff no residue class at or beyond the joint horizon meets
    // a but misses b.
    SetProfile p = merge_profiles(profile_of(a), profile_of(b));
    for (Letter r = 0; r < p.lcm; ++r) {
        Letter rep = p.horizon + (r + p.lcm - p.horizon % p.lcm) % p.lcm;
        if (a.contains(rep) && !b.contains(rep)) return false;
    }
    return true;
}

}  // namespace sigscope
