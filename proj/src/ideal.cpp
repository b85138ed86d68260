#include "sigscope/ideal.hpp"

#include "sigscope/errors.hpp"

namespace sigscope {

Ideal fin_ideal() { return Ideal{"fin", EPSet::empty()}; }

bool is_fin(const Ideal& i) { return i.base.is_empty(); }

void check_proper(const Ideal& i) {
    if (set_complement(i.base).is_finite())
        fail(Errc::ImproperIdeal, "ideal base " + i.name + " is cofinite");
}

bool ideal_member(const EPSet& xs, const Ideal& i) {
    return difference_finite(xs, i.base);
}

Ideal ideal_join(const Ideal& a, const Ideal& b) {
    Ideal out{a.name + "+" + b.name, set_union(a.base, b.base)};
    check_proper(out);
    return out;
}

}  // namespace sigscope
