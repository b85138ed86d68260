#pragma once

#include <string>

#include "sigscope/arith.hpp"

namespace sigscope {

// Dilute ideal on the naturals: X is small iff X \ base is finite.
// An empty base gives the ideal of finite sets.
struct Ideal {
    std::string name;
    EPSet base;
};

Ideal fin_ideal();

bool is_fin(const Ideal& i);

// Fails with ImproperIdeal unless the complement of the base is infinite.
void check_proper(const Ideal& i);

bool ideal_member(const EPSet& xs, const Ideal& i);

// Join of two dilute ideals: base is the union of the bases.
// Fails with ImproperIdeal when the joined base is cofinite.
Ideal ideal_join(const Ideal& a, const Ideal& b);

}  // namespace sigscope
