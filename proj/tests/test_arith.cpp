#include "doctest.h"

#include "oracles.hpp"
#include "sigscope/arith.hpp"
#include "sigscope/errors.hpp"

using namespace sigscope;

TEST_CASE("arithmetic classes") {
    ArithClass c = make_class(3, 4, 1);
    CHECK(c.least() == 5);
    CHECK(c.least_above(5) == 9);
    CHECK(c.least_above(0) == 5);
    CHECK(c.contains(5));
    CHECK(c.contains(9));
    CHECK(!c.contains(1));
    CHECK(!c.contains(6));

    CHECK(make_class(0, 1, 0).least() == 0);
    CHECK_THROWS_AS(make_class(0, 0, 0), Error);
    CHECK_THROWS_AS(make_class(0, 3, 3), Error);

    CHECK(classes_intersect(make_class(0, 2, 0), make_class(10, 4, 2)));
    CHECK(!classes_intersect(make_class(0, 2, 0), make_class(0, 2, 1)));
    CHECK(!classes_intersect(make_class(0, 4, 1), make_class(0, 4, 3)));
}

TEST_CASE("EPSet membership and enumeration") {
    EPSet s = EPSet::single(3);
    s.add_class(make_class(10, 2, 0));
    CHECK(s.contains(3));
    CHECK(s.contains(10));
    CHECK(s.contains(12));
    CHECK(!s.contains(4));
    CHECK(!s.contains(11));
    CHECK(s.least() == 3);
    CHECK(s.count_upto(12) == 3);
    CHECK(s.members_upto(14) == std::vector<Letter>{3, 10, 12, 14});

    CHECK(!EPSet::empty().least().has_value());
    CHECK(EPSet::empty().count_upto(100) == 0);
    CHECK(EPSet::of_class(make_class(0, 3, 2)).least() == 2);
}

static bool enum_equal(const EPSet& a, const EPSet& b) {
    for (Letter n = 0; n <= 100; ++n)
        if (a.contains(n) != b.contains(n)) return false;
    return true;
}

TEST_CASE("set algebra agrees with pointwise enumeration") {
    testutil::TreeGen gen(411);
    for (int round = 0; round < 200; ++round) {
        EPSet a = gen.random_epset();
        EPSet b = gen.random_epset();

        EPSet u = set_union(a, b);
        EPSet i = set_intersect(a, b);
        EPSet d = set_difference(a, b);
        EPSet c = set_complement(a);
        for (Letter n = 0; n <= 100; ++n) {
            CHECK(u.contains(n) == (a.contains(n) || b.contains(n)));
            CHECK(i.contains(n) == (a.contains(n) && b.contains(n)));
            CHECK(d.contains(n) == (a.contains(n) && !b.contains(n)));
            CHECK(c.contains(n) == !a.contains(n));
        }

        CHECK(sets_equal(a, set_complement(c)));
        CHECK(is_subset(i, a));
        CHECK(is_subset(a, u));
        CHECK(sets_equal(set_union(d, i), a));
        // past every threshold, 0..100 enumeration decides equality
        CHECK(enum_equal(set_union(a, b), set_union(b, a)));

        CHECK(difference_finite(a, b) == testutil::enumerated_finite(a, b));
    }
}

TEST_CASE("profiles and rebuild produce canonical sets") {
    EPSet a = EPSet::of_class(make_class(5, 6, 1));
    a.add_letter(2);
    SetProfile p = profile_of(a);
    CHECK(p.lcm % 6 == 0);
    EPSet again = rebuild(p, [&](Letter n) { return a.contains(n); });
    CHECK(sets_equal(a, again));
    CHECK(enum_equal(a, again));

    CHECK(checked_lcm(4, 6) == 12);
    CHECK(checked_lcm(1, 1) == 1);
}
