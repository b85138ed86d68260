#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "sigscope/errors.hpp"
#include "sigscope/uniformize.hpp"
#include "util.hpp"

using namespace sigscope;
using testutil::fixture_pair;

namespace {

Letter moduli_lcm(const PairTree& s) {
    Letter l = 1;
    for (int q = 0; q < s.state_count(); ++q) {
        const PairState& st = s.state(q);
        for (const auto& m : st.xtails) l = std::lcm(l, m.xcls.modulus);
        for (const auto& m : st.ytails) l = std::lcm(l, m.ycls.modulus);
        for (const auto& m : st.diags) l = std::lcm(l, m.cls.modulus);
    }
    return l;
}

void check_leftmost(const char* name, const char* point) {
    PairTree s = fixture_pair(name);
    EPPoint x = parse_point(point);
    UniformizeResult r = leftmost_uniformize(s, x);

    // pointwise least against the enumerated depth-5 section
    auto section = testutil::enumerate_section_prefixes(s, x, 5);
    REQUIRE(!section.empty());
    CHECK(r.y.unroll(5) == *section.begin());

    // eventual period within the state-times-phase bound
    Letter bound = static_cast<Letter>(s.state_count()) *
                   std::lcm(static_cast<Letter>(x.period.size()), moduli_lcm(s));
    CHECK(static_cast<Letter>(r.y.period.size()) <= bound);
}

}  // namespace

TEST_CASE("leftmost sections of the curated trees") {
    check_leftmost("DIAG", "2,(7)");
    check_leftmost("DIAG", "(0)");
    check_leftmost("DIAG", "5,1,(3,4)");
    check_leftmost("HALF", "2,(7)");
    check_leftmost("HALF", "0,(1,6)");
    check_leftmost("EVPAIR", "4,(2)");
    check_leftmost("YFAN", "0,(5)");

    // the diagonal forces y = x
    UniformizeResult r = leftmost_uniformize(fixture_pair("DIAG"), parse_point("2,(7)"));
    CHECK(points_equal(r.y, parse_point("2,(7)")));
    CHECK(!r.noncompact_warning);

    // HALF forces y(0) = 0 and copies afterwards
    UniformizeResult h = leftmost_uniformize(fixture_pair("HALF"), parse_point("2,(7)"));
    CHECK(points_equal(h.y, parse_point("0,(7)")));

    // EVPAIR pins y to zero everywhere
    UniformizeResult e = leftmost_uniformize(fixture_pair("EVPAIR"), parse_point("4,(2)"));
    CHECK(points_equal(e.y, parse_point("(0)")));
}

TEST_CASE("infinite fibers carry a warning") {
    UniformizeResult y = leftmost_uniformize(fixture_pair("YFAN"), parse_point("0,(5)"));
    CHECK(y.noncompact_warning);
    CHECK(points_equal(y.y, parse_point("0,(5)")));

    CHECK(!leftmost_uniformize(fixture_pair("HALF"), parse_point("0,(0)")).noncompact_warning);
}

TEST_CASE("points outside the projection have no section") {
    CHECK_THROWS_AS(leftmost_uniformize(fixture_pair("HALF"), parse_point("(1)")), Error);
    CHECK_THROWS_AS(leftmost_uniformize(fixture_pair("EVPAIR"), parse_point("2,(3)")), Error);
    try {
        leftmost_uniformize(fixture_pair("HALF"), parse_point("(1)"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptySection);
    }
    CHECK_THROWS_AS(leftmost_uniformize(PairTree::empty_tree(), parse_point("(0)")), Error);
}

TEST_CASE("walk effort is reported") {
    UniformizeResult r = leftmost_uniformize(fixture_pair("DIAG"), parse_point("2,(7)"));
    CHECK(r.walk_steps > 0);
}
