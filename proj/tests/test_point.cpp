#include "doctest.h"

#include "sigscope/errors.hpp"
#include "sigscope/point.hpp"

using namespace sigscope;

TEST_CASE("point parsing and printing round-trip") {
    EPPoint p = parse_point("2,(7)");
    CHECK(p.prefix == std::vector<Letter>{2});
    CHECK(p.period == std::vector<Letter>{7});
    CHECK(p.to_string() == "2,(7)");

    EPPoint q = parse_point("(5)");
    CHECK(q.prefix.empty());
    CHECK(q.period == std::vector<Letter>{5});
    CHECK(q.at(0) == 5);
    CHECK(q.at(17) == 5);

    EPPoint r = parse_point("1,2,(3,4)");
    CHECK(r.at(0) == 1);
    CHECK(r.at(1) == 2);
    CHECK(r.at(2) == 3);
    CHECK(r.at(3) == 4);
    CHECK(r.at(4) == 3);
    CHECK(r.unroll(6) == std::vector<Letter>{1, 2, 3, 4, 3, 4});
    CHECK(parse_point(r.to_string()).to_string() == r.to_string());
}

TEST_CASE("point phases index the stationary tail") {
    EPPoint p = parse_point("1,2,(3,4)");
    CHECK(p.phase(0) == 0);
    CHECK(p.phase(1) == 1);
    CHECK(p.phase(2) == 2);
    CHECK(p.phase(4) == 2);
    CHECK(p.phase(5) == 3);
    CHECK(p.phase_count() == 4);
}

TEST_CASE("semantic point equality") {
    CHECK(points_equal(parse_point("(5)"), parse_point("5,(5)")));
    CHECK(points_equal(parse_point("(1,2)"), parse_point("1,(2,1)")));
    CHECK(points_equal(parse_point("(3)"), parse_point("(3,3)")));
    CHECK(!points_equal(parse_point("(5)"), parse_point("(6)")));
    CHECK(!points_equal(parse_point("1,(2)"), parse_point("2,(2)")));
}

TEST_CASE("malformed point literals are rejected") {
    CHECK_THROWS_AS(parse_point(""), Error);
    CHECK_THROWS_AS(parse_point("1,2"), Error);
    CHECK_THROWS_AS(parse_point("1,()"), Error);
    CHECK_THROWS_AS(parse_point("(1"), Error);
    CHECK_THROWS_AS(parse_point("a,(1)"), Error);
    CHECK_THROWS_AS(parse_point("(1),2"), Error);
}
