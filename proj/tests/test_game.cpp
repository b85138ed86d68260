#include "doctest.h"

#include "oracles.hpp"
#include "sigscope/errors.hpp"
#include "sigscope/game.hpp"
#include "sigscope/project.hpp"
#include "sigscope/snapshot.hpp"
#include "util.hpp"

using namespace sigscope;
using testutil::fixture_ntree;
using testutil::fixture_pair;

TEST_CASE("containments that hold") {
    GameResult r = closure_contained(fixture_ntree("BIN"), project(fixture_pair("DIAG")));
    CHECK(r.contained);
    CHECK(!r.counterexample.has_value());

    CHECK(closure_contained(fixture_ntree("COMB"), fixture_ntree("FULL")).contained);
    CHECK(closure_contained(fixture_ntree("EVEN"), fixture_ntree("FULL")).contained);
    CHECK(closure_contained(fixture_ntree("BIN"), fixture_ntree("MIXED1")).contained);

    // every branch of EVEN starts even, so EVEN embeds into HALF's projection
    CHECK(closure_contained(fixture_ntree("EVEN"), project(fixture_pair("HALF"))).contained);

    // reflexivity
    for (const char* name : {"FULL", "BIN", "COMB", "EVEN", "MIXED1"}) {
        NTree t = fixture_ntree(name);
        CHECK(closure_contained(t, t).contained);
    }
}

TEST_CASE("violations come with a checkable branch") {
    // FULL has branches with an odd first letter; HALF's projection does not
    NTree left = fixture_ntree("FULL");
    PairTree host = fixture_pair("HALF");
    GameResult r = closure_contained(left, project(host));
    REQUIRE(!r.contained);
    REQUIRE(r.counterexample.has_value());
    const EPPoint& x = *r.counterexample;
    CHECK(branch_member(left, x));
    CHECK(x.at(0) % 2 == 1);
    // some finite prefix of the branch already fails in the host projection
    bool rejected = false;
    for (std::size_t len = 1; len <= 12 && !rejected; ++len)
        rejected = !pair_proj_contains(host, x.unroll(len));
    CHECK(rejected);

    GameResult q = closure_contained(fixture_ntree("FULL"), fixture_ntree("COMB"));
    REQUIRE(!q.contained);
    CHECK(branch_member(fixture_ntree("FULL"), *q.counterexample));
    CHECK(!branch_member(fixture_ntree("COMB"), *q.counterexample));

    CHECK(q.positions_explored > 0);
}

TEST_CASE("closure containment ignores escapes on dead prefixes") {
    // COMB's closure adds the all-zero continuations; every COMB branch stays
    // inside FULL, and conversely FULL leaves COMB immediately
    CHECK(closure_contained(fixture_ntree("COMB"), fixture_ntree("FULL")).contained);
    CHECK(!closure_contained(fixture_ntree("FULL"), fixture_ntree("COMB")).contained);
}

TEST_CASE("random containment verdicts survive bounded refutation") {
    testutil::TreeGen gen(5150);
    int verdicts = 0;
    for (int round = 0; round < 50; ++round) {
        NTree left = prune(gen.random_ntree(4));
        PairTree s = pair_prune(gen.random_pairtree(4));
        if (left.is_empty() || s.is_empty()) continue;
        ++verdicts;

        NTree right = project(s);
        GameResult r = closure_contained(left, right);
        LetterSet probes = extended_letters(s, 8);
        for (Letter a : extended_letters(left, 8))
            if (std::find(probes.begin(), probes.end(), a) == probes.end()) probes.push_back(a);

        if (r.contained) {
            CHECK(!testutil::refuted_within(left, s, probes, 8));
        } else {
            REQUIRE(r.counterexample.has_value());
            CHECK(branch_member(left, *r.counterexample));
        }
    }
    CHECK(verdicts > 15);
}

TEST_CASE("least branches") {
    EPPoint b = least_branch(fixture_ntree("BIN"));
    CHECK(points_equal(b, parse_point("(0)")));

    EPPoint c = least_branch(fixture_ntree("COMB"));
    CHECK(points_equal(c, parse_point("0,(0)")));

    NTree gap;
    int g = gap.add_state("g");
    gap.set_start(g);
    gap.add_tail(g, make_class(4, 2, 1), g);
    EPPoint lb = least_branch(prune(gap));
    CHECK(points_equal(lb, parse_point("(5)")));

    CHECK_THROWS_AS(least_branch(NTree::empty_tree()), Error);
}
