#include "doctest.h"

#include "sigscope/errors.hpp"
#include "sigscope/pairtree.hpp"
#include "sigscope/project.hpp"
#include "sigscope/snapshot.hpp"
#include "util.hpp"

using namespace sigscope;
using testutil::fixture_ntree;
using testutil::fixture_pair;

TEST_CASE("pair steps cover every move kind") {
    PairTree half = fixture_pair("HALF");
    int h0 = half.state_by_name("h0");
    int h1 = half.state_by_name("h1");
    // h0 takes even x with y 0, h1 takes the diagonal
    CHECK(half.step_pair(h0, 4, 0) == h1);
    CHECK(half.step_pair(h0, 3, 0) == -1);
    CHECK(half.step_pair(h0, 4, 1) == -1);
    CHECK(half.step_pair(h1, 9, 9) == h1);
    CHECK(half.step_pair(h1, 9, 8) == -1);

    PairTree yfan = fixture_pair("YFAN");
    int y0 = yfan.state_by_name("y0");
    CHECK(yfan.run({0, 3}, {7, 3}).has_value());
    CHECK(!yfan.run({1, 3}, {7, 3}).has_value());
    CHECK(yfan.step_pair(y0, 0, 1) == yfan.state_by_name("y1"));
    CHECK(yfan.step_pair(y0, 1, 1) == -1);

    std::vector<int> targets;
    yfan.x_targets(y0, 0, targets);
    CHECK(targets == std::vector<int>{yfan.state_by_name("y1")});
    yfan.x_targets(y0, 2, targets);
    CHECK(targets.empty());
}

TEST_CASE("pair validation rejects overlapping moves") {
    PairTree t;
    int a = t.add_state("a");
    t.set_start(a);
    t.add_edge(a, 2, 2, a);
    t.add_diag(a, make_class(0, 2, 0), a);
    CHECK_THROWS_AS(t.validate(), Error);

    PairTree u;
    int b = u.add_state("b");
    u.set_start(b);
    u.add_xtail(b, make_class(0, 2, 0), 5, b);
    u.add_ytail(b, 4, make_class(0, 1, 0), b);  // both admit (4, 5)
    CHECK_THROWS_AS(u.validate(), Error);

    PairTree v;
    int c = v.add_state("c");
    v.add_state("stray");
    v.set_start(c);
    v.add_diag(c, make_class(0, 1, 0), c);
    CHECK_THROWS_AS(v.validate(), Error);
}

TEST_CASE("pair subtrees") {
    PairTree half = fixture_pair("HALF");
    PairTree below = pair_subtree(half, {2, 7}, {0, 7});
    CHECK(!below.is_empty());
    CHECK(below.run({2, 7, 9}, {0, 7, 9}).has_value());
    CHECK(!below.run({4}, {0}).has_value());  // diverges from the chain
    CHECK_THROWS_AS(pair_subtree(half, {3}, {0}), Error);
    CHECK_THROWS_AS(pair_subtree(half, {2}, {1}), Error);
}

TEST_CASE("visiting subtree only keeps branches through the state") {
    PairTree mixed = fixture_pair("MIXED2");
    int d = mixed.state_by_name("d");
    PairTree vis = visiting_subtree(mixed, d);
    REQUIRE(!vis.is_empty());
    CHECK(vis.run({1, 5}, {1, 5}).has_value());
    CHECK(!vis.run({0, 0}, {0, 0}).has_value());  // that branch never meets d

    // membership in the visiting subtree implies membership in the host
    LetterSet probes = extended_letters(mixed, 4);
    PairSet vs = snapshot_pair(vis, probes, 3);
    PairSet hs = snapshot_pair(mixed, probes, 3);
    for (const auto& pr : vs) CHECK(hs.count(pr) == 1);
}

TEST_CASE("diagonal pairing projects back to the original") {
    NTree comb = fixture_ntree("COMB");
    PairTree diag = diag_pairize(comb);
    diag.validate();
    NTree back = project(diag);
    LetterSet probes = extended_letters(comb, 6);
    CHECK(snapshot_ntree(back, probes, 4) == snapshot_ntree(comb, probes, 4));
}
