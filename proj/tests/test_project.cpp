#include "doctest.h"

#include "oracles.hpp"
#include "sigscope/errors.hpp"
#include "sigscope/project.hpp"
#include "sigscope/snapshot.hpp"
#include "util.hpp"

using namespace sigscope;
using testutil::fixture_ntree;
using testutil::fixture_pair;

static void check_projection_snapshots(const PairTree& host, const NTree& expect, Letter bound,
                                       int depth) {
    NTree got = project(host);
    LetterSet probes = extended_letters(host, bound);
    for (Letter a : extended_letters(expect, bound))
        if (std::find(probes.begin(), probes.end(), a) == probes.end()) probes.push_back(a);
    CHECK(snapshot_ntree(got, probes, depth) == snapshot_ntree(expect, probes, depth));
}

TEST_CASE("projections of the curated pair trees") {
    check_projection_snapshots(fixture_pair("DIAG"), fixture_ntree("FULL"), 6, 4);
    check_projection_snapshots(fixture_pair("EVPAIR"), fixture_ntree("EVEN"), 6, 4);
    check_projection_snapshots(fixture_pair("COMB_PAIR"), fixture_ntree("COMB"), 6, 4);
    check_projection_snapshots(fixture_pair("BIN_PAIR"), fixture_ntree("BIN"), 6, 4);

    // HALF projects to even-first-letter strings, free afterwards
    NTree halfp = project(fixture_pair("HALF"));
    CHECK(contains_string(halfp, {2, 7, 1}));
    CHECK(contains_string(halfp, {0}));
    CHECK(!contains_string(halfp, {1}));

    // YFAN projects to strings starting 0
    NTree yfanp = project(fixture_pair("YFAN"));
    CHECK(contains_string(yfanp, {0, 9, 9}));
    CHECK(!contains_string(yfanp, {2}));
}

TEST_CASE("projection by subset construction handles shared first letters") {
    // x 0 goes to two different continuations: y 0 leads to a dead end after
    // one more move, y 1 continues forever. The projection must keep <0, 0, 0...>.
    PairTree s;
    int a = s.add_state("a");
    int dead = s.add_state("dead");
    int live = s.add_state("live");
    s.set_start(a);
    s.add_edge(a, 0, 0, dead);
    s.add_edge(a, 0, 1, live);
    s.add_edge(dead, 5, 5, dead);
    s.add_edge(live, 0, 0, live);
    s.validate();

    NTree p = project(pair_prune(s));
    CHECK(contains_string(p, {0, 0, 0, 0}));
    CHECK(contains_string(p, {0, 5, 5}));
    CHECK(!contains_string(p, {0, 0, 5}));
    CHECK(!contains_string(p, {5}));
}

TEST_CASE("projecting the empty tree fails loudly") {
    CHECK_THROWS_AS(project(PairTree::empty_tree()), Error);
    try {
        project(PairTree::empty_tree());
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptyTree);
    }
}

TEST_CASE("tree unions") {
    NTree u = ntree_union({fixture_ntree("BIN"), fixture_ntree("EVEN")});
    CHECK(contains_string(u, {1, 1, 0}));
    CHECK(contains_string(u, {4, 2}));
    CHECK(!contains_string(u, {1, 4}));
    CHECK(!contains_string(u, {3}));

    NTree empty_union = ntree_union({});
    CHECK(empty_union.is_empty());

    NTree single = ntree_union({fixture_ntree("COMB")});
    LetterSet probes = interval_letters(5);
    CHECK(snapshot_ntree(single, probes, 3) == snapshot_ntree(fixture_ntree("COMB"), probes, 3));
}

TEST_CASE("random projections agree with pair snapshots") {
    testutil::TreeGen gen(1337);
    int tested = 0;
    for (int round = 0; round < 60; ++round) {
        PairTree s = pair_prune(gen.random_pairtree(5));
        if (s.is_empty()) continue;
        ++tested;
        NTree p = project(s);
        LetterSet probes = extended_letters(s, 8);
        CHECK(snapshot_ntree(p, probes, 4, 4'000'000) ==
              proj_snapshot_pair(s, probes, 4, 4'000'000));
    }
    CHECK(tested > 20);
}
