#include "doctest.h"

#include <algorithm>

#include "sigscope/errors.hpp"
#include "sigscope/snapshot.hpp"
#include "util.hpp"

using namespace sigscope;
using testutil::fixture_ntree;
using testutil::fixture_pair;

TEST_CASE("letter alphabets") {
    CHECK(interval_letters(3) == LetterSet{0, 1, 2, 3});
    CHECK(interval_letters(0) == LetterSet{0});

    // EVEN's tail class contributes samples beyond the interval
    NTree even = fixture_ntree("EVEN");
    LetterSet ext = extended_letters(even, 3);
    CHECK(ext.size() > 4);
    for (Letter a : {0, 1, 2, 3}) CHECK(std::count(ext.begin(), ext.end(), a) == 1);
    bool has_even_past_bound = false;
    for (Letter a : ext) has_even_past_bound |= (a > 3 && a % 2 == 0);
    CHECK(has_even_past_bound);
}

TEST_CASE("tree snapshots at bounded depth") {
    NTree bin = fixture_ntree("BIN");
    StringSet s = snapshot_ntree(bin, interval_letters(4), 3);
    CHECK(s.size() == 15);  // binary strings of length <= 3
    CHECK(s.count({}) == 1);
    CHECK(s.count({0, 1, 0}) == 1);
    CHECK(s.count({2}) == 0);

    CHECK(snapshot_ntree(NTree::empty_tree(), interval_letters(4), 3).empty());
    CHECK(snapshot_pair(PairTree::empty_tree(), interval_letters(4), 3).empty());
    CHECK(proj_snapshot_pair(PairTree::empty_tree(), interval_letters(4), 3).empty());

    // nonempty snapshots always hold the empty word
    PairSet ps = snapshot_pair(fixture_pair("DIAG"), interval_letters(2), 2);
    CHECK(ps.count({{}, {}}) == 1);
    CHECK(ps.count({{1, 2}, {1, 2}}) == 1);
    CHECK(ps.count({{1, 2}, {1, 1}}) == 0);
}

TEST_CASE("snapshot budget trips on explosive bounds") {
    NTree full = fixture_ntree("FULL");
    CHECK_THROWS_AS(snapshot_ntree(full, interval_letters(8), 12, 1000), Error);
    try {
        snapshot_ntree(full, interval_letters(8), 12, 1000);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BoundsTooLarge);
    }
}

TEST_CASE("projected membership leaves the second coordinate free") {
    PairTree half = fixture_pair("HALF");
    CHECK(pair_proj_contains(half, {}));
    CHECK(pair_proj_contains(half, {2, 7}));
    CHECK(pair_proj_contains(half, {0, 0, 5}));
    CHECK(!pair_proj_contains(half, {1}));

    StringSet proj = proj_snapshot_pair(half, interval_letters(3), 2);
    CHECK(proj.count({2, 3}) == 1);
    CHECK(proj.count({3}) == 0);
}
