#include "doctest.h"

#include "oracles.hpp"
#include "sigscope/derivative.hpp"
#include "sigscope/project.hpp"
#include "sigscope/snapshot.hpp"
#include "util.hpp"

using namespace sigscope;
using testutil::fixture_pair;

static int live_count(const PairTree& s) {
    return s.is_empty() ? 0 : s.state_count();
}

static void check_discipline(const DerivativeTrace& t) {
    REQUIRE(t.stabilized);
    REQUIRE(t.lambda >= 0);
    CHECK(t.lambda <= live_count(t.stages[0]));
    // state counts strictly decrease until stabilization
    for (std::size_t i = 0; i + 1 < t.stages.size(); ++i) {
        if (static_cast<int>(i) < t.lambda)
            CHECK(live_count(t.stages[i + 1]) < live_count(t.stages[i]));
        else
            CHECK(live_count(t.stages[i + 1]) == live_count(t.stages[i]));
    }
    // removals name states of the preceding stage; stage 0 entries are the
    // initial pruning and only assert absence
    for (const Removal& r : t.removals) {
        REQUIRE(r.stage >= 0);
        REQUIRE(r.stage < static_cast<int>(t.stages.size()));
        if (r.stage == 0) {
            CHECK(r.reason == RemovalReason::Pruned);
        } else {
            CHECK(t.stages[r.stage - 1].state_by_name(r.state) >= 0);
        }
        CHECK(t.stages[r.stage].state_by_name(r.state) < 0);
    }
}

TEST_CASE("the diagonal stabilizes immediately") {
    DerivativeTrace t = derive_sequence(fixture_pair("DIAG"), 16);
    check_discipline(t);
    CHECK(t.lambda == 1);
    CHECK(t.stages.size() == 2);
    CHECK(t.stages[1].is_empty());
    REQUIRE(t.removals.size() == 1);
    CHECK(t.removals[0].reason == RemovalReason::ClosureContained);
    CHECK(t.game_calls >= 1);
}

TEST_CASE("the comb pair empties in one stage") {
    DerivativeTrace t = derive_sequence(fixture_pair("COMB_PAIR"), 16);
    check_discipline(t);
    CHECK(t.lambda == 1);
    CHECK(t.stages[1].is_empty());
}

TEST_CASE("every curated pair tree stabilizes with a small index") {
    for (const char* name :
         {"DIAG", "EVPAIR", "HALF", "COMB_PAIR", "BIN_PAIR", "MIXED2", "YFAN"}) {
        PairTree s = fixture_pair(name);
        DerivativeTrace t = derive_sequence(s, 16);
        check_discipline(t);
        CHECK(t.lambda <= s.state_count());
    }
}

TEST_CASE("removal pieces are the judged subtrees") {
    DerivativeTrace t = derive_sequence(fixture_pair("MIXED2"), 16);
    check_discipline(t);
    bool found = false;
    for (const Removal& r : t.removals) {
        if (r.reason != RemovalReason::ClosureContained) continue;
        found = true;
        PairTree piece = removal_piece(t, r);
        REQUIRE(!piece.is_empty());
        // the piece lives inside the stage it was judged at
        PairTree stage = t.stages[r.stage - 1];
        LetterSet probes = extended_letters(stage, 4);
        PairSet ps = snapshot_pair(piece, probes, 3);
        PairSet ss = snapshot_pair(stage, probes, 3);
        for (const auto& pr : ps) CHECK(ss.count(pr) == 1);
    }
    CHECK(found);
}

TEST_CASE("empty input stabilizes at zero") {
    DerivativeTrace t = derive_sequence(PairTree::empty_tree(), 16);
    REQUIRE(t.stabilized);
    CHECK(t.lambda == 0);
    CHECK(t.removals.empty());
}

TEST_CASE("random pair trees respect the derivative discipline") {
    testutil::TreeGen gen(606);
    for (int round = 0; round < 60; ++round) {
        PairTree s = gen.random_pairtree(5);
        DerivativeTrace t = derive_sequence(s, 16);
        check_discipline(t);
        CHECK(t.lambda <= live_count(t.stages[0]));
    }
}
