#include "doctest.h"

#include "oracles.hpp"
#include "sigscope/errors.hpp"
#include "sigscope/ideal.hpp"
#include "sigscope/kernel.hpp"
#include "sigscope/project.hpp"
#include "util.hpp"

using namespace sigscope;
using testutil::fixture_ideal;
using testutil::fixture_ntree;
using testutil::fixture_pair;

TEST_CASE("kernels of the curated trees") {
    Ideal fin = fin_ideal();
    Ideal evens = fixture_ideal("EVENS");

    KernelResult full = positive_kernel(fixture_ntree("FULL"), fin);
    CHECK(full.start_in_kernel);
    CHECK(full.kernel == std::vector<char>{1});

    CHECK(!positive_kernel(fixture_ntree("BIN"), fin).start_in_kernel);
    CHECK(!positive_kernel(fixture_ntree("COMB"), fin).start_in_kernel);

    // EVEN is large for finite sets yet small for the even-letter ideal
    CHECK(positive_kernel(fixture_ntree("EVEN"), fin).start_in_kernel);
    CHECK(!positive_kernel(fixture_ntree("EVEN"), evens).start_in_kernel);
    CHECK(positive_kernel(fixture_ntree("EVEN"), fixture_ideal("ODDS")).start_in_kernel);

    CHECK(positive_kernel(fixture_ntree("MIXED1"), fin).start_in_kernel);
    CHECK(!positive_kernel(fixture_ntree("MIXED1"), fin).kernel[fixture_ntree("MIXED1").state_by_name("b")]);
}

TEST_CASE("pair kernels act on first-coordinate families") {
    Ideal fin = fin_ideal();
    Ideal evens = fixture_ideal("EVENS");

    KernelResult diag = pair_kernel(fixture_pair("DIAG"), fin);
    CHECK(diag.start_in_kernel);
    CHECK(diag.kernel == std::vector<char>{1});

    CHECK(pair_kernel(fixture_pair("EVPAIR"), fin).start_in_kernel);
    CHECK(!pair_kernel(fixture_pair("EVPAIR"), evens).start_in_kernel);
    CHECK(!pair_kernel(fixture_pair("COMB_PAIR"), fin).start_in_kernel);
    CHECK(!pair_kernel(fixture_pair("BIN_PAIR"), fin).start_in_kernel);
    CHECK(pair_kernel(fixture_pair("HALF"), fin).start_in_kernel);
    CHECK(pair_kernel(fixture_pair("YFAN"), fin).start_in_kernel);

    // iteration counts stay within the state-count bound plus one final sweep
    CHECK(diag.iterations <= 2);
}

TEST_CASE("empty trees have empty kernels") {
    Ideal fin = fin_ideal();
    KernelResult r = positive_kernel(NTree::empty_tree(), fin);
    CHECK(!r.start_in_kernel);
    CHECK(r.kernel.empty());
    CHECK(!pair_kernel(PairTree::empty_tree(), fin).start_in_kernel);
}

TEST_CASE("oracle enumeration agrees on curated and random trees") {
    Ideal fin = fin_ideal();
    Ideal evens = fixture_ideal("EVENS");

    for (const char* name : {"FULL", "BIN", "COMB", "EVEN", "MIXED1"}) {
        NTree t = fixture_ntree(name);
        for (const Ideal& ideal : {fin, evens}) {
            CHECK(positive_kernel(t, ideal).kernel == kernel_oracle(t, ideal));
        }
    }
    for (const char* name : {"DIAG", "EVPAIR", "HALF", "COMB_PAIR", "BIN_PAIR", "MIXED2", "YFAN"}) {
        PairTree s = fixture_pair(name);
        for (const Ideal& ideal : {fin, evens}) {
            CHECK(pair_kernel(s, ideal).kernel == pair_kernel_oracle(s, ideal));
        }
    }

    testutil::TreeGen gen(77);
    for (int round = 0; round < 80; ++round) {
        NTree t = gen.random_ntree(6);
        t.validate();
        CHECK(positive_kernel(t, fin).kernel == kernel_oracle(t, fin));
        CHECK(positive_kernel(t, evens).kernel == kernel_oracle(t, evens));

        PairTree s = gen.random_pairtree(5);
        s.validate();
        CHECK(pair_kernel(s, fin).kernel == pair_kernel_oracle(s, fin));
        CHECK(pair_kernel(s, evens).kernel == pair_kernel_oracle(s, evens));
    }
}

TEST_CASE("kernel membership transfers through projection") {
    // the pair kernel decision equals the kernel decision of the projection
    testutil::TreeGen gen(4242);
    Ideal fin = fin_ideal();
    for (int round = 0; round < 60; ++round) {
        PairTree s = pair_prune(gen.random_pairtree(5));
        if (s.is_empty()) continue;
        CHECK(pair_kernel(s, fin).start_in_kernel ==
              positive_kernel(project(s), fin).start_in_kernel);
    }
}

TEST_CASE("the oracle refuses oversized inputs") {
    NTree big;
    for (int i = 0; i < 13; ++i) big.add_state("s" + std::to_string(i));
    big.set_start(0);
    for (int i = 0; i < 13; ++i) big.add_edge(i, 0, (i + 1) % 13);
    CHECK_THROWS_AS(kernel_oracle(big, fin_ideal()), Error);
}
