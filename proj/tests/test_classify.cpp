#include "doctest.h"

#include "json.hpp"

#include "sigscope/classify.hpp"
#include "sigscope/errors.hpp"
#include "sigscope/report.hpp"
#include "util.hpp"

using namespace sigscope;
using testutil::fixture_ideal;
using testutil::fixture_ntree;
using testutil::fixture_pair;

namespace {

Verdict verdict_of(const char* name, const Ideal& ideal, Method m) {
    PairTree host = pair_prune(testutil::suite().find_pairtree(name)
                                   ? *testutil::suite().find_pairtree(name)
                                   : diag_pairize(fixture_ntree(name)));
    Classification c = classify(host, ideal, m);
    CHECK(c.certificate_check.ok);
    return c.verdict;
}

}  // namespace

TEST_CASE("kernel-method verdicts across the fixtures") {
    Ideal fin = fin_ideal();
    Ideal evens = fixture_ideal("EVENS");
    Ideal odds = fixture_ideal("ODDS");

    for (const char* name : {"FULL", "EVEN", "DIAG", "EVPAIR", "HALF", "MIXED1", "MIXED2", "YFAN"})
        CHECK(verdict_of(name, fin, Method::Kernel) == Verdict::Positive);
    for (const char* name : {"BIN", "COMB", "COMB_PAIR", "BIN_PAIR"})
        CHECK(verdict_of(name, fin, Method::Kernel) == Verdict::SmallCover);

    CHECK(verdict_of("EVEN", evens, Method::Kernel) == Verdict::SmallCover);
    CHECK(verdict_of("EVPAIR", evens, Method::Kernel) == Verdict::SmallCover);
    CHECK(verdict_of("EVEN", odds, Method::Kernel) == Verdict::Positive);
    CHECK(verdict_of("EVPAIR", odds, Method::Kernel) == Verdict::Positive);
    CHECK(verdict_of("DIAG", evens, Method::Kernel) == Verdict::Positive);
    CHECK(verdict_of("COMB", evens, Method::Kernel) == Verdict::SmallCover);
}

TEST_CASE("both methods agree under the finite ideal") {
    Ideal fin = fin_ideal();
    for (const char* name :
         {"DIAG", "EVPAIR", "HALF", "COMB_PAIR", "BIN_PAIR", "MIXED2", "YFAN"}) {
        Classification k = classify(fixture_pair(name), fin, Method::Kernel);
        Classification d = classify(fixture_pair(name), fin, Method::Derivative);
        CHECK(k.verdict == d.verdict);
        CHECK(d.trace.has_value());
        CHECK(d.trace->stabilized);
    }
}

TEST_CASE("classification carries a verified certificate") {
    Ideal fin = fin_ideal();

    Classification pos = classify(fixture_pair("DIAG"), fin, Method::Kernel);
    CHECK(pos.verdict == Verdict::Positive);
    REQUIRE(pos.witness.has_value());
    CHECK(!pos.cover.has_value());
    CHECK(pos.certificate_check.ok);
    CHECK(pos.kernel_iterations > 0);

    Classification small = classify(fixture_pair("COMB_PAIR"), fin, Method::Kernel);
    CHECK(small.verdict == Verdict::SmallCover);
    REQUIRE(small.cover.has_value());
    CHECK(!small.witness.has_value());
    CHECK(small.certificate_check.ok);
}

TEST_CASE("the empty tree is trivially covered") {
    Ideal fin = fin_ideal();
    Classification c = classify(PairTree::empty_tree(), fin, Method::Kernel);
    CHECK(c.verdict == Verdict::SmallCover);
    CHECK(c.trivial_empty);
    CHECK(!c.witness.has_value());

    // an all-dead presentation collapses to the same outcome
    PairTree dead;
    int a = dead.add_state("a");
    int b = dead.add_state("b");
    dead.set_start(a);
    dead.add_edge(a, 0, 0, b);
    Classification d = classify(pair_prune(dead), fin, Method::Kernel);
    CHECK(d.verdict == Verdict::SmallCover);
    CHECK(d.trivial_empty);
}

TEST_CASE("the derivative method requires the finite ideal") {
    CHECK_THROWS_AS(classify(fixture_pair("DIAG"), fixture_ideal("EVENS"), Method::Derivative),
                    Error);
    try {
        classify(fixture_pair("DIAG"), fixture_ideal("EVENS"), Method::Derivative);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MethodMismatch);
    }
}

TEST_CASE("improper ideals are rejected up front") {
    Ideal all{"ALL", EPSet::of_class(make_class(0, 1, 0))};
    CHECK_THROWS_AS(classify(fixture_pair("DIAG"), all, Method::Kernel), Error);
}

TEST_CASE("classification reports are well-formed documents") {
    Ideal fin = fin_ideal();
    PairTree host = fixture_pair("HALF");
    Classification c = classify(host, fin, Method::Kernel);
    std::string doc = classification_report("HALF", "fin", host, c);
    nlohmann::json j = nlohmann::json::parse(doc);
    CHECK(j["schema"] == "sigma-scope/1");
    CHECK(j["command"] == "classify");
    CHECK(j["input"]["name"] == "HALF");
    CHECK(j["verdict"] == "Positive");
    CHECK(j["checks"]["ok"] == true);
    CHECK(j["certificate"]["kind"] == "witness");
    CHECK(j.contains("timing"));
    CHECK(j["flags"]["depth"] == 4);

    // identical classifications print identically
    Classification c2 = classify(host, fin, Method::Kernel);
    CHECK(classification_report("HALF", "fin", host, c2) == doc);
}
