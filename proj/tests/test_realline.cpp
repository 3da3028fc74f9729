#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "topo/monoid.hpp"
#include "topo/realline.hpp"
#include "topo/rewrite.hpp"

using topo::Density;
using topo::Generator;
using topo::RealLineSet;
using topo::Word;

namespace {

RealLineSet eval(const std::string& word, const std::string& set) {
    return topo::eval_word_real(topo::parse_word(word), topo::make_set(set));
}

}  // namespace

TEST_CASE("literal parsing produces the expected structure") {
    RealLineSet rq = topo::make_set("[0,1]Q");
    REQUIRE(rq.breakpoints.size() == 2);
    CHECK(rq.breakpoints[0] == topo::Rational(0));
    CHECK(rq.breakpoints[1] == topo::Rational(1));
    CHECK(rq.point_in == std::vector<char>{1, 1});
    CHECK(rq.cells == std::vector<Density>{Density::Empty, Density::Rationals, Density::Empty});

    RealLineSet full = topo::make_set("[0,1]");
    CHECK(full.cells == std::vector<Density>{Density::Empty, Density::Full, Density::Empty});
    CHECK(full.point_in == std::vector<char>{1, 1});

    RealLineSet two = topo::make_set("(0,1)+(1,2)");
    REQUIRE(two.breakpoints.size() == 3);
    CHECK(two.point_in == std::vector<char>{0, 0, 0});
    CHECK(two.cells == std::vector<Density>{Density::Empty, Density::Full, Density::Full,
                                            Density::Empty});

    RealLineSet half = topo::make_set("[1/2,3/2)I");
    CHECK(half.breakpoints[0] == topo::Rational(1, 2));
    CHECK(half.point_in == std::vector<char>{0, 0});  // rational endpoints of an I-cell are out
}

TEST_CASE("malformed literals are rejected with positions") {
    CHECK_THROWS_AS(topo::make_set(""), topo::ParseError);
    CHECK_THROWS_AS(topo::make_set("[1,0]"), topo::ParseError);
    CHECK_THROWS_AS(topo::make_set("[0,0]"), topo::ParseError);
    CHECK_THROWS_AS(topo::make_set("0,1"), topo::ParseError);
    CHECK_THROWS_AS(topo::make_set("[1/0,2]"), topo::ParseError);
    CHECK_THROWS_AS(topo::make_set("{1"), topo::ParseError);
    CHECK_THROWS_AS(topo::make_set("(0,1)+"), topo::ParseError);
}

TEST_CASE("formatting round-trips bounded sets") {
    for (const auto& lit : topo::builtin_corpus_literals()) {
        RealLineSet s = topo::make_set(lit);
        CHECK(topo::format_set(s) == lit);
        CHECK(topo::make_set(topo::format_set(s)) == s);
    }
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        RealLineSet s = testutil::random_bounded_set(rng);
        if (s.is_empty()) continue;
        CHECK(topo::make_set(topo::format_set(s)) == s);
    }
    CHECK(topo::format_set(RealLineSet::empty_set()) == "{}");
    CHECK(topo::format_set(RealLineSet::whole_line()) == "(-inf,+inf)");
}

TEST_CASE("interior, closure and derived sets of the witness sets") {
    CHECK(topo::interior_set(topo::make_set("[0,1]Q")).is_empty());
    CHECK(eval("i.c", "[0,1]Q") == topo::make_set("(0,1)"));
    CHECK(eval("c.i", "[0,1]") == topo::make_set("[0,1]"));
    CHECK(topo::derived_set(topo::make_set("[0,1]Q")) == topo::make_set("[0,1]"));
    CHECK(topo::derived_set(topo::make_set("(0,1)I")) == topo::make_set("[0,1]"));
    CHECK(topo::derived_set(topo::make_set("{3}")).is_empty());
    CHECK(topo::apply_generator_real(Generator::Boundary, topo::make_set("(0,1)")) ==
          topo::make_set("{0}+{1}"));
}

TEST_CASE("word evaluation reproduces the dense/codense collapse") {
    CHECK(eval("c.i", "[0,1]Q").is_empty());
    CHECK(eval("c.i.c", "[0,1]Q") == topo::make_set("[0,1]"));
    CHECK(eval("i.c.i", "[0,1]Q").is_empty());
    CHECK(eval("i.c", "[0,1]") == topo::make_set("(0,1)"));
}

TEST_CASE("unbounded results are represented exactly") {
    RealLineSet exterior = topo::apply_generator_real(Generator::Exterior, topo::make_set("[0,1]"));
    RealLineSet expected;
    expected.breakpoints = {topo::Rational(0), topo::Rational(1)};
    expected.point_in = {0, 0};
    expected.cells = {Density::Full, Density::Empty, Density::Full};
    CHECK(exterior == expected);
    CHECK(topo::format_set(exterior) == "(-inf,0)+(1,+inf)");
    CHECK(topo::complement_set(RealLineSet::empty_set()) == RealLineSet::whole_line());
}

TEST_CASE("subset relation is exact") {
    CHECK(topo::subset_of(topo::make_set("(0,1)"), topo::make_set("[0,1]")));
    CHECK(!topo::subset_of(topo::make_set("[0,1]Q"), topo::make_set("[0,1]I")));
    CHECK(topo::subset_of(RealLineSet::empty_set(), topo::make_set("[0,1]Q")));
    CHECK(!topo::subset_of(topo::make_set("[0,1]"), topo::make_set("(0,1)")));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        RealLineSet a = testutil::random_set(rng);
        RealLineSet b = testutil::random_set(rng);
        RealLineSet u = topo::union_sets(a, b);
        REQUIRE(topo::subset_of(a, u));
        REQUIRE(topo::subset_of(b, u));
        REQUIRE(topo::subset_of(topo::intersect_sets(a, b), a));
        if (topo::subset_of(a, b) && topo::subset_of(b, a)) REQUIRE(a == b);
    }
}

TEST_CASE("every generator preserves canonical form") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        RealLineSet s = testutil::random_set(rng);
        for (Generator g : topo::all_generators()) {
            RealLineSet image = topo::apply_generator_real(g, s);
            REQUIRE(topo::canonicalized(image) == image);
            REQUIRE(image.cells.size() == image.breakpoints.size() + 1);
        }
    }
}

TEST_CASE("closure agrees with the cellwise oracle and the derived-set route") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        RealLineSet s = testutil::random_set(rng);
        RealLineSet via_duality = topo::closure_set(s);
        REQUIRE(via_duality == testutil::closure_cellwise_oracle(s));
        REQUIRE(via_duality == topo::union_sets(s, topo::derived_set(s)));
        REQUIRE(topo::interior_set(s) ==
                topo::complement_set(topo::closure_set(topo::complement_set(s))));
    }
}

TEST_CASE("idempotence and the four-letter collapse hold on random sets") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        RealLineSet s = testutil::random_set(rng);
        RealLineSet c = topo::closure_set(s);
        RealLineSet i = topo::interior_set(s);
        REQUIRE(topo::closure_set(c) == c);
        REQUIRE(topo::interior_set(i) == i);
        RealLineSet ci = topo::closure_set(i);
        RealLineSet ic = topo::interior_set(c);
        REQUIRE(topo::closure_set(topo::interior_set(ci)) == ci);
        REQUIRE(topo::interior_set(topo::closure_set(ic)) == ic);
        RealLineSet b = topo::apply_generator_real(Generator::Boundary, s);
        REQUIRE(b == topo::apply_generator_real(Generator::Boundary, topo::complement_set(s)));
        REQUIRE(b == topo::intersect_sets(topo::closure_set(s),
                                          topo::closure_set(topo::complement_set(s))));
        RealLineSet internal = topo::apply_generator_real(Generator::BoundaryInt, s);
        RealLineSet external = topo::apply_generator_real(Generator::BoundaryExt, s);
        REQUIRE(topo::union_sets(internal, external) == b);
        REQUIRE(topo::intersect_sets(internal, external).is_empty());
    }
}

TEST_CASE("union and intersection satisfy the boolean laws") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        RealLineSet a = testutil::random_set(rng);
        RealLineSet b = testutil::random_set(rng);
        RealLineSet c = testutil::random_set(rng);
        REQUIRE(topo::union_sets(a, b) == topo::union_sets(b, a));
        REQUIRE(topo::intersect_sets(a, b) == topo::intersect_sets(b, a));
        REQUIRE(topo::union_sets(a, a) == a);
        REQUIRE(topo::intersect_sets(a, a) == a);
        REQUIRE(topo::union_sets(topo::union_sets(a, b), c) ==
                topo::union_sets(a, topo::union_sets(b, c)));
        REQUIRE(topo::complement_set(topo::union_sets(a, b)) ==
                topo::intersect_sets(topo::complement_set(a), topo::complement_set(b)));
        REQUIRE(topo::complement_set(topo::complement_set(a)) == a);
        if (topo::subset_of(a, b) && topo::subset_of(b, c)) REQUIRE(topo::subset_of(a, c));
    }
}

TEST_CASE("evaluation agrees with normal forms on the golden corpus") {
    auto corpus = topo::builtin_corpus();
    testutil::for_each_word(
        {Generator::Closure, Generator::Interior, Generator::Complement}, 8, [&](const Word& w) {
            Word n = topo::normalized_word(w);
            for (const auto& s : corpus) {
                if (!(topo::eval_word_real(w, s) == topo::eval_word_real(n, s))) {
                    CAPTURE(topo::format_word(w));
                    REQUIRE(topo::eval_word_real(w, s) == topo::eval_word_real(n, s));
                }
            }
        });
}
