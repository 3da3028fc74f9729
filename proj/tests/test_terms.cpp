#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "topo/terms.hpp"

using topo::Generator;
using topo::Word;

TEST_CASE("token spellings round trip per generator") {
    for (Generator g : topo::all_generators()) {
        Word w = topo::parse_word(topo::token_of(g));
        REQUIRE(w.size() == 1);
        CHECK(w.gens[0] == g);
    }
}

TEST_CASE("parsing uses greedy longest match") {
    CHECK(topo::parse_word("ci") ==
          Word{{Generator::Closure, Generator::Interior}});
    CHECK(topo::parse_word("bi") == Word{{Generator::BoundaryInt}});
    CHECK(topo::parse_word("b.i") == Word{{Generator::Boundary, Generator::Interior}});
    CHECK(topo::parse_word("b i") == Word{{Generator::Boundary, Generator::Interior}});
    CHECK(topo::parse_word("bid") == Word{{Generator::BoundaryInt, Generator::Derived}});
    CHECK(topo::parse_word("ici") ==
          Word{{Generator::Interior, Generator::Closure, Generator::Interior}});
}

TEST_CASE("empty and separator-only input denote the identity") {
    CHECK(topo::parse_word("").empty());
    CHECK(topo::parse_word(" . .").empty());
    CHECK(topo::parse_word("id") == Word{{Generator::Identity}});
}

TEST_CASE("unknown tokens report their offset") {
    CHECK_THROWS_WITH_AS(topo::parse_word("z"), doctest::Contains("offset 0"), topo::ParseError);
    try {
        topo::parse_word("c.z");
        FAIL("expected a parse error");
    } catch (const topo::ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        topo::parse_word("cz");
        FAIL("expected a parse error");
    } catch (const topo::ParseError& e) {
        CHECK(e.position() == 1);
    }
}

TEST_CASE("formatting is dot separated and prints id for the empty word") {
    CHECK(topo::format_word(topo::parse_word("c i c")) == "c.i.c");
    CHECK(topo::format_word(Word{}) == "id");
    CHECK(topo::format_word(Word{{Generator::BoundaryInt, Generator::Complement}}) == "bi.n");
}

TEST_CASE("compose concatenates and elides identity generators") {
    CHECK(topo::format_word(topo::compose(topo::parse_word("c"), topo::parse_word("i"))) == "c.i");
    CHECK(topo::format_word(topo::compose(topo::parse_word("id"), topo::parse_word("ic"))) ==
          "i.c");
    CHECK(topo::format_word(topo::compose(topo::parse_word("ci"), topo::parse_word("ci"))) ==
          "c.i.c.i");
    Word id_word{{Generator::Identity}};
    Word sample = topo::parse_word("b.n.c");
    CHECK(topo::compose(id_word, sample) == sample);
    CHECK(topo::compose(sample, id_word) == sample);
    CHECK(topo::compose(id_word, id_word).empty());
}

TEST_CASE("parse and format are mutually inverse on all short nonempty words") {
    std::size_t count = 0;
    testutil::for_each_word(topo::all_generators(), 6, [&](const Word& w) {
        ++count;
        if (w.empty()) return;
        if (!(topo::parse_word(topo::format_word(w)) == w)) {
            CAPTURE(topo::format_word(w));
            REQUIRE(topo::parse_word(topo::format_word(w)) == w);
        }
    });
    CHECK(count == 1 + 9 + 81 + 729 + 6561 + 59049 + 531441);
    // Both spellings of the identity print "id", so the empty word comes
    // back as the explicit identity token.
    CHECK(topo::parse_word(topo::format_word(Word{})) == Word{{Generator::Identity}});
}

TEST_CASE("compose is associative on short words") {
    std::vector<Generator> alpha{Generator::Closure, Generator::Interior, Generator::Complement};
    auto words = testutil::all_words(alpha, 3);
    for (const Word& a : words)
        for (const Word& b : words)
            for (const Word& c : words) {
                REQUIRE(topo::compose(topo::compose(a, b), c) ==
                        topo::compose(a, topo::compose(b, c)));
            }
}

TEST_CASE("shortlex orders by length then token rank") {
    CHECK(topo::shortlex_less(topo::parse_word("n"), topo::parse_word("c.i")));
    CHECK(topo::shortlex_less(topo::parse_word("c.i"), topo::parse_word("i.c")));
    CHECK(topo::shortlex_less(topo::parse_word("b"), topo::parse_word("c")));
    CHECK(!topo::shortlex_less(topo::parse_word("n"), topo::parse_word("b")));
    CHECK(topo::shortlex_less(Word{}, topo::parse_word("b")));
}
