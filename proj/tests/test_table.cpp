#include <doctest.h>

#include "lgskein/alexander.hpp"
#include "lgskein/rt_eval.hpp"
#include "lgskein/table.hpp"

using namespace lgs;

TEST_CASE("knot table lines") {
    const auto t = parse_table("# header\n\ntrefoil ; 2 ; 1 1 1\nunlink ; 2 ;\nhopf ; 2 ; 1 1 ; lg = -1 + t1 + t0 - t0*t1\n");
    REQUIRE(t.size() == 3);
    CHECK(t[0].name == "trefoil");
    CHECK(t[0].strands == 2);
    CHECK(t[0].word.letters == Word{1, 1, 1});
    CHECK(t[0].line == 3);
    CHECK(t[1].word.letters.empty());
    CHECK(t[2].expected.at("lg") == Scalar::parse("-1 + t1 + t0 - t0*t1"));
    CHECK(parse_table(format_entry(t[2]))[0].expected == t[2].expected);
}

TEST_CASE("knot table errors carry the line") {
    CHECK_THROWS_WITH_AS(parse_table("# h\nbad ; 2 ; 5\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_table("x ; two ; 1\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_table("x ; 2\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_table("x ; 2 ; 1 ; lg\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_table("x ; 2 ; 1 q\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_AS(load_table("/nonexistent/table"), std::runtime_error);
}

TEST_CASE("bundled table") {
    const auto t = load_table(LGSKEIN_DATA_DIR "/knots.tbl");
    CHECK(t.size() >= 12);
    for (const char* name : {"unknot", "unlink2", "hopf+", "hopf-", "trefoil+", "trefoil-", "figure8", "5_1", "5_2", "6_1", "6_2",
                             "6_3", "7_1", "torus2_4", "torus2_6", "torus2_8"}) {
        CAPTURE(name);
        CHECK(std::any_of(t.begin(), t.end(), [&](const KnotTableEntry& e) { return e.name == name; }));
    }
    for (const KnotTableEntry& e : t) {
        CAPTURE(e.name);
        CHECK(e.strands <= 5);
        CHECK(e.word.letters.size() <= 10);
        CHECK(e.expected.count("lg") == 1);
    }
    // Golden values are cheap to recheck for two-strand entries.
    for (const KnotTableEntry& e : t)
        if (e.strands == 2) CHECK(evaluate_rt(e.word, Kind::LG).value == e.expected.at("lg"));
}
