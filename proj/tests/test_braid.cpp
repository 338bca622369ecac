#include <doctest.h>

#include "lgskein/braid.hpp"

using namespace lgs;

TEST_CASE("braid parsing") {
    CHECK(parse_braid("1 1 1", 2).letters == Word{1, 1, 1});
    CHECK(parse_braid("1 -2 1 -2", 3).letters == Word{1, -2, 1, -2});
    CHECK_THROWS_AS(parse_braid("3", 3), IndexOutOfRange);
    CHECK_THROWS_AS(parse_braid("1 x", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("0", 3), ParseError);
    CHECK(parse_braid("", 2).letters.empty());
    BraidWord w = parse_braid("  1\t-2  +3 ", 4);
    CHECK(w.str() == "1 -2 3");
    CHECK(parse_braid(w.str(), 4) == w);
}

TEST_CASE("closure info") {
    ClosureInfo a = closure_info(parse_braid("", 2));
    CHECK(a.components == 2);
    CHECK(a.writhe == 0);
    CHECK(a.is_split_detectable);
    ClosureInfo b = closure_info(parse_braid("1 1 1", 2));
    CHECK(b.components == 1);
    CHECK(b.writhe == 3);
    CHECK_FALSE(b.is_split_detectable);
    ClosureInfo c = closure_info(parse_braid("1", 3));
    CHECK(c.components == 2);
    CHECK(c.is_split_detectable);
    CHECK(closure_info(parse_braid("1 1", 2)).components == 2);
    CHECK(closure_info(parse_braid("1 -2 1 -2", 3)).components == 1);
    CHECK(closure_info(parse_braid("1 -2 1 -2 1 -2", 3)).components == 3);
}

TEST_CASE("half-twist automorphism") {
    CHECK(check_automorphism(parse_braid("1", 4)).letters == Word{3});
    CHECK(check_automorphism(parse_braid("-2", 4)).letters == Word{-2});
    CHECK(check_automorphism(parse_braid("1 2", 3)).letters == Word{2, 1});
    for (uint64_t seed = 0; seed < 30; ++seed) {
        BraidWord w = random_markov_perturb(parse_braid("1 -2 1 3 -2", 4), seed);
        ClosureInfo x = closure_info(w), y = closure_info(check_automorphism(w));
        CHECK(x.components == y.components);
        CHECK(x.writhe == y.writhe);
    }
}

TEST_CASE("markov moves") {
    CHECK(markov_destabilize(parse_braid("1 1 1 2", 3)) == parse_braid("1 1 1", 2));
    CHECK(markov_destabilize(parse_braid("2 1", 3)) == parse_braid("1", 2));
    CHECK_THROWS_AS(markov_destabilize(parse_braid("2 1 2", 3)), Inapplicable);
    CHECK(markov_stabilize(parse_braid("1 1 1", 2), 1) == parse_braid("1 1 1 2", 3));
    CHECK(move_rotate(parse_braid("1", 2), 1) == parse_braid("1", 2));
    CHECK(move_insert_pair(parse_braid("1 2", 3), 0, 1) == parse_braid("1 -1 1 2", 3));

    for (const char* s : {"1 1 1", "1 -2 1 -2", "1 1 2 -1 2", "1 2 3 -1"}) {
        BraidWord w = parse_braid(s, 4);
        int comps = closure_info(w).components;
        for (uint64_t seed = 0; seed < 40; ++seed) {
            BraidWord v = random_markov_perturb(w, seed);
            CHECK(closure_info(v).components == comps);
            for (int sign : {1, -1}) {
                BraidWord st = markov_stabilize(v, sign);
                CHECK(closure_info(markov_destabilize(st)).components == comps);
                CHECK(closure_info(st).components == comps);
            }
        }
    }
}
