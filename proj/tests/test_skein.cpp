#include <doctest.h>

#include "lgskein/skein.hpp"

using namespace lgs;

namespace {

Fraction F(const char* s) { return Fraction::parse(s); }

SkeinElement elem(int n, std::initializer_list<std::pair<Word, const char*>> terms) {
    SkeinElement e(n);
    for (const auto& [w, c] : terms) e.add(w, F(c));
    return e;
}

bool same_v1_image(const SkeinElement& a, const SkeinElement& b, int points = 3) {
    const auto& pts = certificate_points();
    for (int i = 0; i < points; ++i) {
        const Rep<PVal> M = specialize_rep(builtin_rmatrix(Kind::V1), pts[i]);
        if (!same_image(a, b, M, pts[i]).ok) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("skein element arithmetic") {
    SkeinElement a = elem(3, {{{1}, "t0"}, {{-2}, "1"}});
    SkeinElement b = elem(3, {{{1}, "-t0"}});
    CHECK((a + b).size() == 1);
    CHECK((a - a).is_zero());
    CHECK((a * F("0")).is_zero());
    CHECK(a.coeff({2}).is_zero());
    CHECK(fraction_eq(a.times_left({2}).coeff({2, 1}), F("t0")));
    CHECK(fraction_eq(a.times_right({2}).coeff({-2, 2}), F("1")));
    const SkeinElement p = a * a;
    CHECK(fraction_eq(p.coeff({1, 1}), F("t0^2")));
    CHECK(fraction_eq(p.coeff({1, -2}), p.coeff({-2, 1})));
}

TEST_CASE("relation table parsing") {
    const RelationTable& T = builtin_relations();
    for (const char* name : {"R1", "R2", "modR2", "R3"}) CHECK_NOTHROW(T.get(name));
    CHECK(T.get("R1").arity() == 2);
    CHECK(T.get("R2").arity() == 3);
    CHECK(T.get("R3").arity() == 4);
    CHECK(T.get("R2").lhs.size() == 4);
    CHECK(T.get("R2").rhs.size() == 8);

    const RelationTable again = parse_relations(T.dump());
    REQUIRE(again.relations.size() == T.relations.size());
    for (size_t i = 0; i < T.relations.size(); ++i)
        CHECK(again.relations[i].as_zero() == T.relations[i].as_zero());

    CHECK_THROWS_WITH_AS(parse_relations("relation X tag R1\nlhs\nword := 1 ; coeff := (t0\nend\n"), doctest::Contains("line 3"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_relations("relation X tag R1\nlhs\nword := 1 ; coeff := 1\n"), doctest::Contains("missing 'end'"),
                         ParseError);
    CHECK_THROWS_AS(parse_relations("relation X tag nope\nend\n"), ParseError);
}

TEST_CASE("R3 data") {
    const R3Data& d = r3_data();
    REQUIRE(d.words.size() == 78);
    REQUIRE(d.coeffs.size() == 78);
    CHECK(fraction_eq(d.coeffs[68], F("1/(t1 + t0)")));
    CHECK(fraction_eq(d.coeffs[73], F("-1/(t1 + t0)")));
    for (const Fraction& a : d.coeffs) {
        CHECK_FALSE(a.is_zero());
        // Only the delta factors may appear in R3 denominators.
        for (int i = kNumDeltaFactors; i < kNumDenomFactors; ++i) CHECK(a.exponents()[i] == 0);
    }
}

TEST_CASE("relations hold under the representations at points") {
    for (Kind k : {Kind::LG, Kind::V1, Kind::ADO})
        for (RelationKind r : {RelationKind::R1, RelationKind::R2, RelationKind::R3}) {
            CAPTURE(kind_name(k));
            CAPTURE(int(r));
            const CheckResult res = verify_relation(r, k, VerifyMode::Specialized, 2, 7);
            CAPTURE(res.witness);
            CHECK(res.ok);
        }
    for (RelationKind r : {RelationKind::R1, RelationKind::R2})
        CHECK(verify_relation(r, Kind::V1, VerifyMode::Symbolic).ok);
}

TEST_CASE("certificates reject a wrong rule") {
    RewriteRule r;
    r.name = "bogus square";
    r.lhs = {1, 1};
    r.rhs = elem(2, {{{1}, "t0 + t1"}});
    CHECK_THROWS_AS(certify(r, 2), UncertifiedRule);
    r.rhs = elem(2, {{{1}, "t0 + t1 - 1"}, {{}, "t0 + t1 - t0*t1"}, {{-1}, "-t0*t1"}});
    CHECK_NOTHROW(certify(r, 2, true));
    CHECK(r.certified_points == 2);
}

TEST_CASE("two-strand reduction") {
    Engine E;
    CHECK(E.reduce_b2(SkeinElement::of_word(2, {1, 1})) ==
          elem(2, {{{1}, "t0 + t1 - 1"}, {{}, "t0 + t1 - t0*t1"}, {{-1}, "-t0*t1"}}));
    CHECK(E.reduce_b2(SkeinElement::of_word(2, {1, -1})) == SkeinElement::of_word(2, {}));
    CHECK(E.reduce_b2(SkeinElement::of_word(2, {-1, -1})) ==
          elem(2, {{{-1}, "t0^-1 + t1^-1 - 1"}, {{}, "t0^-1 + t1^-1 - t0^-1*t1^-1"}, {{1}, "-t0^-1*t1^-1"}}));
    for (const Word& w : {Word{1, 1, 1}, Word{-1, -1, -1, 1, -1}, Word{1, 1, 1, 1, 1}}) {
        const SkeinElement r = E.reduce_b2(SkeinElement::of_word(2, w));
        for (const auto& [u, c] : r.terms()) CHECK(u.size() <= 1);
        CHECK(same_v1_image(r, SkeinElement::of_word(2, w)));
    }
}

TEST_CASE("three-strand reduction") {
    Engine E;
    CHECK(window_basis().size() == 20);
    for (const Word& w : window_basis()) CHECK(in_window_basis(w));
    CHECK(E.reduce_b3(SkeinElement::of_word(3, {2, 1, 2})) == SkeinElement::of_word(3, {1, 2, 1}));
    CHECK(E.reduce_b3(SkeinElement::of_word(3, {-2, 1, -2})) == SkeinElement::of_word(3, {-2, 1, -2}));
    const SkeinElement r = E.reduce_b3(SkeinElement::of_word(3, {-1, 2, 1}));
    CHECK(r.size() > 1);
    CHECK(same_v1_image(r, SkeinElement::of_word(3, {-1, 2, 1})));
    const SkeinElement r4 = E.reduce_b3(SkeinElement::of_word(3, {2, 1, 2, 1}));
    for (const auto& [u, c] : r4.terms()) CHECK(in_window_basis(u));
    CHECK(same_v1_image(r4, SkeinElement::of_word(3, {2, 1, 2, 1})));
    // Windows away from base 1.
    const SkeinElement s = E.reduce_window({2, 3, 2, 3}, 2, 4);
    CHECK(same_v1_image(s, SkeinElement::of_word(4, {2, 3, 2, 3})));
}

TEST_CASE("three-strand reduction of random words") {
    Engine E;
    uint64_t x = 12345;
    for (int trial = 0; trial < 40; ++trial) {
        Word w;
        const int len = 4 + trial % 8;
        for (int i = 0; i < len; ++i) {
            x = x * 6364136223846793005ULL + 1442695040888963407ULL;
            const int g = 1 + int((x >> 33) % 2);
            w.push_back((x >> 40) % 2 ? g : -g);
        }
        CAPTURE(word_str(w));
        const SkeinElement r = E.reduce_b3(SkeinElement::of_word(3, w));
        for (const auto& [u, c] : r.terms()) CHECK(in_window_basis(u));
        CHECK(same_v1_image(r, SkeinElement::of_word(3, w), 2));
    }
}

TEST_CASE("rank of the three-strand images") {
    for (const SpecPoint& P : certificate_points()) CHECK(rank_c3(Kind::V1, P) == 20);
    CHECK(rank_c3() == 20);
    CHECK(rank_c3(Kind::LG, std::nullopt, true) == 20);
    CHECK_THROWS_AS(rank_c3(Kind::V1, SpecPoint::at(2, mpq_class(1, 2))), InadmissiblePoint);
}

TEST_CASE("R3 coefficients from a linear solve") {
    const SpecPoint P = SpecPoint::at(mpq_class(2, 3), mpq_class(5, 7));
    const std::vector<PVal> x = solve_r3_at_point(P);
    REQUIRE(x.size() == 78);
    for (size_t l = 0; l < 78; ++l) {
        CAPTURE(l + 1);
        CHECK(x[l] == specialize(r3_data().coeffs[l], P));
    }
    CHECK(x[68] == PVal(mpq_class(21, 29)));
    CHECK((x[68] + x[73]).is_zero());
}

TEST_CASE("R3 degenerates at t1 = +-1/t0") {
    CHECK(r3_common_denominator() == Scalar::parse("(t0 + t1)*(t0*t1 + 1)*(t0*t1 - 1)*(1 + t0)*(1 + t1)"));
    CHECK(r3_left_side_vanishes(2, mpq_class(1, 2)));
    CHECK(r3_left_side_vanishes(3, mpq_class(-1, 3)));
    CHECK_FALSE(r3_left_side_vanishes(2, 3));
    CHECK(check_r3_degeneration());
    // The operator itself survives; only its coefficient in the cleared relation vanishes.
    CHECK_FALSE(r3_left_operator_vanishes(2, mpq_class(1, 2)));
    CHECK_FALSE(r3_left_operator_vanishes(2, 3));
}

TEST_CASE("conjectured dimensions") {
    CHECK(conjectured_dim(2) == 3);
    CHECK(conjectured_dim(3) == 20);
    CHECK(conjectured_dim(4) == 175);
    CHECK(conjectured_dim(5) == 1764);
    CHECK(conjectured_dim(6) == 19404);
    CHECK_THROWS_AS(conjectured_dim(1), std::invalid_argument);
}
