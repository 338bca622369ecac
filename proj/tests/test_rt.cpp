#include <doctest.h>

#include "lgskein/alexander.hpp"
#include "lgskein/rt_eval.hpp"

using namespace lgs;

TEST_CASE("f_cut basics") {
    const Rep<Scalar>& V = builtin_rmatrix(Kind::V1);
    auto F = f_cut(BraidWord(1, {}), V);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(F[i][j] == Scalar(i == j ? 1 : 0));
    CHECK(scalar_of(f_cut(parse_braid("1", 2), V)) == Scalar(1));
    auto Z = f_cut(parse_braid("", 2), V);
    for (const auto& row : Z)
        for (const auto& x : row) CHECK(x.is_zero());
}

TEST_CASE("scalar_of") {
    SquareMatrix<Scalar> I(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i) I[i][i] = Scalar(1);
    CHECK(scalar_of(I) == Scalar(1));
    SquareMatrix<Scalar> Z(4, std::vector<Scalar>(4));
    CHECK(scalar_of(Z) == Scalar(0));
    I[1][1] = Scalar(2);
    CHECK_THROWS_AS(scalar_of(I), NotScalar);
}

TEST_CASE("unknot, unlink, trefoil") {
    for (Kind k : {Kind::LG, Kind::V1, Kind::ADO}) {
        CHECK(evaluate_rt(parse_braid("1", 2), k).value == Scalar(1));
        CHECK(evaluate_rt(parse_braid("", 2), k).value == Scalar(0));
    }
    CHECK(evaluate_rt(parse_braid("1 1 1", 2), Kind::LG).value ==
          evaluate_rt(parse_braid("1 1 1", 2), Kind::V1).value);
}

TEST_CASE("Alexander polynomials from Burau") {
    CHECK(alexander_burau(parse_braid("1", 2)) == Scalar(1));
    CHECK(alexander_burau(parse_braid("1 1 1", 2)) == Scalar::parse("t0 - 1 + t0^-1"));
    CHECK(alexander_burau(parse_braid("1 -2 1 -2", 3)) == Scalar::parse("-t0 + 3 - t0^-1"));
    CHECK(alexander_burau(parse_braid("1 1 1 2 -1 2", 3)) == Scalar::parse("2*t0 - 3 + 2*t0^-1"));
    CHECK(alexander_burau(parse_braid("1 1 2 -1 -3 2 -3", 4)) == Scalar::parse("-2*t0 + 5 - 2*t0^-1"));
    CHECK(alexander_burau(parse_braid("1 1 1 -2 1 -2", 3)) == Scalar::parse("-t0^2 + 3*t0 - 3 + 3*t0^-1 - t0^-2"));
    CHECK(alexander_burau(parse_braid("1 1 -2 1 -2 -2", 3)) == Scalar::parse("t0^2 - 3*t0 + 5 - 3*t0^-1 + t0^-2"));
    CHECK_THROWS_AS(alexander_burau(parse_braid("1 1", 2)), ComponentMismatch);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        BraidWord w = random_markov_perturb(parse_braid("1 -2 1 -2", 3), seed);
        CHECK(alexander_burau(w) == Scalar::parse("-t0 + 3 - t0^-1"));
    }
}

TEST_CASE("specialization suite") {
    for (const char* s : {"1", "1 1 1", "-1 -1 -1"}) {
        for (const auto& r : specialization_suite(parse_braid(s, 2))) {
            CAPTURE(r.name);
            CAPTURE(r.witness);
            CHECK(r.ok);
        }
    }
    for (const auto& r : specialization_suite(parse_braid("1 -2 1 -2", 3))) {
        CAPTURE(r.name);
        CHECK(r.ok);
    }
}
