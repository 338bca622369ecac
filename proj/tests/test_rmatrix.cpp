#include <doctest.h>

#include <random>

#include "lgskein/rmatrix.hpp"

using namespace lgs;

namespace {

const Rep<Scalar>& rep(Kind k) { return builtin_rmatrix(k); }

}  // namespace

TEST_CASE("transcribed entries") {
    CHECK(builtin_rmatrix(Kind::LG).fwd.entry(0, 0) == Scalar::t0());
    CHECK(builtin_rmatrix(Kind::V1).fwd.entry(5, 5) == Scalar::t0());
    CHECK(builtin_rmatrix(Kind::ADO).fwd.entry(0, 0) == Scalar::t(2));
    CHECK(builtin_rmatrix(Kind::LG).fwd.entry(12, 3) == Scalar(1));
}

TEST_CASE("inverses, traces and braid relation") {
    for (Kind k : {Kind::LG, Kind::V1, Kind::ADO}) {
        CAPTURE(kind_name(k));
        CHECK(check_inverse(rep(k)).ok);
        CHECK(trace_h(rep(k)).is_zero());
        CHECK(check_braid_relation(rep(k)).ok);
        CHECK(check_cubic_minimal_poly(builtin_rmatrix(k)).ok);
        CHECK(check_enhancement(rep(k)).ok);
    }
}

TEST_CASE("corrupted matrices fail the checks") {
    Rep<Scalar> bad = rep(Kind::V1);
    bad.fwd.cols[1][0].second *= Scalar(2);
    CHECK_FALSE(check_braid_relation(bad).ok);
    Rep<Scalar> flat = rep(Kind::V1);
    for (auto& x : flat.h) x = Scalar(1);
    CHECK_FALSE(check_enhancement(flat).ok);
}

TEST_CASE("generator action") {
    const auto& M = rep(Kind::LG);
    auto v = apply_generator(basis_vector<Scalar>(0), M, 2, 1, 1);
    CHECK(v == SparseVec<Scalar>{{0, Scalar::t0()}});
    CHECK_THROWS_AS(apply_generator(basis_vector<Scalar>(0), M, 2, 2, 1), PositionOutOfRange);

    for (uint32_t c = 0; c < 64; ++c) {
        auto e = basis_vector<Scalar>(c);
        CHECK(apply_generator(apply_generator(e, M, 3, 2, 1), M, 3, 2, -1) == e);
    }
    const auto& V = rep(Kind::V1);
    for (uint32_t c = 0; c < 256; c += 7) {
        auto e = basis_vector<Scalar>(c);
        CHECK(apply_word(e, V, 4, Word{1, 3}) == apply_word(e, V, 4, Word{3, 1}));
    }
}

TEST_CASE("linearity of the generator action") {
    std::mt19937_64 rng(9);
    const auto& M = rep(Kind::LG);
    for (int trial = 0; trial < 20; ++trial) {
        uint32_t a = rng() % 64, b = rng() % 64;
        int i = 1 + static_cast<int>(rng() % 2), s = rng() % 2 ? 1 : -1;
        SparseVec<Scalar> sum = basis_vector<Scalar>(a);
        sum[b] += Scalar::t1();
        auto lhs = apply_generator(sum, M, 3, i, s);
        auto ra = apply_generator(basis_vector<Scalar>(a), M, 3, i, s);
        auto rb = apply_generator(basis_vector<Scalar>(b), M, 3, i, s);
        for (auto& [k, x] : rb) ra[k] += x * Scalar::t1();
        std::erase_if(ra, [](const auto& kv) { return kv.second.is_zero(); });
        CHECK(lhs == ra);
    }
}

TEST_CASE("word operators agree with explicit Kronecker products") {
    std::mt19937_64 rng(10);
    for (Kind k : {Kind::V1, Kind::ADO, Kind::LG}) {
        for (int trial = 0; trial < 4; ++trial) {
            Word w;
            for (int j = 0; j < 4; ++j) {
                int g = 1 + static_cast<int>(rng() % 2);
                w.push_back(rng() % 2 ? g : -g);
            }
            CAPTURE(word_str(w));
            CHECK(operator_of_word(w, rep(k), 3) == explicit_word_operator(w, rep(k), 3));
        }
    }
}

TEST_CASE("specialized representation") {
    SpecPoint P = SpecPoint::from_roots(2, mpq_class(1, 3));
    Rep<PVal> S = specialize_rep(rep(Kind::LG), P);
    CHECK(check_inverse(S).ok);
}
