#include <doctest.h>

#include <random>

#include "lgskein/fraction.hpp"
#include "lgskein/specialize.hpp"

using namespace lgs;

namespace {

Scalar random_scalar(std::mt19937_64& rng, bool with_y = true) {
    std::uniform_int_distribution<int> ex(-3, 3), co(-4, 4), nterms(0, 5), basis(0, with_y ? 3 : 1);
    std::vector<Scalar::Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        QOmega c(co(rng));
        int b = basis(rng);
        Coeff k;
        if (b & 1) c = c * QOmega::omega();
        if (b & 2)
            k.c1 = c;
        else
            k.c0 = c;
        terms.emplace_back(mono::pack(ex(rng), ex(rng), 0), k);
    }
    return Scalar::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("scalar products from the ring relations") {
    Scalar t0 = Scalar::t0();
    CHECK((t0 + 1) * (t0 - 1) == t0 * t0 - 1);
    CHECK(Scalar::Y() * Scalar::Y() == (t0 - 1) * (1 - Scalar::t1()));
    CHECK(Scalar::omega() * Scalar::omega() == Scalar::omega() - 1);
    CHECK(Scalar::omega().pow(6) == Scalar(1));
    CHECK(Scalar::omega().pow(3) == Scalar(-1));
}

TEST_CASE("canonical rendering and parse round trip") {
    Scalar x = Scalar::t0(-1) * Scalar::t1() - 2 + Scalar::t0() * Scalar::t1(-1);
    CHECK(x.str() == "t0^-1*t1 - 2 + t0*t1^-1");
    CHECK(Scalar::parse(x.str()) == x);
    CHECK(Scalar().str() == "0");
    CHECK(Scalar::p().str() == "p");
    CHECK((Scalar(3) * Scalar::omega() * Scalar::Y()).str() == "3*w*Y");
    CHECK(Scalar::parse("t^-2*w - (1/2)*p*q^3").str() == "w*t^-2 - 1/2*p*q^3");

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Scalar s = random_scalar(rng);
        CHECK(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("Y substitution is confluent") {
    std::mt19937_64 rng(2);
    Scalar Y = Scalar::Y();
    for (int i = 0; i < 50; ++i) {
        Scalar a = random_scalar(rng, false), b = random_scalar(rng, false);
        CHECK((a * Y) * (b * Y) == a * (Y * (b * Y)));
        CHECK((a * Y) * (b * Y) == (a * b) * y_squared());
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng, false);
        if (b.is_zero()) continue;
        Scalar quot;
        REQUIRE(exact_divide(a * b, b, quot));
        CHECK(quot == a);
    }
    Scalar quot;
    CHECK_FALSE(exact_divide(Scalar::t0() + 2, Scalar::t0() + 1, quot));
    CHECK_FALSE(exact_divide(Scalar(1), Scalar::t0() + Scalar::t1(), quot));
}

TEST_CASE("fraction equality by cross multiplication") {
    Fraction a69 = Fraction::parse("1/(t1 + t0)");
    Fraction a74 = Fraction::parse("-1/(t1 + t0)");
    CHECK(fraction_eq(a69, -a74));
    CHECK(fraction_eq(Fraction(0), Fraction::parse("0/(t0+t1)")));
    CHECK_FALSE(fraction_eq(Fraction::parse("t0/t1"), Fraction::parse("t1/t0")));

    Fraction x = Fraction::parse("(t0^2 - 1)/((1 + t0)*(t0*t1 - 1))");
    CHECK(x.exponents()[2] == 1);
    CHECK(x.exponents()[3] == 0);
    CHECK(fraction_eq(x * Fraction::parse("t0*t1 - 1"), Fraction::parse("t0 - 1")));
    CHECK_THROWS_AS(Fraction::parse("1/(t0 + 2)"), ParseError);

    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> f(0, kNumDenomFactors - 1), e(0, 2);
    auto rand_frac = [&] {
        Fraction::Exponents ex{};
        ex[f(rng)] = e(rng);
        ex[f(rng)] += e(rng);
        return Fraction(random_scalar(rng), ex);
    };
    for (int i = 0; i < 40; ++i) {
        Fraction a = rand_frac(), b = rand_frac(), c = rand_frac();
        CHECK(fraction_eq(a, a));
        CHECK(fraction_eq(a + b, b + a));
        CHECK(fraction_eq((a + b) + c, a + (b + c)));
        CHECK(fraction_eq((a * b) * c, a * (b * c)));
        CHECK(fraction_eq(a * (b + c), a * b + a * c));
        CHECK(fraction_eq((a + b) - b, a));
        Fraction b2(b.num() * denom_factor(5), [&] {
            auto ex = b.exponents();
            ex[5] += 1;
            return ex;
        }());
        CHECK(fraction_eq(b, b2));
        if (fraction_eq(a, b) && fraction_eq(b, c)) CHECK(fraction_eq(a, c));
    }
    Fraction d = Fraction::parse("(t0 + t1)^2*(1 + t0)*t0^3*5");
    CHECK(fraction_eq(d * d.inverse(), Fraction(1)));
}

TEST_CASE("specialization") {
    SpecPoint P = SpecPoint::at(2, 3);
    CHECK(specialize(Scalar::parse("t0*t1 - 1"), P) == PVal(5));
    CHECK(specialize(y_squared(), SpecPoint::at(3, 2)) == PVal(-2));
    // No factor of delta vanishes at (1, 2).
    CHECK(delta_at(1, 2) == 1944);
    CHECK(SpecPoint::at(1, 2).admissible());
    CHECK_FALSE(SpecPoint::at(-1, 2).admissible());
    CHECK_FALSE(SpecPoint::at(2, mpq_class(1, 2)).admissible());
    CHECK_THROWS_AS(specialize(Scalar(1), SpecPoint::at(-1, 2)), InadmissiblePoint);
    CHECK(specialize(delta(), SpecPoint::at(2, 3)) == PVal(delta_at(2, 3)));
    CHECK_THROWS_AS(specialize(Scalar::p(), P), MissingCoordinate);
    CHECK(specialize(Scalar::p(3), SpecPoint::from_roots(2, 3)) == PVal(8));

    auto pts = random_points(11, 6, {true, false});
    std::mt19937_64 rng(5);
    for (const auto& Q : pts) {
        CHECK(Q.admissible());
        for (int i = 0; i < 20; ++i) {
            Scalar a = random_scalar(rng), b = random_scalar(rng);
            CHECK(specialize(a * b, Q) == specialize(a, Q) * specialize(b, Q));
            CHECK(specialize(a + b, Q) == specialize(a, Q) + specialize(b, Q));
        }
    }
    CHECK(random_points(11, 6, {true, false})[3].str() == pts[3].str());
    for (const auto& Q : random_points(12, 5, {true, true})) {
        CHECK(y_generates_field(Q));
        PVal y = specialize(Scalar::Y() + Scalar::p(), Q);
        CHECK(y * y.inverse() == PVal(1));
    }
    Fraction fr = Fraction::parse("1/(t0 + t1 - 1)");
    CHECK(specialize(fr, P) == PVal(mpq_class(1, 4)));
}

TEST_CASE("delta factors reject points where they vanish") {
    // One rational zero per factor, in factor order.
    std::vector<std::pair<mpq_class, mpq_class>> zeros = {
        {2, -2}, {2, mpq_class(-1, 2)}, {3, mpq_class(1, 3)}, {-1, 5}, {5, -1}, {3, -2}, {1, -1},
    };
    for (int i = 0; i < kNumDeltaFactors; ++i) {
        SpecPoint Z = SpecPoint::at(zeros[i].first, zeros[i].second);
        Z.require_admissible = false;
        CHECK(specialize(denom_factor(i), Z).is_zero());
        CHECK_FALSE(Z.admissible());
    }
}

TEST_CASE("the auxiliary factor is not a factor of delta") {
    SpecPoint Z = SpecPoint::at(-7, mpq_class(7, 5));
    CHECK(Z.admissible());
    CHECK(specialize(denom_factor(kNumDeltaFactors), Z).is_zero());
    Fraction f = Fraction(denom_factor(kNumDeltaFactors)).inverse();
    CHECK(f.exponents()[kNumDeltaFactors] == 1);
    CHECK_THROWS_AS(specialize(f, Z), DenominatorVanishes);
}

TEST_CASE("integrality predicate") {
    CHECK(is_integral_laurent(Scalar(1)));
    CHECK_FALSE(is_integral_laurent(Scalar::p()));
    CHECK_FALSE(is_integral_laurent(Scalar(mpq_class(1, 2)) * Scalar::t0()));
    CHECK_FALSE(is_integral_laurent(Scalar::Y()));
    CHECK_FALSE(is_integral_laurent(Scalar::omega()));
    CHECK_FALSE(is_integral_laurent(Scalar::t()));
    CHECK(is_integral_laurent(Scalar::parse("3*t0^-2*t1 - 7")));
}

TEST_CASE("variable conventions") {
    std::vector<RationalMonomial> x = {{mpq_class(2), mpq_class(1), mpq_class(-1)}};
    CHECK(convert_variables(x, Convention::T0T1, 1) == 2 * Scalar::t0() * Scalar::t1(-1));
    std::vector<RationalMonomial> m = {{mpq_class(1), mpq_class(1), mpq_class(-1, 2)}};
    CHECK(convert_variables(m, Convention::TQtilde, 1) == Scalar::t0());
    std::vector<RationalMonomial> one = {{mpq_class(1), mpq_class(0), mpq_class(0)}};
    for (auto c : {Convention::T0T1, Convention::TQtilde, Convention::QalphaQ})
        CHECK(convert_variables(one, c, 3) == Scalar(1));
    // q^2 = qt^-1 = (t0 t1)^(1/n) with n = 1.
    std::vector<RationalMonomial> q2 = {{mpq_class(1), mpq_class(0), mpq_class(2)}};
    CHECK(convert_variables(q2, Convention::QalphaQ, 1) == Scalar::t0() * Scalar::t1());
    std::vector<RationalMonomial> bad = {{mpq_class(1), mpq_class(0), mpq_class(1)}};
    CHECK_THROWS_AS(convert_variables(bad, Convention::TQtilde, 3), NonIntegralExponent);
}

TEST_CASE("ado substitution") {
    // t0 t1 -> w^2 and t0/t1 -> t^4 w^-2.
    CHECK(ado_substitute(Scalar::t0() * Scalar::t1()) == Scalar(QOmega::omega_pow(2)));
    CHECK(ado_substitute(Scalar::t0()) == Scalar::t(2));
    CHECK(ado_substitute(Scalar::t1(-1)) == Scalar(QOmega::omega_pow(-2)) * Scalar::t(2));
}
