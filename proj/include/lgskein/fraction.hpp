#pragma once

#include <array>
#include <string>
#include <string_view>

#include "lgskein/scalar.hpp"

namespace lgs {

// The fixed irreducible denominator factors: the first kNumDeltaFactors are the factors of
// delta(t0,t1) other than the monomials t0, t1; the last one, N, enters only through the
// derived expansion of sbar3 sbar2 s1 sbar2 sbar3.
constexpr int kNumDeltaFactors = 7;
constexpr int kNumDenomFactors = 8;
// t0+t1, t0t1+1, t0t1-1, 1+t0, 1+t1, t0+t1-1, 1+t0t1+t0^2t1+t0t1^2,
// N = t0^2+t1^2+t0t1+t0^2t1+t0t1^2-t0^2t1^2
const Scalar& denom_factor(int i);
const std::string& denom_factor_name(int i);

// delta(t0,t1) as a Scalar in p, q.
const Scalar& delta();

struct NotDeltaProduct : std::domain_error {
    using std::domain_error::domain_error;
};

// num / prod_i denom_factor(i)^e[i]. Monomial parts of a denominator are absorbed into
// the Laurent numerator, so the stored denominator is free of Y, w, t by construction.
class Fraction {
public:
    using Exponents = std::array<int, kNumDenomFactors>;

    Fraction() : e_{} {}
    Fraction(long c) : num_(c), e_{} {}
    Fraction(const Scalar& s) : num_(s), e_{} {}
    Fraction(Scalar num, const Exponents& e);

    // num / den, where den must be a monomial times a product of delta factors.
    static Fraction ratio(const Scalar& num, const Scalar& den);

    const Scalar& num() const { return num_; }
    const Exponents& exponents() const { return e_; }
    Scalar den() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    Fraction operator-() const { return Fraction(-num_, e_); }
    Fraction& operator+=(const Fraction& o);
    Fraction& operator-=(const Fraction& o);
    Fraction& operator*=(const Fraction& o);

    // Requires the numerator to be a monomial times a product of delta factors.
    Fraction inverse() const;

    // Numerator scaled to the common denominator prod F_i^target[i] (target >= exponents()).
    Scalar numerator_over(const Exponents& target) const;

    std::string str() const;

    // Rational expression in t0, t1 (also p, q, w, Y in numerators).
    static Fraction parse(std::string_view text);

private:
    Scalar num_;
    Exponents e_;
    void normalize();
};

Fraction operator+(Fraction a, const Fraction& b);
Fraction operator-(Fraction a, const Fraction& b);
Fraction operator*(Fraction a, const Fraction& b);
Fraction operator/(const Fraction& a, const Fraction& b);

// Cross-multiplication equality: a.num*b.den - b.num*a.den == 0.
bool fraction_eq(const Fraction& a, const Fraction& b);

// Power of a delta factor, cached.
const Scalar& denom_factor_pow(int i, int k);

// Componentwise maximum of exponent vectors.
Fraction::Exponents exponent_max(const Fraction::Exponents& a, const Fraction::Exponents& b);

}  // namespace lgs
