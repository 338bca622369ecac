#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgskein/expr_parser.hpp"
#include "lgskein/qomega.hpp"

namespace lgs {

// Coefficient c0 + c1*Y with c0, c1 in Q[w].
struct Coeff {
    QOmega c0;
    QOmega c1;

    Coeff() = default;
    Coeff(QOmega x) : c0(std::move(x)) {}
    Coeff(QOmega x, QOmega y) : c0(std::move(x)), c1(std::move(y)) {}

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    Coeff& operator+=(const Coeff& o) {
        c0 += o.c0;
        c1 += o.c1;
        return *this;
    }
    Coeff& operator-=(const Coeff& o) {
        c0 -= o.c0;
        c1 -= o.c1;
        return *this;
    }
    Coeff operator-() const { return Coeff(-c0, -c1); }
};

inline bool operator==(const Coeff& x, const Coeff& y) { return x.c0 == y.c0 && x.c1 == y.c1; }

// Exponents of p, q (with t0 = p^2, t1 = q^2) and of the ADO variable t.
struct Exps {
    int ep = 0;
    int eq = 0;
    int et = 0;
    friend bool operator==(const Exps&, const Exps&) = default;
};

namespace mono {
constexpr int64_t kOff = int64_t{1} << 20;
inline uint64_t pack(int ep, int eq, int et) {
    return (uint64_t(ep + kOff) << 42) | (uint64_t(eq + kOff) << 21) | uint64_t(et + kOff);
}
inline uint64_t pack(const Exps& e) { return pack(e.ep, e.eq, e.et); }
inline Exps unpack(uint64_t k) {
    return {int(int64_t(k >> 42) - kOff), int(int64_t((k >> 21) & 0x1FFFFF) - kOff),
            int(int64_t(k & 0x1FFFFF) - kOff)};
}
// Monomial product is addition of packed keys once the offsets are removed.
inline uint64_t mul(uint64_t a, uint64_t b) { return a + b - pack(0, 0, 0); }
inline uint64_t div(uint64_t a, uint64_t b) { return a - b + pack(0, 0, 0); }
}  // namespace mono

// Laurent polynomial in p, q, t over Q[w][Y]/(Y^2 - (p^2-1)(1-q^2)).
// Terms are kept sorted by packed key, which orders (ep, eq, et) lexicographically.
class Scalar {
public:
    using Term = std::pair<uint64_t, Coeff>;

    Scalar() = default;
    Scalar(long c);
    Scalar(const mpq_class& c);
    Scalar(const QOmega& c);

    static Scalar monomial(int ep, int eq, int et, Coeff c = Coeff(QOmega(1)));
    static Scalar p(int k = 1) { return monomial(k, 0, 0); }
    static Scalar q(int k = 1) { return monomial(0, k, 0); }
    static Scalar t0(int k = 1) { return monomial(2 * k, 0, 0); }
    static Scalar t1(int k = 1) { return monomial(0, 2 * k, 0); }
    static Scalar t(int k = 1) { return monomial(0, 0, k); }
    static Scalar Y();
    static Scalar omega() { return Scalar(QOmega::omega()); }

    // Builds from unsorted terms; merges duplicates and drops zeros.
    static Scalar from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool has_y() const;
    bool has_omega() const;
    bool has_t() const;
    bool only_even_pq() const;
    bool is_constant() const;
    // Value of the constant term's Q-part (requires is_constant and rational).
    mpq_class constant_value() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar operator-() const;
    Scalar& operator*=(const Scalar& o);
    Scalar& operator*=(const mpq_class& s);

    Scalar pow(int k) const;  // k >= 0, or any k for a single monomial term

    // Canonical text form; the golden-file format.
    std::string str() const;

    // Parses expressions over t0, t1, p, q, t, Y, w with + - * ^ and
    // parentheses; division only by nonzero rational constants.
    static Scalar parse(std::string_view text);

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Term> terms_;
    friend Scalar operator*(const Scalar& a, const Scalar& b);
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);

// Y^2 as a Scalar: (p^2 - 1)(1 - q^2).
const Scalar& y_squared();

// Exact division a / b when b divides a in the Laurent ring; b must be
// Y-free. Returns false when the division is not exact.
bool exact_divide(const Scalar& a, const Scalar& b, Scalar& quotient);

// True iff no Y part, no w part, no t, even p and q exponents, integer coefficients.
bool is_integral_laurent(const Scalar& x);

// Ring map t0 -> t^2, t1 -> w^2 t^-2 on Y-free Scalars with even p, q exponents.
Scalar ado_substitute(const Scalar& x);

// Swaps p and q (t0 <-> t1). Requires a Y-free argument.
Scalar swap_t0_t1(const Scalar& x);

}  // namespace lgs
