#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgskein/fraction.hpp"
#include "lgskein/scalar.hpp"

namespace lgs {

struct InadmissiblePoint : std::domain_error {
    using std::domain_error::domain_error;
};
struct DenominatorVanishes : std::domain_error {
    using std::domain_error::domain_error;
};
// Odd p/q power or t without the corresponding coordinate at the point.
struct MissingCoordinate : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonIntegralExponent : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation point. p, q (square roots of t0, t1) are needed only for odd powers.
struct SpecPoint {
    mpq_class t0;
    mpq_class t1;
    std::optional<mpq_class> p;
    std::optional<mpq_class> q;
    std::optional<mpq_class> t;
    // When false, specialize() skips the delta check (for Laurent identities at
    // points such as t1 = t0^-1 that lie on the delta locus).
    bool require_admissible = true;

    static SpecPoint at(mpq_class t0, mpq_class t1);
    static SpecPoint from_roots(const mpq_class& p, const mpq_class& q);
    // Parses "t0=A/B,t1=C/D".
    static SpecPoint parse(const std::string& text);

    bool admissible() const;
    // Y^2 at this point: (t0 - 1)(1 - t1).
    mpq_class y2() const { return (t0 - 1) * (1 - t1); }
    std::string str() const;
};

// delta(t0, t1) at rational values.
mpq_class delta_at(const mpq_class& t0, const mpq_class& t1);

// Element c0 + c1*Y of Q(w)[Y]/(Y^2 - y2). y2 is interned; null means no Y context yet.
struct PVal {
    QOmega c0;
    QOmega c1;
    const mpq_class* y2 = nullptr;

    PVal() = default;
    PVal(long v) : c0(v) {}
    PVal(const mpq_class& v) : c0(v) {}
    PVal(QOmega a, QOmega b = QOmega(), const mpq_class* c = nullptr) : c0(std::move(a)), c1(std::move(b)), y2(c) {}

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    PVal& operator+=(const PVal& o);
    PVal& operator-=(const PVal& o);
    PVal operator-() const { return PVal(-c0, -c1, y2); }
    // Throws std::domain_error when the element is a zero divisor.
    PVal inverse() const;
    std::string str() const;
};

PVal operator+(PVal a, const PVal& b);
PVal operator-(PVal a, const PVal& b);
PVal operator*(const PVal& a, const PVal& b);
PVal& operator*=(PVal& a, const PVal& b);
inline PVal operator/(const PVal& a, const PVal& b) { return a * b.inverse(); }
bool operator==(const PVal& a, const PVal& b);

// Stable pointer to an interned copy of c.
const mpq_class* intern_y2(const mpq_class& c);

PVal specialize(const Scalar& x, const SpecPoint& P);
PVal specialize(const Fraction& x, const SpecPoint& P);

// True when y2 is not a square in Q(w), so Q(w)[Y]/(Y^2 - y2) is a field.
bool y_generates_field(const SpecPoint& P);

struct PointOptions {
    bool roots = false;    // draw p, q and set t0 = p^2, t1 = q^2
    bool y_field = false;  // require y_generates_field
};

// Seeded, admissible, pairwise distinct points with small numerators and denominators.
std::vector<SpecPoint> random_points(uint64_t seed, int count, PointOptions opt = {});

// Variable conventions: (t0, t1); (t, qt) with t0 = t qt^(-n/2), t1 = t^-1 qt^(-n/2);
// (Q, q) = (q^alpha, q) with Q = t^(-1/2) qt^(1/4), q = qt^(-1/2).
enum class Convention { T0T1, TQtilde, QalphaQ };

struct RationalMonomial {
    mpq_class coeff;
    mpq_class e1;  // exponent of the first variable of the convention
    mpq_class e2;  // exponent of the second
};

// Monomial-wise substitution into (t0, t1). Results must have half-integral
// t0, t1 exponents (integral p, q exponents), else NonIntegralExponent.
Scalar convert_variables(const std::vector<RationalMonomial>& poly, Convention from, int n);

}  // namespace lgs
