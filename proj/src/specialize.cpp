#include "lgskein/specialize.hpp"

#include <mutex>
#include <random>
#include <regex>
#include <set>

namespace lgs {

namespace {

mpq_class qpow(const mpq_class& x, int k) {
    if (k < 0) {
        if (sgn(x) == 0) throw DenominatorVanishes("negative power of zero");
        mpq_class inv = 1 / x;
        return qpow(inv, -k);
    }
    mpq_class r = 1;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

bool is_rational_square(const mpq_class& c) {
    if (sgn(c) < 0) return false;
    return mpz_perfect_square_p(c.get_num_mpz_t()) && mpz_perfect_square_p(c.get_den_mpz_t());
}

const mpq_class* merge_ctx(const mpq_class* a, const mpq_class* b) {
    if (!a) return b;
    if (!b || a == b) return a;
    throw std::logic_error("PVal: mixing values from different points");
}

}  // namespace

const mpq_class* intern_y2(const mpq_class& c) {
    static std::mutex mu;
    static std::set<mpq_class> pool;
    std::lock_guard<std::mutex> lock(mu);
    return &*pool.insert(c).first;
}

mpq_class delta_at(const mpq_class& t0, const mpq_class& t1) {
    return t0 * t1 * (t0 + t1) * (t0 * t1 + 1) * (t0 * t1 - 1) * (1 + t0) * (1 + t1) * (t0 + t1 - 1) *
           (1 + t0 * t1 + t0 * t0 * t1 + t0 * t1 * t1);
}

SpecPoint SpecPoint::at(mpq_class t0, mpq_class t1) {
    SpecPoint P;
    P.t0 = std::move(t0);
    P.t1 = std::move(t1);
    return P;
}

SpecPoint SpecPoint::from_roots(const mpq_class& p, const mpq_class& q) {
    SpecPoint P = at(p * p, q * q);
    P.p = p;
    P.q = q;
    return P;
}

SpecPoint SpecPoint::parse(const std::string& text) {
    static const std::regex re(R"(\s*t0\s*=\s*(-?\d+(?:/\d+)?)\s*,\s*t1\s*=\s*(-?\d+(?:/\d+)?)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("bad point '" + text + "', expected t0=A/B,t1=C/D");
    mpq_class t0(m[1].str()), t1(m[2].str());
    t0.canonicalize();
    t1.canonicalize();
    return at(t0, t1);
}

bool SpecPoint::admissible() const { return sgn(delta_at(t0, t1)) != 0; }

std::string SpecPoint::str() const { return "t0=" + t0.get_str() + ",t1=" + t1.get_str(); }

PVal& PVal::operator+=(const PVal& o) {
    y2 = merge_ctx(y2, o.y2);
    c0 += o.c0;
    c1 += o.c1;
    return *this;
}

PVal& PVal::operator-=(const PVal& o) {
    y2 = merge_ctx(y2, o.y2);
    c0 -= o.c0;
    c1 -= o.c1;
    return *this;
}

PVal operator+(PVal a, const PVal& b) { return a += b; }
PVal operator-(PVal a, const PVal& b) { return a -= b; }

PVal operator*(const PVal& a, const PVal& b) {
    const mpq_class* ctx = merge_ctx(a.y2, b.y2);
    if (a.c1.is_zero() && b.c1.is_zero()) return PVal(a.c0 * b.c0, QOmega(), ctx);
    PVal r(a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, ctx);
    if (!a.c1.is_zero() && !b.c1.is_zero()) {
        if (!ctx) throw std::logic_error("PVal: Y product without a point");
        r.c0 += a.c1 * b.c1 * *ctx;
    }
    return r;
}

PVal& operator*=(PVal& a, const PVal& b) { return a = a * b; }

bool operator==(const PVal& a, const PVal& b) { return a.c0 == b.c0 && a.c1 == b.c1; }

PVal PVal::inverse() const {
    if (c1.is_zero()) return PVal(c0.inverse(), QOmega(), y2);
    // (c0 + c1 Y)^-1 = (c0 - c1 Y) / (c0^2 - c1^2 y2)
    QOmega n = c0 * c0 - c1 * c1 * *y2;
    if (n.is_zero()) throw std::domain_error("PVal: zero divisor");
    QOmega ni = n.inverse();
    return PVal(c0 * ni, -(c1 * ni), y2);
}

std::string PVal::str() const {
    if (c1.is_zero()) return c0.str();
    return c0.str() + " + (" + c1.str() + ")*Y";
}

PVal specialize(const Scalar& x, const SpecPoint& P) {
    if (P.require_admissible && !P.admissible()) throw InadmissiblePoint("delta vanishes at " + P.str());
    const mpq_class* ctx = x.has_y() ? intern_y2(P.y2()) : nullptr;
    PVal r(QOmega(), QOmega(), ctx);
    for (const auto& [key, c] : x.terms()) {
        Exps e = mono::unpack(key);
        mpq_class v = 1;
        if (e.ep % 2 == 0) {
            v *= qpow(P.t0, e.ep / 2);
        } else {
            if (!P.p) throw MissingCoordinate("odd power of p needs p at the point");
            v *= qpow(*P.p, e.ep);
        }
        if (e.eq % 2 == 0) {
            v *= qpow(P.t1, e.eq / 2);
        } else {
            if (!P.q) throw MissingCoordinate("odd power of q needs q at the point");
            v *= qpow(*P.q, e.eq);
        }
        if (e.et != 0) {
            if (!P.t) throw MissingCoordinate("t needs a value at the point");
            v *= qpow(*P.t, e.et);
        }
        r.c0 += c.c0 * v;
        r.c1 += c.c1 * v;
    }
    return r;
}

PVal specialize(const Fraction& x, const SpecPoint& P) {
    PVal d = specialize(x.den(), P);
    if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at " + P.str());
    return specialize(x.num(), P) * d.inverse();
}

bool y_generates_field(const SpecPoint& P) {
    // Q(w) = Q(sqrt(-3)); a rational c is a square there iff c or -3c is a rational square.
    mpq_class c = P.y2();
    if (sgn(c) == 0) return false;
    mpq_class c3 = -3 * c;
    return !is_rational_square(c) && !is_rational_square(c3);
}

std::vector<SpecPoint> random_points(uint64_t seed, int count, PointOptions opt) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    auto draw = [&] {
        int a = 0;
        while (a == 0) a = num(rng);
        mpq_class r(a, den(rng));
        r.canonicalize();
        return r;
    };
    std::vector<SpecPoint> out;
    std::set<std::pair<mpq_class, mpq_class>> seen;
    while (static_cast<int>(out.size()) < count) {
        SpecPoint P = opt.roots ? SpecPoint::from_roots(draw(), draw()) : SpecPoint::at(draw(), draw());
        if (!P.admissible()) continue;
        if (opt.y_field && !y_generates_field(P)) continue;
        if (!seen.insert({P.t0, P.t1}).second) continue;
        out.push_back(std::move(P));
    }
    return out;
}

Scalar convert_variables(const std::vector<RationalMonomial>& poly, Convention from, int n) {
    if (n < 1) throw std::invalid_argument("convert_variables: n must be positive");
    Scalar out;
    for (const auto& m : poly) {
        // Exponents (a, b) of t and qt.
        mpq_class a, b;
        switch (from) {
            case Convention::T0T1: {
                // t0^e1 t1^e2 is p^(2 e1) q^(2 e2).
                mpq_class ep = 2 * m.e1, eq = 2 * m.e2;
                if (ep.get_den() != 1 || eq.get_den() != 1)
                    throw NonIntegralExponent("exponent is not half-integral");
                out += Scalar::monomial(int(ep.get_num().get_si()), int(eq.get_num().get_si()), 0, Coeff(m.coeff));
                continue;
            }
            case Convention::TQtilde:
                a = m.e1;
                b = m.e2;
                break;
            case Convention::QalphaQ:
                // Q^e1 q^e2 = t^(-e1/2) qt^(e1/4 - e2/2)
                a = -m.e1 / 2;
                b = m.e1 / 4 - m.e2 / 2;
                break;
        }
        a.canonicalize();
        b.canonicalize();
        // t = (t0/t1)^(1/2), qt = (t0 t1)^(-1/n); in p, q exponents: ep = a - 2b/n, eq = -a - 2b/n.
        mpq_class bn = 2 * b / n;
        mpq_class ep = a - bn, eq = -a - bn;
        ep.canonicalize();
        eq.canonicalize();
        if (ep.get_den() != 1 || eq.get_den() != 1)
            throw NonIntegralExponent("substitution gives a non-Laurent exponent");
        out += Scalar::monomial(int(ep.get_num().get_si()), int(eq.get_num().get_si()), 0, Coeff(m.coeff));
    }
    return out;
}

}  // namespace lgs
