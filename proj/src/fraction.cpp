#include "lgskein/fraction.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <mutex>

#include "lgskein/expr_parser.hpp"

namespace lgs {

namespace {

const std::array<Scalar, kNumDenomFactors>& factors() {
    static const std::array<Scalar, kNumDenomFactors> f = [] {
        Scalar t0 = Scalar::t0(), t1 = Scalar::t1(), one(1);
        return std::array<Scalar, kNumDenomFactors>{
            t0 + t1,
            t0 * t1 + one,
            t0 * t1 - one,
            one + t0,
            one + t1,
            t0 + t1 - one,
            one + t0 * t1 + t0 * t0 * t1 + t0 * t1 * t1,
            t0 * t0 + t1 * t1 + t0 * t1 + t0 * t0 * t1 + t0 * t1 * t1 - t0 * t0 * t1 * t1,
        };
    }();
    return f;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr uint64_t kPrime = (uint64_t(1) << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    uint64_t lo = static_cast<uint64_t>(x & kPrime), hi = static_cast<uint64_t>(x >> 61);
    uint64_t r = lo + hi;
    return r >= kPrime ? r - kPrime : r;
}

uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kPrime - 2); }
uint64_t negmod(uint64_t a) { return a ? kPrime - a : 0; }

// Residue of a rational, or nullopt when the denominator vanishes mod the prime.
std::optional<uint64_t> residue(const mpq_class& q) {
    uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (d == 0) return std::nullopt;
    uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    return d == 1 ? n : mulmod(n, invmod(d));
}

// Powers t^k for |k| <= kPowSpan at a point on a factor's zero set.
constexpr int kPowSpan = 40;

struct ModPoint {
    std::array<uint64_t, 2 * kPowSpan + 1> p0, p1;

    ModPoint(uint64_t t0, uint64_t t1) {
        fill(p0, t0);
        fill(p1, t1);
    }

    static void fill(std::array<uint64_t, 2 * kPowSpan + 1>& a, uint64_t t) {
        const uint64_t ti = invmod(t);
        a[kPowSpan] = 1;
        for (int k = 1; k <= kPowSpan; ++k) {
            a[kPowSpan + k] = mulmod(a[kPowSpan + k - 1], t);
            a[kPowSpan - k] = mulmod(a[kPowSpan - k + 1], ti);
        }
    }
};

// Two points (t0, t1) on the zero set of each denominator factor.
const std::array<std::vector<ModPoint>, kNumDenomFactors>& zero_points() {
    static const auto pts = [] {
        std::array<std::vector<ModPoint>, kNumDenomFactors> z;
        const uint64_t one = 1;
        for (uint64_t a : {uint64_t(123457), uint64_t(98765431)}) {
            z[0].emplace_back(a, negmod(a));
            z[1].emplace_back(a, negmod(invmod(a)));
            z[2].emplace_back(a, invmod(a));
            z[3].emplace_back(negmod(one), a);
            z[4].emplace_back(a, negmod(one));
            z[5].emplace_back(a, (one + kPrime - a) % kPrime);
        }
        // t0 t1^2 + (t0 + t0^2) t1 + 1 = 0, solved for t1 where the discriminant is a square.
        for (uint64_t a = 3; z[6].size() < 2; ++a) {
            uint64_t b = (a + mulmod(a, a)) % kPrime;
            uint64_t disc = (mulmod(b, b) + kPrime - mulmod(4, a)) % kPrime;
            uint64_t r = powmod(disc, (kPrime + 1) / 4);
            if (mulmod(r, r) != disc) continue;
            uint64_t t1 = mulmod((negmod(b) + r) % kPrime, invmod(mulmod(2, a)));
            z[6].emplace_back(a, t1);
        }
        // (1 + t0 - t0^2) t1^2 + (t0 + t0^2) t1 + t0^2 = 0.
        for (uint64_t a = 3; z[7].size() < 2; ++a) {
            uint64_t a2 = mulmod(a, a);
            uint64_t lead = (one + a + kPrime - a2) % kPrime;
            uint64_t b = (a + a2) % kPrime;
            uint64_t disc = (mulmod(b, b) + kPrime - mulmod(4, mulmod(lead, a2))) % kPrime;
            uint64_t r = powmod(disc, (kPrime + 1) / 4);
            if (lead == 0 || mulmod(r, r) != disc) continue;
            uint64_t t1 = mulmod((negmod(b) + r) % kPrime, invmod(mulmod(2, lead)));
            z[7].emplace_back(a, t1);
        }
        return z;
    }();
    return pts;
}

// False only when num certainly does not vanish on the zero set of factor i.
bool may_divide(const Scalar& num, int i) {
    for (const ModPoint& pt : zero_points()[i]) {
        uint64_t acc = 0;
        for (const auto& [key, c] : num.terms()) {
            Exps e = mono::unpack(key);
            if (!c.c1.is_zero() || !c.c0.is_rational() || e.et != 0 || (e.ep & 1) || (e.eq & 1)) return true;
            const int a = e.ep / 2, b = e.eq / 2;
            if (std::abs(a) > kPowSpan || std::abs(b) > kPowSpan) return true;
            auto r = residue(c.c0.a);
            if (!r) return true;
            acc += mulmod(mulmod(*r, pt.p0[kPowSpan + a]), pt.p1[kPowSpan + b]);
            if (acc >= kPrime) acc -= kPrime;
        }
        if (acc != 0) return false;
    }
    return true;
}

// Writes x = unit * prod F_i^k[i] with unit a single Y-free term; false if impossible.
bool split_delta(const Scalar& x, Fraction::Exponents& k, Scalar& unit) {
    k.fill(0);
    if (x.is_zero()) return false;
    Scalar rest = x;
    for (int i = 0; i < kNumDenomFactors; ++i) {
        Scalar quot;
        while (rest.size() > 1 && may_divide(rest, i) && exact_divide(rest, factors()[i], quot)) {
            rest = std::move(quot);
            ++k[i];
        }
    }
    if (rest.size() != 1 || rest.has_y()) return false;
    unit = std::move(rest);
    return true;
}

Scalar unit_inverse(const Scalar& unit) {
    const auto& [key, c] = unit.terms()[0];
    Exps e = mono::unpack(key);
    return Scalar::monomial(-e.ep, -e.eq, -e.et, Coeff(c.c0.inverse()));
}

}  // namespace

const Scalar& denom_factor(int i) { return factors().at(i); }

const std::string& denom_factor_name(int i) {
    static const std::array<std::string, kNumDenomFactors> names = [] {
        std::array<std::string, kNumDenomFactors> n;
        for (int j = 0; j < kNumDenomFactors; ++j) n[j] = factors()[j].str();
        return n;
    }();
    return names.at(i);
}

const Scalar& delta() {
    static const Scalar d = [] {
        Scalar r = Scalar::t0() * Scalar::t1();
        for (int i = 0; i < kNumDeltaFactors; ++i) r *= factors()[i];
        return r;
    }();
    return d;
}

const Scalar& denom_factor_pow(int i, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Scalar> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({i, k});
    if (it != cache.end()) return it->second;
    Scalar r = k == 0 ? Scalar(1) : factors().at(i).pow(k);
    return cache.emplace(std::make_pair(i, k), std::move(r)).first->second;
}

Fraction::Exponents exponent_max(const Fraction::Exponents& a, const Fraction::Exponents& b) {
    Fraction::Exponents r;
    for (int i = 0; i < kNumDenomFactors; ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Fraction::Fraction(Scalar num, const Exponents& e) : num_(std::move(num)), e_(e) {
    for (int x : e_)
        if (x < 0) throw std::invalid_argument("Fraction: negative denominator exponent");
    normalize();
}

Fraction Fraction::ratio(const Scalar& num, const Scalar& den) {
    if (den.is_zero()) throw std::domain_error("Fraction: zero denominator");
    Exponents k;
    Scalar unit;
    if (!split_delta(den, k, unit)) throw NotDeltaProduct("denominator is not a delta product: " + den.str());
    return Fraction(num * unit_inverse(unit), k);
}

void Fraction::normalize() {
    if (num_.is_zero()) {
        e_.fill(0);
        return;
    }
    for (int i = 0; i < kNumDenomFactors; ++i) {
        Scalar quot;
        while (e_[i] > 0 && may_divide(num_, i) && exact_divide(num_, factors()[i], quot)) {
            num_ = std::move(quot);
            --e_[i];
        }
    }
}

Scalar Fraction::den() const {
    Scalar r(1);
    for (int i = 0; i < kNumDenomFactors; ++i)
        if (e_[i]) r *= denom_factor_pow(i, e_[i]);
    return r;
}

bool Fraction::is_polynomial() const {
    for (int x : e_)
        if (x) return false;
    return true;
}

Scalar Fraction::numerator_over(const Exponents& target) const {
    Scalar r = num_;
    for (int i = 0; i < kNumDenomFactors; ++i) {
        if (target[i] < e_[i]) throw std::invalid_argument("numerator_over: target below exponent");
        if (target[i] > e_[i]) r *= denom_factor_pow(i, target[i] - e_[i]);
    }
    return r;
}

Fraction& Fraction::operator+=(const Fraction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (e_ == o.e_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    Exponents m = exponent_max(e_, o.e_);
    num_ = numerator_over(m) + o.numerator_over(m);
    e_ = m;
    normalize();
    return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
    num_ *= o.num_;
    for (int i = 0; i < kNumDenomFactors; ++i) e_[i] += o.e_[i];
    normalize();
    return *this;
}

Fraction Fraction::inverse() const {
    if (is_zero()) throw std::domain_error("Fraction: inverse of zero");
    Exponents k;
    Scalar unit;
    if (!split_delta(num_, k, unit)) throw NotDeltaProduct("cannot invert non-delta numerator: " + num_.str());
    return Fraction(unit_inverse(unit) * den(), k);
}

std::string Fraction::str() const {
    if (is_polynomial()) return num_.str();
    std::string d;
    for (int i = 0; i < kNumDenomFactors; ++i) {
        if (!e_[i]) continue;
        if (!d.empty()) d += "*";
        d += "(" + denom_factor_name(i) + ")";
        if (e_[i] != 1) d += "^" + std::to_string(e_[i]);
    }
    return "(" + num_.str() + ")/(" + d + ")";
}

Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

bool fraction_eq(const Fraction& a, const Fraction& b) {
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

namespace {

struct FractionOps {
    Fraction number(const std::string& digits) { return Fraction(Scalar(mpq_class(digits))); }
    Fraction variable(const std::string& name) {
        static const std::map<std::string, Scalar> vars = {
            {"t0", Scalar::t0()}, {"t1", Scalar::t1()}, {"p", Scalar::p()},      {"q", Scalar::q()},
            {"t", Scalar::t()},   {"Y", Scalar::Y()},   {"w", Scalar::omega()},
        };
        auto it = vars.find(name);
        if (it == vars.end()) throw ParseError("unknown variable '" + name + "'");
        return Fraction(it->second);
    }
    Fraction div(const Fraction& a, const Fraction& b) {
        if (b.is_zero()) throw ParseError("division by zero");
        try {
            return a / b;
        } catch (const NotDeltaProduct& e) {
            throw ParseError(e.what());
        }
    }
    Fraction pow(const Fraction& a, int e) {
        Fraction base = e < 0 ? div(Fraction(1), a) : a;
        Fraction r(1);
        for (int i = 0; i < std::abs(e); ++i) r *= base;
        return r;
    }
};

}  // namespace

Fraction Fraction::parse(std::string_view text) {
    FractionOps ops;
    return detail::ExprParser<Fraction, FractionOps>(text, ops).parse();
}

}  // namespace lgs
