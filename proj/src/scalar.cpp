#include "lgskein/scalar.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <stdexcept>

#include "lgskein/expr_parser.hpp"

namespace lgs {

QOmega QOmega::omega_pow(int k) {
    // w^0..w^5 = 1, w, w-1, -1, -w, 1-w
    static const QOmega table[6] = {QOmega(1, 0),  QOmega(0, 1),  QOmega(-1, 1),
                                    QOmega(-1, 0), QOmega(0, -1), QOmega(1, -1)};
    int r = ((k % 6) + 6) % 6;
    return table[r];
}

QOmega QOmega::inverse() const {
    mpq_class n = norm();
    if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q[w]");
    QOmega c = conj();
    return QOmega(c.a / n, c.b / n);
}

namespace {

void append_rational(std::string& out, const mpq_class& r) { out += r.get_str(); }

}  // namespace

std::string QOmega::str() const {
    std::string out;
    if (is_rational()) {
        append_rational(out, a);
        return out;
    }
    out += "(";
    if (sgn(a) != 0) {
        append_rational(out, a);
        out += sgn(b) < 0 ? " - " : " + ";
    } else if (sgn(b) < 0) {
        out += "-";
    }
    mpq_class ab = abs(b);
    if (ab != 1) {
        append_rational(out, ab);
        out += "*";
    }
    out += "w)";
    return out;
}

Scalar::Scalar(long c) {
    if (c != 0) terms_.emplace_back(mono::pack(0, 0, 0), Coeff(QOmega(c)));
}

Scalar::Scalar(const mpq_class& c) {
    if (sgn(c) != 0) terms_.emplace_back(mono::pack(0, 0, 0), Coeff(QOmega(c)));
}

Scalar::Scalar(const QOmega& c) {
    if (!c.is_zero()) terms_.emplace_back(mono::pack(0, 0, 0), Coeff(c));
}

Scalar Scalar::monomial(int ep, int eq, int et, Coeff c) {
    Scalar s;
    if (!c.is_zero()) s.terms_.emplace_back(mono::pack(ep, eq, et), std::move(c));
    return s;
}

Scalar Scalar::Y() { return monomial(0, 0, 0, Coeff(QOmega(), QOmega(1))); }

Scalar Scalar::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    Scalar s;
    s.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!s.terms_.empty() && s.terms_.back().first == t.first) {
            s.terms_.back().second += t.second;
        } else {
            if (!s.terms_.empty() && s.terms_.back().second.is_zero()) s.terms_.pop_back();
            s.terms_.push_back(std::move(t));
        }
    }
    if (!s.terms_.empty() && s.terms_.back().second.is_zero()) s.terms_.pop_back();
    return s;
}

bool Scalar::has_y() const {
    for (auto& t : terms_)
        if (!t.second.c1.is_zero()) return true;
    return false;
}

bool Scalar::has_omega() const {
    for (auto& t : terms_)
        if (!t.second.c0.is_rational() || !t.second.c1.is_rational()) return true;
    return false;
}

bool Scalar::has_t() const {
    for (auto& t : terms_)
        if (mono::unpack(t.first).et != 0) return true;
    return false;
}

bool Scalar::only_even_pq() const {
    for (auto& t : terms_) {
        Exps e = mono::unpack(t.first);
        if ((e.ep & 1) || (e.eq & 1)) return false;
    }
    return true;
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == mono::pack(0, 0, 0));
}

mpq_class Scalar::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant() || !terms_[0].second.c1.is_zero() || !terms_[0].second.c0.is_rational())
        throw std::logic_error("constant_value on a non-rational-constant Scalar");
    return terms_[0].second.c0.a;
}

namespace {

template <bool Negate>
std::vector<Scalar::Term> merge(const std::vector<Scalar::Term>& a, const std::vector<Scalar::Term>& b) {
    std::vector<Scalar::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            if constexpr (Negate)
                out.emplace_back(b[j].first, -b[j].second);
            else
                out.push_back(b[j]);
            ++j;
        } else {
            Coeff c = a[i].second;
            if constexpr (Negate)
                c -= b[j].second;
            else
                c += b[j].second;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge<false>(terms_, o.terms_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge<true>(terms_, o.terms_);
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& t : s.terms_) t.second = -t.second;
    return s;
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    const bool ay = a.has_y(), by = b.has_y();
    std::vector<Scalar::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size() * ((ay && by) ? 4 : 1));
    const uint64_t kP2 = mono::pack(2, 0, 0), kQ2 = mono::pack(0, 2, 0), kP2Q2 = mono::pack(2, 2, 0);
    for (const auto& [ka, x] : a.terms_) {
        for (const auto& [kb, y] : b.terms_) {
            uint64_t key = mono::mul(ka, kb);
            Coeff c(x.c0 * y.c0);
            const bool xy = !x.c1.is_zero(), yy = !y.c1.is_zero();
            if (xy || yy) {
                if (xy && yy) {
                    c.c1 = x.c0 * y.c1 + x.c1 * y.c0;
                    // Y^2 = p^2 - p^2 q^2 - 1 + q^2
                    QOmega v = x.c1 * y.c1;
                    c.c0 -= v;
                    out.emplace_back(mono::mul(key, kP2), Coeff(v));
                    out.emplace_back(mono::mul(key, kQ2), Coeff(v));
                    out.emplace_back(mono::mul(key, kP2Q2), Coeff(-v));
                } else if (xy) {
                    c.c1 = x.c1 * y.c0;
                } else {
                    c.c1 = x.c0 * y.c1;
                }
            }
            out.emplace_back(key, std::move(c));
        }
    }
    return Scalar::from_terms(std::move(out));
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator*=(const mpq_class& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.second.c0 = t.second.c0 * s;
        t.second.c1 = t.second.c1 * s;
    }
    return *this;
}

Scalar Scalar::pow(int k) const {
    if (k < 0) {
        if (terms_.size() != 1 || !terms_[0].second.c1.is_zero())
            throw std::domain_error("negative power of a non-monomial Scalar");
        Exps e = mono::unpack(terms_[0].first);
        return monomial(-e.ep, -e.eq, -e.et, Coeff(terms_[0].second.c0.inverse())).pow(-k);
    }
    Scalar result(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

const Scalar& y_squared() {
    static const Scalar y2 = (Scalar::p(2) - Scalar(1)) * (Scalar(1) - Scalar::q(2));
    return y2;
}

namespace {

void append_var(std::string& m, const char* name, int e) {
    if (e == 0) return;
    if (!m.empty()) m += "*";
    m += name;
    if (e != 1) {
        m += "^";
        m += std::to_string(e);
    }
}

std::string monomial_text(const Exps& e, int basis) {
    std::string m;
    if (basis & 1) m += "w";
    if (basis & 2) {
        if (!m.empty()) m += "*";
        m += "Y";
    }
    if (e.ep % 2 == 0 && e.eq % 2 == 0) {
        append_var(m, "t0", e.ep / 2);
        append_var(m, "t1", e.eq / 2);
    } else {
        append_var(m, "p", e.ep);
        append_var(m, "q", e.eq);
    }
    append_var(m, "t", e.et);
    return m;
}

}  // namespace

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Exps e = mono::unpack(key);
        const mpq_class* parts[4] = {&c.c0.a, &c.c0.b, &c.c1.a, &c.c1.b};
        for (int basis = 0; basis < 4; ++basis) {
            const mpq_class& r = *parts[basis];
            if (sgn(r) == 0) continue;
            if (first)
                out += sgn(r) < 0 ? "-" : "";
            else
                out += sgn(r) < 0 ? " - " : " + ";
            first = false;
            std::string m = monomial_text(e, basis);
            mpq_class ar = abs(r);
            if (m.empty()) {
                out += ar.get_str();
            } else {
                if (ar != 1) {
                    out += ar.get_str();
                    out += "*";
                }
                out += m;
            }
        }
    }
    return out;
}

namespace {

struct ScalarOps {
    Scalar number(const std::string& digits) { return Scalar(mpq_class(digits)); }
    Scalar variable(const std::string& name) {
        if (name == "t0") return Scalar::t0();
        if (name == "t1") return Scalar::t1();
        if (name == "p") return Scalar::p();
        if (name == "q") return Scalar::q();
        if (name == "t") return Scalar::t();
        if (name == "Y") return Scalar::Y();
        if (name == "w") return Scalar::omega();
        throw ParseError("unknown variable '" + name + "'");
    }
    Scalar div(const Scalar& a, const Scalar& b) {
        if (b.is_constant() && !b.is_zero() && !b.has_y()) {
            QOmega inv = b.terms()[0].second.c0.inverse();
            return a * Scalar(inv);
        }
        if (b.size() == 1 && !b.has_y()) return a * b.pow(-1);
        throw ParseError("division by a non-monomial in a Scalar expression");
    }
    Scalar pow(const Scalar& a, int e) { return a.pow(e); }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    ScalarOps ops;
    return detail::ExprParser<Scalar, ScalarOps>(text, ops).parse();
}

namespace {

struct DegreeBox {
    std::array<int, 3> lo{INT_MAX, INT_MAX, INT_MAX};
    std::array<int, 3> hi{INT_MIN, INT_MIN, INT_MIN};
    explicit DegreeBox(const Scalar& x) {
        for (const auto& t : x.terms()) {
            Exps e = mono::unpack(t.first);
            std::array<int, 3> v{e.ep, e.eq, e.et};
            for (int i = 0; i < 3; ++i) {
                lo[i] = std::min(lo[i], v[i]);
                hi[i] = std::max(hi[i], v[i]);
            }
        }
    }
};

}  // namespace

bool exact_divide(const Scalar& a, const Scalar& b, Scalar& quotient) {
    if (b.is_zero()) throw std::domain_error("division by zero Scalar");
    if (b.has_y()) throw std::invalid_argument("exact_divide: divisor must be Y-free");
    quotient = Scalar();
    if (a.is_zero()) return true;
    // Degrees in each variable are additive, so an exact quotient lies in this box.
    DegreeBox da(a), db(b);
    std::array<int, 3> lo, hi;
    for (int i = 0; i < 3; ++i) {
        lo[i] = da.lo[i] - db.lo[i];
        hi[i] = da.hi[i] - db.hi[i];
        if (lo[i] > hi[i]) return false;
    }
    const auto& bt = b.terms();
    const uint64_t lead_b = bt.back().first;
    const QOmega lead_inv = bt.back().second.c0.inverse();
    std::vector<Scalar::Term> qterms;
    Scalar r = a;
    while (!r.is_zero()) {
        const auto& lt = r.terms().back();
        uint64_t qk = mono::div(lt.first, lead_b);
        Exps qe = mono::unpack(qk);
        std::array<int, 3> v{qe.ep, qe.eq, qe.et};
        for (int i = 0; i < 3; ++i)
            if (v[i] < lo[i] || v[i] > hi[i]) return false;
        Coeff qc(lt.second.c0 * lead_inv, lt.second.c1 * lead_inv);
        r -= Scalar::monomial(qe.ep, qe.eq, qe.et, qc) * b;
        qterms.emplace_back(qk, std::move(qc));
    }
    quotient = Scalar::from_terms(std::move(qterms));
    return true;
}

bool is_integral_laurent(const Scalar& x) {
    for (const auto& [key, c] : x.terms()) {
        if (!c.c1.is_zero() || !c.c0.is_rational()) return false;
        Exps e = mono::unpack(key);
        if (e.et != 0 || (e.ep & 1) || (e.eq & 1)) return false;
        if (c.c0.a.get_den() != 1) return false;
    }
    return true;
}

Scalar ado_substitute(const Scalar& x) {
    std::vector<Scalar::Term> out;
    out.reserve(x.size());
    for (const auto& [key, c] : x.terms()) {
        if (!c.c1.is_zero()) throw std::invalid_argument("ado_substitute: Y-part present");
        Exps e = mono::unpack(key);
        if ((e.ep & 1) || (e.eq & 1)) throw std::invalid_argument("ado_substitute: odd p or q exponent");
        // t0^a t1^b -> t^(2a) * w^(2b) * t^(-2b)
        out.emplace_back(mono::pack(0, 0, e.et + e.ep - e.eq), Coeff(c.c0 * QOmega::omega_pow(e.eq)));
    }
    return Scalar::from_terms(std::move(out));
}

Scalar swap_t0_t1(const Scalar& x) {
    std::vector<Scalar::Term> out;
    out.reserve(x.size());
    for (const auto& [key, c] : x.terms()) {
        if (!c.c1.is_zero()) throw std::invalid_argument("swap_t0_t1: Y-part present");
        Exps e = mono::unpack(key);
        out.emplace_back(mono::pack(e.eq, e.ep, e.et), c);
    }
    return Scalar::from_terms(std::move(out));
}

}  // namespace lgs
