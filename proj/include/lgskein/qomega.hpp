#pragma once

#include <gmpxx.h>

#include <string>

namespace lgs {

// a + b*w with w a primitive sixth root of unity, w^2 = w - 1.
struct QOmega {
    mpq_class a;
    mpq_class b;

    QOmega() = default;
    QOmega(long v) : a(v) {}
    QOmega(const mpq_class& v) : a(v) {}
    QOmega(mpq_class x, mpq_class y) : a(std::move(x)), b(std::move(y)) {}

    static QOmega omega() { return QOmega(0, 1); }
    // w^k for any integer k (w^6 = 1).
    static QOmega omega_pow(int k);

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    QOmega& operator+=(const QOmega& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    QOmega& operator-=(const QOmega& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    QOmega operator-() const { return QOmega(-a, -b); }

    QOmega conj() const { return QOmega(a + b, -b); }
    mpq_class norm() const { return a * a + a * b + b * b; }
    // Throws std::domain_error on zero.
    QOmega inverse() const;

    std::string str() const;
};

inline bool operator==(const QOmega& x, const QOmega& y) { return x.a == y.a && x.b == y.b; }
inline bool operator!=(const QOmega& x, const QOmega& y) { return !(x == y); }

inline QOmega operator+(QOmega x, const QOmega& y) { return x += y; }
inline QOmega operator-(QOmega x, const QOmega& y) { return x -= y; }

inline QOmega operator*(const QOmega& x, const QOmega& y) {
    if (x.is_rational() && y.is_rational()) return QOmega(mpq_class(x.a * y.a));
    mpq_class bb = x.b * y.b;
    return QOmega(x.a * y.a - bb, x.a * y.b + x.b * y.a + bb);
}
inline QOmega& operator*=(QOmega& x, const QOmega& y) { return x = x * y; }

inline QOmega operator*(const QOmega& x, const mpq_class& s) { return QOmega(x.a * s, x.b * s); }

inline QOmega operator/(const QOmega& x, const QOmega& y) { return x * y.inverse(); }

}  // namespace lgs
