#include "lgskein/rt_eval.hpp"

#include <algorithm>
#include <random>

#include "lgskein/alexander.hpp"

namespace lgs {

Scalar bracket(const SquareMatrix<Scalar>& F) {
    Scalar tr;
    for (size_t i = 0; i < F.size(); ++i) tr += F[i][i];
    return tr * mpq_class(1, static_cast<long>(F.size()));
}

InvariantValue evaluate_rt(const BraidWord& w, Kind kind) {
    const EnhancedRMatrix& M = builtin_rmatrix(kind);
    InvariantValue out;
    out.kind = kind;
    out.writhe_used = closure_info(w).writhe;
    out.value = scalar_of(f_cut(w, static_cast<const Rep<Scalar>&>(M)));
    if (kind != Kind::ADO && !is_integral_laurent(out.value))
        throw NotIntegral(kind_name(kind) + " value is not in Z[t0^+-1, t1^+-1]: " + out.value.str());
    return out;
}

PVal evaluate_rt_at(const BraidWord& w, Kind kind, const SpecPoint& P) {
    Rep<PVal> S = specialize_rep(builtin_rmatrix(kind), P);
    return scalar_of(f_cut(w, S));
}

namespace {

template <class F>
Scalar map_even_terms(const Scalar& v, F&& f) {
    std::vector<Scalar::Term> out;
    for (const auto& [key, c] : v.terms()) {
        Exps e = mono::unpack(key);
        if ((e.ep & 1) || (e.eq & 1) || e.et != 0 || !c.c1.is_zero())
            throw std::invalid_argument("substitution needs a Y-free polynomial in t0, t1");
        auto [a, b, negate] = f(e.ep / 2, e.eq / 2);
        out.emplace_back(mono::pack(2 * a, 2 * b, 0), negate ? -c : c);
    }
    return Scalar::from_terms(std::move(out));
}

struct Mapped {
    int a;
    int b;
    bool negate;
};

}  // namespace

Scalar substitute_t1_power(const Scalar& v, int power, int sign) {
    return map_even_terms(v, [&](int a, int b) { return Mapped{a + power * b, 0, sign < 0 && (b & 1)}; });
}

Scalar substitute_t0_one(const Scalar& v) {
    return map_even_terms(v, [](int, int b) { return Mapped{0, b, false}; });
}

Scalar substitute_t0_square(const Scalar& v) {
    return map_even_terms(v, [](int a, int b) { return Mapped{2 * a, b, false}; });
}

std::vector<CheckRecord> specialization_suite(const BraidWord& w, int points, uint64_t seed) {
    if (closure_info(w).components != 1) throw ComponentMismatch("specialization suite needs a knot closure");
    std::vector<CheckRecord> out;
    auto record = [&](std::string name, bool ok, std::string witness = {}) {
        out.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
    };
    const Scalar v1 = evaluate_rt(w, Kind::V1).value;
    const Scalar lg = evaluate_rt(w, Kind::LG).value;
    const Scalar delta = alexander_burau(w);
    const Scalar delta_sq = delta * delta;
    const Scalar delta_of_square = substitute_t0_square(delta);

    Scalar a = substitute_t1_power(v1, -1, 1);
    record("V1(t0,1/t0) = Alexander^2 [symbolic]", a == delta_sq, a.str() + " vs " + delta_sq.str());
    Scalar b = substitute_t1_power(v1, -1, -1);
    record("V1(t0,-1/t0) = Alexander(t0^2) [symbolic]", b == delta_of_square, b.str() + " vs " + delta_of_square.str());
    Scalar c = substitute_t1_power(v1, 0, 1);
    record("V1(t0,1) = 1 [symbolic]", c == Scalar(1), c.str());
    Scalar d = substitute_t0_one(v1);
    record("V1(1,t1) = 1 [symbolic]", d == Scalar(1), d.str());

    // Point checks: t0 drawn from small rationals avoiding 0 and +-1.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<mpq_class> t0s;
    while (static_cast<int>(t0s.size()) < points) {
        mpq_class x(num(rng), den(rng));
        x.canonicalize();
        if (sgn(x) == 0 || abs(x) == 1) continue;
        if (std::find(t0s.begin(), t0s.end(), x) != t0s.end()) continue;
        t0s.push_back(x);
    }
    bool ok_a = true, ok_b = true, ok_c = true, ok_d = true;
    std::string wit;
    for (const auto& x : t0s) {
        auto at = [](mpq_class u, mpq_class v) {
            SpecPoint P = SpecPoint::at(std::move(u), std::move(v));
            P.require_admissible = false;
            return P;
        };
        PVal dx = specialize(delta, at(x, 1));
        PVal dx2 = specialize(delta, at(x * x, 1));
        if (!(specialize(v1, at(x, 1 / x)) == dx * dx)) ok_a = false, wit = "t0=" + x.get_str();
        if (!(specialize(v1, at(x, -1 / x)) == dx2)) ok_b = false, wit = "t0=" + x.get_str();
        if (!(specialize(v1, at(x, 1)) == PVal(1))) ok_c = false, wit = "t0=" + x.get_str();
        if (!(specialize(v1, at(1, x)) == PVal(1))) ok_d = false, wit = "t1=" + x.get_str();
    }
    std::string tag = " [" + std::to_string(points) + " points]";
    record("V1(t0,1/t0) = Alexander^2" + tag, ok_a, wit);
    record("V1(t0,-1/t0) = Alexander(t0^2)" + tag, ok_b, wit);
    record("V1(t0,1) = 1" + tag, ok_c, wit);
    record("V1(1,t1) = 1" + tag, ok_d, wit);

    record("LG(t0,t1) = LG(t1,t0)", swap_t0_t1(lg) == lg, lg.str());
    Scalar ado = evaluate_rt(w, Kind::ADO).value;
    Scalar lg_sub = ado_substitute(lg);
    record("ADO(t) = LG(t^2, w^2 t^-2)", ado == lg_sub, ado.str() + " vs " + lg_sub.str());
    return out;
}

}  // namespace lgs
