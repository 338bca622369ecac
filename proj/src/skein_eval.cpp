#include <algorithm>
#include <cstdlib>

#include "lgskein/skein.hpp"

namespace lgs {

namespace {

int count_top(const Word& w, int m) {
    int c = 0;
    for (int x : w)
        if (std::abs(x) == m) ++c;
    return c;
}

// Closure value of a linear combination on n strands, as a Fraction.
Fraction closure_value(const SkeinElement& e, int n) {
    if (n == 1) {
        Fraction sum;
        for (const auto& [w, c] : e.terms()) {
            if (!w.empty()) throw std::logic_error("one-strand word " + word_str(w));
            sum += c;
        }
        return sum;
    }
    const int m = n - 1;
    const SkeinElement r = reduce_normal_form(e, n);
    SkeinElement next(n - 1);
    const Word D{-m, m - 1, -m};
    for (const auto& [w, c] : r.terms()) {
        const int k = count_top(w, m);
        if (k == 0) continue;  // split closure
        if (k == 1) {
            // u s^e v closes like v u s^e; destabilize.
            size_t pos = 0;
            while (std::abs(w[pos]) != m) ++pos;
            Word vu(w.begin() + pos + 1, w.end());
            vu.insert(vu.end(), w.begin(), w.begin() + pos);
            next.add(vu, c);
            continue;
        }
        if (k != 2 || w.size() < 3 || !std::equal(D.begin(), D.end(), w.end() - 3))
            throw std::logic_error("reduction left a word outside the normal shape: " + word_str(w));
        // c sbar s_{m-1} sbar closes like c sbar^2 s_{m-1}; expand sbar^2 by R1.
        const Word prefix(w.begin(), w.end() - 3);
        const SkeinElement sq = default_engine().reduce_word({-1, -1}, 2);
        for (const auto& [u, x] : sq.terms()) {
            if (u.empty()) continue;  // prefix s_{m-1} alone is split
            Word v = prefix;
            v.push_back(m - 1);
            next.add(v, c * x);
        }
    }
    return closure_value(next, n - 1);
}

// Exact Gaussian elimination over PVal; returns the rank of rows.
int rank_of(std::vector<std::vector<PVal>> rows) {
    int rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const PVal inv = rows[rank][c].inverse();
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const PVal f = rows[i][c] * inv;
            for (size_t k = c; k < cols; ++k)
                if (!rows[rank][k].is_zero()) rows[i][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

SpecPoint default_point() { return certificate_points().front(); }

}  // namespace

SkeinElement reduce_normal_form(const SkeinElement& e, int n) {
    if (e.strands() != n) throw std::invalid_argument("element is on " + std::to_string(e.strands()) + " strands");
    return default_engine().reduce(e);
}

Fraction skein_value(const BraidWord& w) { return closure_value(SkeinElement::of_word(w.n, w.letters), w.n); }

InvariantValue evaluate_skein(const BraidWord& w, Kind kind, bool check_against_rt) {
    if (kind == Kind::ADO) throw std::invalid_argument("skein evaluation covers lg and v1");
    const Fraction v = skein_value(w);
    if (!v.is_polynomial()) throw SkeinMismatch("skein value keeps a denominator: " + v.str());
    InvariantValue out;
    out.kind = kind;
    out.writhe_used = closure_info(w).writhe;
    out.value = v.num();
    if (check_against_rt) {
        const InvariantValue rt = evaluate_rt(w, kind);
        if (!(rt.value == out.value))
            throw SkeinMismatch("skein " + out.value.str() + " differs from state sum " + rt.value.str());
    }
    return out;
}

int rank_c3(Kind kind, const std::optional<SpecPoint>& P, bool duplicate_one) {
    const SpecPoint pt = P.value_or(default_point());
    if (!pt.admissible()) throw InadmissiblePoint("rank_c3 at " + pt.str());
    const Rep<PVal> M = specialize_rep(builtin_rmatrix(kind), pt);
    const uint32_t dim = ipow(M.d, 3);
    std::vector<Word> words = window_basis();
    if (duplicate_one) words.push_back(words.back());
    std::vector<std::vector<PVal>> rows;
    for (const Word& w : words) {
        std::vector<PVal> flat(static_cast<size_t>(dim) * dim);
        for (uint32_t col = 0; col < dim; ++col)
            for (const auto& [row, x] : apply_word(basis_vector<PVal>(col), M, 3, w)) flat[size_t(row) * dim + col] = x;
        rows.push_back(std::move(flat));
    }
    return rank_of(std::move(rows));
}

std::vector<PVal> solve_r3_at_point(const SpecPoint& P, Kind kind) {
    if (!P.admissible()) throw InadmissiblePoint("solve_r3_at_point at " + P.str());
    const R3Data& data = r3_data();
    const size_t L = data.words.size();
    const Rep<PVal> M = specialize_rep(builtin_rmatrix(kind), P);
    const uint32_t dim = ipow(M.d, 4);
    SkeinElement lhs(4);
    for (const auto& t : builtin_relations().get("R3").lhs) lhs.add(t.word, t.coeff);

    // Row echelon form of [images | lhs image], filled one equation at a time.
    std::vector<std::vector<PVal>> piv_rows;
    std::vector<size_t> piv_cols;
    for (uint32_t col = 0; col < dim && piv_rows.size() < L; ++col) {
        std::map<uint32_t, std::vector<PVal>> eqs;
        auto row_of = [&](uint32_t r) -> std::vector<PVal>& {
            auto it = eqs.find(r);
            if (it == eqs.end()) it = eqs.emplace(r, std::vector<PVal>(L + 1)).first;
            return it->second;
        };
        for (size_t l = 0; l < L; ++l)
            for (const auto& [r, x] : apply_word(basis_vector<PVal>(col), M, 4, data.words[l])) row_of(r)[l] = x;
        for (const auto& [r, x] : apply_element(lhs, M, P, col)) row_of(r)[L] = x;
        for (auto& [r, eq] : eqs) {
            for (size_t i = 0; i < piv_rows.size(); ++i) {
                const size_t c = piv_cols[i];
                if (eq[c].is_zero()) continue;
                const PVal f = eq[c];
                for (size_t k = c; k <= L; ++k)
                    if (!piv_rows[i][k].is_zero()) eq[k] -= f * piv_rows[i][k];
            }
            size_t c = 0;
            while (c < L && eq[c].is_zero()) ++c;
            if (c == L) continue;
            const PVal inv = eq[c].inverse();
            for (size_t k = c; k <= L; ++k) eq[k] = eq[k] * inv;
            piv_rows.push_back(std::move(eq));
            piv_cols.push_back(c);
            if (piv_rows.size() == L) break;
        }
    }
    if (piv_rows.size() < L)
        throw DependentSupport("R3 word images have rank " + std::to_string(piv_rows.size()) + " at " + P.str());
    std::vector<PVal> x(L);
    for (size_t i = L; i-- > 0;) {
        PVal v = piv_rows[i][L];
        for (size_t k = piv_cols[i] + 1; k < L; ++k)
            if (!piv_rows[i][k].is_zero()) v -= piv_rows[i][k] * x[k];
        x[piv_cols[i]] = v;
    }
    // The solution must reproduce the whole operator, not just the pivot equations.
    for (uint32_t col = 0; col < dim; ++col) {
        SparseVec<PVal> acc;
        for (size_t l = 0; l < L; ++l)
            for (const auto& [r, y] : apply_word(basis_vector<PVal>(col), M, 4, data.words[l])) acc[r] += x[l] * y;
        for (const auto& [r, y] : apply_element(lhs, M, P, col)) acc[r] -= y;
        for (const auto& [r, y] : acc)
            if (!y.is_zero()) throw DependentSupport("R3 is not solvable in its 78 words at " + P.str());
    }
    return x;
}

Scalar r3_common_denominator() {
    Fraction::Exponents e{};
    for (const Fraction& a : r3_data().coeffs) e = exponent_max(e, a.exponents());
    Scalar d(1);
    for (int i = 0; i < kNumDenomFactors; ++i) d *= denom_factor_pow(i, e[i]);
    return d;
}

namespace {

SpecPoint any_point(const mpq_class& t0, const mpq_class& t1) {
    SpecPoint P = SpecPoint::at(t0, t1);
    P.require_admissible = false;
    return P;
}

SkeinElement r3_left() {
    SkeinElement lhs(4);
    for (const auto& t : builtin_relations().get("R3").lhs) lhs.add(t.word, t.coeff);
    return lhs;
}

bool operator_vanishes(const SkeinElement& e, const Rep<PVal>& M, const SpecPoint& P) {
    const uint32_t dim = ipow(M.d, 4);
    for (uint32_t col = 0; col < dim; ++col)
        if (!apply_element(e, M, P, col).empty()) return false;
    return true;
}

}  // namespace

bool r3_left_operator_vanishes(const mpq_class& t0, const mpq_class& t1) {
    const SpecPoint P = any_point(t0, t1);
    return operator_vanishes(r3_left(), specialize_rep(builtin_rmatrix(Kind::V1), P), P);
}

bool r3_left_side_vanishes(const mpq_class& t0, const mpq_class& t1) {
    const SpecPoint P = any_point(t0, t1);
    const Rep<PVal> M = specialize_rep(builtin_rmatrix(Kind::V1), P);
    const R3Data& data = r3_data();
    Fraction::Exponents target{};
    for (const Fraction& a : data.coeffs) target = exponent_max(target, a.exponents());
    // D * (left - sum a_l w_l) with Laurent coefficients, evaluated at P.
    auto rational_at = [&](const Fraction& c) {
        const PVal v = specialize(c.numerator_over(target), P);
        if (!v.c1.is_zero() || !v.c0.is_rational()) throw std::logic_error("R3 coefficient is not rational at " + P.str());
        return Fraction(Scalar(v.c0.a));
    };
    const SkeinElement lhs = r3_left();
    SkeinElement cleared(4);
    for (const auto& [w, c] : lhs.terms()) cleared.add(w, rational_at(c));
    for (size_t l = 0; l < data.words.size(); ++l) cleared.add(data.words[l], -rational_at(data.coeffs[l]));
    if (!operator_vanishes(cleared, M, P)) throw std::logic_error("cleared R3 fails under V1 at " + P.str());
    return specialize(r3_common_denominator(), P).is_zero() || operator_vanishes(lhs, M, P);
}

bool check_r3_degeneration() {
    return r3_left_side_vanishes(2, mpq_class(1, 2)) && r3_left_side_vanishes(3, mpq_class(-1, 3)) &&
           !r3_left_side_vanishes(2, 3);
}

mpz_class conjectured_dim(int n) {
    if (n < 2) throw std::invalid_argument("conjectured_dim needs n >= 2");
    auto fact = [](int k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k);
        return f;
    };
    const mpz_class den = fact(n - 1) * fact(n);
    return fact(2 * n - 2) * fact(2 * n - 1) / (den * den);
}

}  // namespace lgs
