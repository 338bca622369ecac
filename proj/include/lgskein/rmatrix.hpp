#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgskein/braid.hpp"
#include "lgskein/scalar.hpp"
#include "lgskein/specialize.hpp"

namespace lgs {

enum class Kind { LG, V1, ADO };
std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

struct PositionOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

template <class R>
using SparseVec = std::map<uint32_t, R>;

// Operator on V (x) V as columns: cols[a*d + b] lists (row index, entry).
template <class R>
struct LocalMatrix {
    int d = 0;
    std::vector<std::vector<std::pair<int, R>>> cols;

    R entry(int row, int col) const {
        for (const auto& [r, v] : cols.at(col))
            if (r == row) return v;
        return R();
    }
};

// An R-matrix, its inverse and the enhancement diagonal, over the ring R.
template <class R>
struct Rep {
    int d = 0;
    LocalMatrix<R> fwd;
    LocalMatrix<R> inv;
    std::vector<R> h;
};

struct EnhancedRMatrix : Rep<Scalar> {
    Kind kind = Kind::V1;
};

const EnhancedRMatrix& builtin_rmatrix(Kind kind);

// The ADO matrix is in t, w; coefficients in t0, t1 are mapped by t0 -> t^2, t1 -> w^2 t^-2.
inline bool uses_ado_variables(Kind k) { return k == Kind::ADO; }

template <class R, class F>
LocalMatrix<R> map_local(const LocalMatrix<Scalar>& m, F&& f) {
    LocalMatrix<R> out;
    out.d = m.d;
    out.cols.resize(m.cols.size());
    for (size_t c = 0; c < m.cols.size(); ++c)
        for (const auto& [r, v] : m.cols[c]) {
            R x = f(v);
            if (!x.is_zero()) out.cols[c].emplace_back(r, std::move(x));
        }
    return out;
}

Rep<PVal> specialize_rep(const Rep<Scalar>& rep, const SpecPoint& P);

inline uint32_t ipow(int d, int k) {
    uint32_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<uint32_t>(d);
    return r;
}

// Acts by fwd (sign > 0) or inv (sign < 0) on tensor factors i, i+1 (1-based) of V^(x)n.
template <class R>
SparseVec<R> apply_generator(const SparseVec<R>& v, const Rep<R>& M, int n, int i, int sign) {
    if (i < 1 || i > n - 1) throw PositionOutOfRange("generator position " + std::to_string(i));
    const int d = M.d;
    const uint32_t low = ipow(d, n - i - 1);  // place value of factor i+1 (0-based i)
    const uint32_t high = low * d;            // place value of factor i
    const LocalMatrix<R>& L = sign > 0 ? M.fwd : M.inv;
    SparseVec<R> out;
    for (const auto& [idx, c] : v) {
        uint32_t a = (idx / high) % d, b = (idx / low) % d;
        uint32_t base = idx - a * high - b * low;
        for (const auto& [row, e] : L.cols[a * d + b]) {
            R y = c * e;
            if (y.is_zero()) continue;  // specialized entries can vanish
            uint32_t k = base + (row / d) * high + (row % d) * low;
            auto [it, fresh] = out.try_emplace(k, y);
            if (!fresh) {
                it->second += y;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

// rho(x1 ... xk) v = rho(x1)(...(rho(xk) v)).
template <class R>
SparseVec<R> apply_word(SparseVec<R> v, const Rep<R>& M, int n, const Word& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_generator(v, M, n, std::abs(*it), *it > 0 ? 1 : -1);
    return v;
}

template <class R>
SparseVec<R> basis_vector(uint32_t idx) {
    SparseVec<R> v;
    v.emplace(idx, R(1));
    return v;
}

// Column-major sparse endomorphism of V^(x)n.
template <class R>
struct SparseOperator {
    int n = 0;
    int d = 0;
    std::map<uint32_t, SparseVec<R>> cols;

    R entry(uint32_t row, uint32_t col) const {
        auto c = cols.find(col);
        if (c == cols.end()) return R();
        auto r = c->second.find(row);
        return r == c->second.end() ? R() : r->second;
    }
    bool operator==(const SparseOperator& o) const { return n == o.n && d == o.d && cols == o.cols; }
};

template <class R>
SparseOperator<R> operator_of_word(const Word& w, const Rep<R>& M, int n) {
    SparseOperator<R> op{n, M.d, {}};
    const uint32_t N = ipow(M.d, n);
    for (uint32_t c = 0; c < N; ++c) {
        SparseVec<R> col = apply_word(basis_vector<R>(c), M, n, w);
        if (!col.empty()) op.cols.emplace(c, std::move(col));
    }
    return op;
}

// Identity (x) L (x) identity built entry by entry, independent of apply_generator.
template <class R>
SparseOperator<R> kron_generator(const Rep<R>& M, int n, int i, int sign) {
    if (i < 1 || i > n - 1) throw PositionOutOfRange("generator position " + std::to_string(i));
    const LocalMatrix<R>& L = sign > 0 ? M.fwd : M.inv;
    const uint32_t d = M.d, left = ipow(d, i - 1), right = ipow(d, n - i - 1), dd = d * d;
    SparseOperator<R> op{n, M.d, {}};
    for (uint32_t l = 0; l < left; ++l)
        for (uint32_t c = 0; c < dd; ++c)
            for (uint32_t r = 0; r < right; ++r) {
                SparseVec<R> col;
                for (const auto& [row, e] : L.cols[c]) col.emplace((l * dd + row) * right + r, e);
                if (!col.empty()) op.cols.emplace((l * dd + c) * right + r, std::move(col));
            }
    return op;
}

template <class R>
SparseOperator<R> multiply(const SparseOperator<R>& A, const SparseOperator<R>& B) {
    SparseOperator<R> out{A.n, A.d, {}};
    for (const auto& [c, bcol] : B.cols) {
        SparseVec<R> acc;
        for (const auto& [k, bv] : bcol) {
            auto ac = A.cols.find(k);
            if (ac == A.cols.end()) continue;
            for (const auto& [r, av] : ac->second) {
                R x = av * bv;
                auto [it, fresh] = acc.try_emplace(r, x);
                if (!fresh) {
                    it->second += x;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        if (!acc.empty()) out.cols.emplace(c, std::move(acc));
    }
    return out;
}

// Product of kron_generator factors, left to right.
template <class R>
SparseOperator<R> explicit_word_operator(const Word& w, const Rep<R>& M, int n) {
    SparseOperator<R> op{n, M.d, {}};
    for (uint32_t c = 0; c < ipow(M.d, n); ++c) op.cols[c].emplace(c, R(1));
    for (int x : w) op = multiply(op, kron_generator(M, n, std::abs(x), x > 0 ? 1 : -1));
    return op;
}

struct CheckResult {
    bool ok = true;
    std::string witness;  // first failing basis column, when !ok
};

// A relation sum_l c_l w_l = 0 with polynomial coefficients.
template <class R>
using LinearRelation = std::vector<std::pair<Word, R>>;

// Checks sum_l c_l rho(w_l) e = 0 for every basis vector e of V^(x)n.
template <class R>
CheckResult check_linear_relation(const LinearRelation<R>& rel, const Rep<R>& M, int n) {
    const uint32_t N = ipow(M.d, n);
    for (uint32_t c = 0; c < N; ++c) {
        SparseVec<R> acc;
        for (const auto& [w, coef] : rel) {
            for (auto& [k, x] : apply_word(basis_vector<R>(c), M, n, w)) {
                R y = coef * x;
                if (y.is_zero()) continue;
                auto [it, fresh] = acc.try_emplace(k, y);
                if (!fresh) {
                    it->second += y;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        if (!acc.empty()) return {false, "basis column " + std::to_string(c)};
    }
    return {};
}

// fwd * inv == id and inv * fwd == id on V (x) V.
template <class R>
CheckResult check_inverse(const Rep<R>& M) {
    for (int sign : {1, -1}) {
        Word w = sign > 0 ? Word{1, -1} : Word{-1, 1};
        for (uint32_t c = 0; c < ipow(M.d, 2); ++c) {
            SparseVec<R> v = apply_word(basis_vector<R>(c), M, 2, w);
            if (v != basis_vector<R>(c)) return {false, "basis column " + std::to_string(c)};
        }
    }
    return {};
}

CheckResult check_braid_relation(const Rep<Scalar>& M);
// R^3 + (1-t0-t1) R^2 + (t0t1-t0-t1) R + t0t1 = 0; ADO coefficients are mapped.
CheckResult check_cubic_minimal_poly(const EnhancedRMatrix& M);
// (h (x) h) commutes with fwd, and tr_2((id (x) h) fwd^(+-1)) = id.
CheckResult check_enhancement(const Rep<Scalar>& M);
Scalar trace_h(const Rep<Scalar>& M);

// Coefficient map for relation scalars given in t0, t1.
Scalar coefficient_for(Kind k, const Scalar& x);

}  // namespace lgs
