#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lgskein/braid.hpp"
#include "lgskein/rmatrix.hpp"

namespace lgs {

struct NotScalar : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class R>
using SquareMatrix = std::vector<std::vector<R>>;  // [row][col]

// tr_{2..n}((id (x) h^(x)(n-1)) rho(w)), streamed over the d^n basis columns.
template <class R>
SquareMatrix<R> f_cut(const BraidWord& w, const Rep<R>& M) {
    const int d = M.d, n = w.n;
    const uint32_t tail = ipow(d, n - 1);
    SquareMatrix<R> F(d, std::vector<R>(d));
    for (int i = 0; i < d; ++i)
        for (uint32_t js = 0; js < tail; ++js) {
            R weight(1);
            for (uint32_t x = js, k = 0; k < static_cast<uint32_t>(n - 1); ++k, x /= d) weight = weight * M.h[x % d];
            SparseVec<R> col = apply_word(basis_vector<R>(i * tail + js), M, n, w.letters);
            for (const auto& [row, v] : col)
                if (row % tail == js) F[row / tail][i] += weight * v;
        }
    return F;
}

template <class R>
R scalar_of(const SquareMatrix<R>& F) {
    const size_t d = F.size();
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) {
            if (r != c && !F[r][c].is_zero()) throw NotScalar("off-diagonal entry (" + std::to_string(r) + "," +
                                                              std::to_string(c) + ") is nonzero");
            if (r == c && !(F[r][r] == F[0][0])) throw NotScalar("unequal diagonal entries");
        }
    return d ? F[0][0] : R();
}

// (1/dim V) tr((id (x) h^(x)(n-1)) rho(w)); diagnostic only.
Scalar bracket(const SquareMatrix<Scalar>& F);

struct InvariantValue {
    Scalar value;
    Kind kind = Kind::V1;
    int writhe_used = 0;
};

// P1 scalar of f_cut; lg and v1 values are checked to lie in Z[t0^+-1, t1^+-1].
InvariantValue evaluate_rt(const BraidWord& w, Kind kind);

// Value at a point, for fast checks.
PVal evaluate_rt_at(const BraidWord& w, Kind kind, const SpecPoint& P);

// Monomial substitutions on Laurent polynomials in t0, t1 with even p, q exponents.
Scalar substitute_t1_power(const Scalar& v, int power, int sign);  // t1 -> sign * t0^power
Scalar substitute_t0_one(const Scalar& v);                          // t0 -> 1
Scalar substitute_t0_square(const Scalar& v);                       // t0 -> t0^2 in a t0-only polynomial

struct CheckRecord {
    std::string name;
    bool ok = false;
    std::string witness;
};

// Specialization identities for a knot word, symbolically and at `points` rational points.
std::vector<CheckRecord> specialization_suite(const BraidWord& w, int points = 12, uint64_t seed = 0);

}  // namespace lgs
