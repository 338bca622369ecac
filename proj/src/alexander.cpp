#include "lgskein/alexander.hpp"

#include <stdexcept>
#include <vector>

namespace lgs {

namespace {

using Mat = std::vector<std::vector<Scalar>>;

Mat identity(int m) {
    Mat I(m, std::vector<Scalar>(m));
    for (int i = 0; i < m; ++i) I[i][i] = Scalar(1);
    return I;
}

// Reduced Burau image of s_g^sign: identity except row g-1, which is
// (t, -t, 1) for s_g and (1, -t^-1, t^-1) for its inverse, on columns g-2, g-1, g.
Mat burau_generator(int m, int g, int sign) {
    Mat B = identity(m);
    int r = g - 1;
    Scalar t = Scalar::t0(), ti = Scalar::t0(-1);
    Scalar left = sign > 0 ? t : Scalar(1);
    Scalar mid = sign > 0 ? -t : -ti;
    Scalar right = sign > 0 ? Scalar(1) : ti;
    if (r - 1 >= 0) B[r][r - 1] = left;
    B[r][r] = mid;
    if (r + 1 < m) B[r][r + 1] = right;
    return B;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    size_t m = A.size();
    Mat C(m, std::vector<Scalar>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k) {
            if (A[i][k].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!B[k][j].is_zero()) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

// Fraction-free Gaussian elimination; every division is exact.
Scalar bareiss_det(Mat A) {
    const size_t m = A.size();
    if (m == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < m; ++k) {
        if (A[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < m && A[p][k].is_zero()) ++p;
            if (p == m) return Scalar();
            std::swap(A[k], A[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < m; ++i)
            for (size_t j = k + 1; j < m; ++j) {
                Scalar x = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                Scalar q;
                if (!exact_divide(x, prev, q)) throw std::logic_error("Bareiss step is not exact");
                A[i][j] = std::move(q);
            }
        prev = A[k][k];
    }
    return sign > 0 ? A[m - 1][m - 1] : -A[m - 1][m - 1];
}

}  // namespace

Scalar burau_det(const BraidWord& w) {
    const int m = w.n - 1;
    Mat B = identity(m);
    for (int x : w.letters) B = mat_mul(B, burau_generator(m, std::abs(x), x > 0 ? 1 : -1));
    Mat A = identity(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) A[i][j] -= B[i][j];
    return bareiss_det(std::move(A));
}

Scalar alexander_burau(const BraidWord& w) {
    if (closure_info(w).components != 1) throw ComponentMismatch("Alexander oracle needs a knot closure");
    Scalar det = burau_det(w);
    Scalar cyc;
    for (int k = 0; k < w.n; ++k) cyc += Scalar::t0(k);
    Scalar delta;
    if (!exact_divide(det, cyc, delta)) throw std::logic_error("Burau determinant not divisible by [n]_t");
    // Symmetric representative: shift so that min and max t0-degrees are opposite.
    int lo = mono::unpack(delta.terms().front().first).ep / 2;
    int hi = mono::unpack(delta.terms().back().first).ep / 2;
    if ((lo + hi) % 2 != 0) throw std::logic_error("Alexander polynomial has odd degree span");
    delta *= Scalar::t0(-(lo + hi) / 2);
    mpq_class at_one = 0;
    for (const auto& [k, c] : delta.terms()) at_one += c.c0.a;
    if (at_one != 1 && at_one != -1) throw std::logic_error("Alexander polynomial is not +-1 at t = 1");
    if (at_one == -1) delta = -delta;
    return delta;
}

}  // namespace lgs
