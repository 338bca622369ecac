#include "lgskein/rmatrix.hpp"

namespace lgs {

namespace {

// R(v_col) = sum coeff * v_row, with basis labels as in the ordered bases.
struct EntrySpec {
    int ci, cj;
    const char* coeff;
    int ri, rj;
};

// Links-Gould; basis w1..w4; p = t0^(1/2), q = t1^(1/2).
const EntrySpec kLG[] = {
    {1, 1, "t0", 1, 1},
    {1, 2, "p", 2, 1},
    {1, 3, "p", 3, 1},
    {1, 4, "1", 4, 1},
    {2, 1, "p", 1, 2},
    {2, 1, "t0 - 1", 2, 1},
    {2, 2, "-1", 2, 2},
    {2, 3, "t0*t1 - 1", 2, 3},
    {2, 3, "-p*q", 3, 2},
    {2, 3, "-p*q*Y", 4, 1},
    {2, 4, "q", 4, 2},
    {3, 1, "p", 1, 3},
    {3, 1, "t0 - 1", 3, 1},
    {3, 2, "-p*q", 2, 3},
    {3, 2, "Y", 4, 1},
    {3, 3, "-1", 3, 3},
    {3, 4, "q", 4, 3},
    {4, 1, "1", 1, 4},
    {4, 1, "-p*q*Y", 2, 3},
    {4, 1, "Y", 3, 2},
    {4, 1, "Y^2", 4, 1},
    {4, 2, "q", 2, 4},
    {4, 2, "t1 - 1", 4, 2},
    {4, 3, "q", 3, 4},
    {4, 3, "t1 - 1", 4, 3},
    {4, 4, "t1", 4, 4},
};

// V_{1,r} with r = 1; basis v1..v4.
const EntrySpec kV1[] = {
    {1, 1, "-1", 1, 1},
    {1, 2, "-t0", 2, 1},
    {1, 3, "-t1", 3, 1},
    {1, 4, "-t0*t1", 4, 1},
    {2, 1, "-1", 1, 2},
    {2, 1, "t0 - 1", 2, 1},
    {2, 2, "t0", 2, 2},
    {2, 3, "-t1", 3, 2},
    {2, 3, "(t0 - 1)*t1", 4, 1},
    {2, 4, "t0*t1", 4, 2},
    {3, 1, "-1", 1, 3},
    {3, 1, "t1 - 1", 3, 1},
    {3, 2, "-t1^-1", 2, 3},
    {3, 2, "1 - t0", 4, 1},
    {3, 3, "t1", 3, 3},
    {3, 4, "1", 4, 3},
    {4, 1, "-1", 1, 4},
    {4, 1, "t1^-1 - 1", 2, 3},
    {4, 1, "t1 - 1", 3, 2},
    {4, 1, "t0 + t1 - 2", 4, 1},
    {4, 2, "t1^-1", 2, 4},
    {4, 2, "t0 - 1", 4, 2},
    {4, 3, "t1", 3, 4},
    {4, 3, "t1 - 1", 4, 3},
    {4, 4, "-1", 4, 4},
};

// ADO at w = e^(2 pi i/6); basis x0..x2.
const EntrySpec kADO[] = {
    {0, 0, "t^2", 0, 0},
    {0, 1, "t^2 - 1", 0, 1},
    {0, 1, "t", 1, 0},
    {0, 2, "(t^2 - 1)*(1 - w^2*t^-2)", 0, 2},
    {0, 2, "t^-1 + w*t", 1, 1},
    {0, 2, "1", 2, 0},
    {1, 0, "t", 0, 1},
    {1, 1, "t - t^-1", 0, 2},
    {1, 1, "w^2", 1, 1},
    {1, 2, "w^2*t^-2 - 1", 1, 2},
    {1, 2, "-w*t^-1", 2, 1},
    {2, 0, "1", 0, 2},
    {2, 1, "-w*t^-1", 1, 2},
    {2, 2, "w^2*t^-2", 2, 2},
};

template <size_t N>
LocalMatrix<Scalar> build(const EntrySpec (&spec)[N], int d, int base) {
    LocalMatrix<Scalar> m;
    m.d = d;
    m.cols.resize(d * d);
    for (const auto& e : spec) {
        int col = (e.ci - base) * d + (e.cj - base);
        int row = (e.ri - base) * d + (e.rj - base);
        m.cols[col].emplace_back(row, Scalar::parse(e.coeff));
    }
    return m;
}

using Dense = std::vector<std::vector<Scalar>>;  // [row][col]

Dense to_dense(const LocalMatrix<Scalar>& m) {
    int N = m.d * m.d;
    Dense D(N, std::vector<Scalar>(N));
    for (int c = 0; c < N; ++c)
        for (const auto& [r, v] : m.cols[c]) D[r][c] += v;
    return D;
}

LocalMatrix<Scalar> from_dense(const Dense& D, int d) {
    LocalMatrix<Scalar> m;
    m.d = d;
    int N = d * d;
    m.cols.resize(N);
    for (int c = 0; c < N; ++c)
        for (int r = 0; r < N; ++r)
            if (!D[r][c].is_zero()) m.cols[c].emplace_back(r, D[r][c]);
    return m;
}

Dense dense_mul(const Dense& A, const Dense& B) {
    size_t N = A.size();
    Dense C(N, std::vector<Scalar>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t k = 0; k < N; ++k) {
            if (A[i][k].is_zero()) continue;
            for (size_t j = 0; j < N; ++j)
                if (!B[k][j].is_zero()) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

// Cubic relation coefficients mapped into the matrix's ring.
struct Cubic {
    Scalar a;  // 1 - t0 - t1
    Scalar b;  // t0 t1 - t0 - t1
    Scalar c;  // t0 t1
    Scalar c_inv;
};

Cubic cubic_for(Kind k) {
    Scalar t0 = Scalar::t0(), t1 = Scalar::t1();
    return {coefficient_for(k, 1 - t0 - t1), coefficient_for(k, t0 * t1 - t0 - t1), coefficient_for(k, t0 * t1),
            coefficient_for(k, Scalar::t0(-1) * Scalar::t1(-1))};
}

// From the cubic relation: R^-1 = -(R^2 + a R + b) / c.
LocalMatrix<Scalar> inverse_from_cubic(const LocalMatrix<Scalar>& fwd, Kind k) {
    Cubic cu = cubic_for(k);
    Dense F = to_dense(fwd);
    Dense F2 = dense_mul(F, F);
    size_t N = F.size();
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Scalar x = F2[i][j] + cu.a * F[i][j];
            if (i == j) x += cu.b;
            F2[i][j] = -(x * cu.c_inv);
        }
    return from_dense(F2, fwd.d);
}

EnhancedRMatrix make(Kind k) {
    EnhancedRMatrix M;
    M.kind = k;
    switch (k) {
        case Kind::LG:
            M.d = 4;
            M.fwd = build(kLG, 4, 1);
            for (const char* s : {"t0^-1", "-t1", "-t0^-1", "t1"}) M.h.push_back(Scalar::parse(s));
            break;
        case Kind::V1:
            M.d = 4;
            M.fwd = build(kV1, 4, 1);
            for (const char* s : {"-1", "1", "1", "-1"}) M.h.push_back(Scalar::parse(s));
            break;
        case Kind::ADO:
            M.d = 3;
            M.fwd = build(kADO, 3, 0);
            for (const char* s : {"t^2", "w^2*t^2", "w^4*t^2"}) M.h.push_back(Scalar::parse(s));
            break;
    }
    M.inv = inverse_from_cubic(M.fwd, k);
    if (!check_inverse(static_cast<const Rep<Scalar>&>(M)).ok)
        throw std::logic_error("builtin R-matrix inverse check failed for " + kind_name(k));
    return M;
}

}  // namespace

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::LG:
            return "lg";
        case Kind::V1:
            return "v1";
        case Kind::ADO:
            return "ado";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    if (s == "lg") return Kind::LG;
    if (s == "v1") return Kind::V1;
    if (s == "ado") return Kind::ADO;
    throw std::invalid_argument("unknown invariant kind '" + s + "'");
}

const EnhancedRMatrix& builtin_rmatrix(Kind kind) {
    static const EnhancedRMatrix lg = make(Kind::LG);
    static const EnhancedRMatrix v1 = make(Kind::V1);
    static const EnhancedRMatrix ado = make(Kind::ADO);
    switch (kind) {
        case Kind::LG:
            return lg;
        case Kind::V1:
            return v1;
        case Kind::ADO:
            return ado;
    }
    throw std::invalid_argument("kind");
}

Scalar coefficient_for(Kind k, const Scalar& x) { return k == Kind::ADO ? ado_substitute(x) : x; }

Rep<PVal> specialize_rep(const Rep<Scalar>& rep, const SpecPoint& P) {
    auto f = [&](const Scalar& s) { return specialize(s, P); };
    Rep<PVal> out;
    out.d = rep.d;
    out.fwd = map_local<PVal>(rep.fwd, f);
    out.inv = map_local<PVal>(rep.inv, f);
    for (const auto& x : rep.h) out.h.push_back(f(x));
    return out;
}

CheckResult check_braid_relation(const Rep<Scalar>& M) {
    for (auto [a, b] : {std::pair{1, 2}, std::pair{-1, -2}}) {
        LinearRelation<Scalar> rel = {{Word{a, b, a}, Scalar(1)}, {Word{b, a, b}, Scalar(-1)}};
        CheckResult r = check_linear_relation(rel, M, 3);
        if (!r.ok) return r;
    }
    return {};
}

CheckResult check_cubic_minimal_poly(const EnhancedRMatrix& M) {
    Cubic cu = cubic_for(M.kind);
    LinearRelation<Scalar> rel = {{Word{1, 1, 1}, Scalar(1)}, {Word{1, 1}, cu.a}, {Word{1}, cu.b}, {Word{}, cu.c}};
    return check_linear_relation(rel, static_cast<const Rep<Scalar>&>(M), 2);
}

CheckResult check_enhancement(const Rep<Scalar>& M) {
    const int d = M.d;
    for (int c = 0; c < d * d; ++c)
        for (const auto& [r, v] : M.fwd.cols[c])
            if (!(M.h[r / d] * M.h[r % d] == M.h[c / d] * M.h[c % d]))
                return {false, "h(x)h does not commute at column " + std::to_string(c)};
    for (const LocalMatrix<Scalar>* L : {&M.fwd, &M.inv})
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                Scalar s;
                for (int j = 0; j < d; ++j) s += M.h[j] * L->entry(k * d + j, i * d + j);
                if (!(s == Scalar(i == k ? 1 : 0)))
                    return {false, "partial trace entry (" + std::to_string(k) + "," + std::to_string(i) + ")"};
            }
    return {};
}

Scalar trace_h(const Rep<Scalar>& M) {
    Scalar s;
    for (const auto& x : M.h) s += x;
    return s;
}

}  // namespace lgs
