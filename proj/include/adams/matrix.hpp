#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adams/scalar.hpp"

namespace adams {

// Dense matrix over Z_(p). Dimensions may be zero; empty matrices behave as
// the corresponding zero objects.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }
    static Mat zero(int r, int c) { return Mat(r, c); }
    static Mat scalar(int n, const Scalar& s)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = s;
        return m;
    }

    bool is_zero() const
    {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat col(int j) const
    {
        Mat c(rows, 1);
        for (int i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
        return c;
    }

    void set_col(int j, const Mat& c)
    {
        for (int i = 0; i < rows; ++i) at(i, j) = c.at(i, 0);
    }

    Mat transposed() const
    {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const Mat& x, const Mat& y)
    {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

inline Mat operator*(const Mat& x, const Mat& y)
{
    ADAMS_REQUIRE(x.cols == y.rows, "matrix product shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Scalar& ykj = y.at(k, j);
                if (!ykj.is_zero()) z.at(i, j) = z.at(i, j) + xik * ykj;
            }
        }
    return z;
}

inline Mat operator+(const Mat& x, const Mat& y)
{
    ADAMS_REQUIRE(x.rows == y.rows && x.cols == y.cols, "matrix sum shape mismatch");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

inline Mat operator-(const Mat& x, const Mat& y)
{
    ADAMS_REQUIRE(x.rows == y.rows && x.cols == y.cols, "matrix difference shape mismatch");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

inline Mat operator*(const Scalar& s, const Mat& x)
{
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = s * x.a[i];
    return z;
}

inline Mat operator-(const Mat& x) { return Scalar(-1) * x; }

inline Mat hstack(const Mat& x, const Mat& y)
{
    if (x.cols == 0 && x.rows == 0) return y;
    if (y.cols == 0 && y.rows == 0) return x;
    ADAMS_REQUIRE(x.rows == y.rows, "hstack row mismatch");
    Mat z(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
    }
    return z;
}

inline Mat vstack(const Mat& x, const Mat& y)
{
    if (x.cols == 0 && x.rows == 0) return y;
    if (y.cols == 0 && y.rows == 0) return x;
    ADAMS_REQUIRE(x.cols == y.cols, "vstack col mismatch");
    Mat z(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
    return z;
}

// [[a, b], [c, d]] with zero blocks allowed via explicit dimensions.
inline Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d)
{
    ADAMS_REQUIRE(a.rows == b.rows && c.rows == d.rows && a.cols == c.cols && b.cols == d.cols,
                  "block2x2 shape mismatch");
    return vstack(hstack(a, b), hstack(c, d));
}

// Kronecker product; with column-major vec this gives
// vec(P * A * Q) = (Q^T (x) P) * vec(A).
inline Mat kron(const Mat& x, const Mat& y)
{
    Mat z(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            const Scalar& s = x.at(i, j);
            if (s.is_zero()) continue;
            for (int k = 0; k < y.rows; ++k)
                for (int l = 0; l < y.cols; ++l)
                    z.at(i * y.rows + k, j * y.cols + l) = s * y.at(k, l);
        }
    return z;
}

inline Mat vec_of(const Mat& m)  // column-major
{
    Mat v(m.rows * m.cols, 1);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) v.at(j * m.rows + i, 0) = m.at(i, j);
    return v;
}

inline Mat unvec(const Mat& v, int rows, int cols)
{
    ADAMS_REQUIRE(v.cols == 1 && v.rows == rows * cols, "unvec shape mismatch");
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m.at(i, j) = v.at(j * rows + i, 0);
    return m;
}

// Smith normal form over the discrete valuation ring Z_(p):
// U * m * V = D with U, V invertible over Z_(p) and D diagonal with entries
// p^{e_1} | p^{e_2} | ... followed by zeros (units absorbed into U, V).
// Pivots take the entry of minimal p-adic valuation, ties broken by smallest
// (row, col), which makes the output deterministic.
struct Snf {
    Mat U, Uinv, D, V, Vinv;
    int rank = 0;
    std::vector<long long> exps;  // valuations of the nonzero diagonal entries
};

inline Snf snf(const Mat& m, const Int& p)
{
    Snf s;
    Mat A = m;
    const int R = m.rows, C = m.cols;
    s.U = Mat::identity(R);
    s.Uinv = Mat::identity(R);
    s.V = Mat::identity(C);
    s.Vinv = Mat::identity(C);

    auto swap_rows = [&](Mat& M, int r1, int r2) {
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(r1, j), M.at(r2, j));
    };
    auto swap_cols = [&](Mat& M, int c1, int c2) {
        for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, c1), M.at(i, c2));
    };

    int k = 0;
    const int kmax = std::min(R, C);
    while (k < kmax) {
        // locate minimal-valuation pivot in the trailing submatrix
        int pi = -1, pj = -1;
        long long pv = 0;
        for (int i = k; i < R; ++i)
            for (int j = k; j < C; ++j) {
                if (A.at(i, j).is_zero()) continue;
                long long v = valuation(A.at(i, j), p);
                if (pi < 0 || v < pv) {
                    pi = i;
                    pj = j;
                    pv = v;
                }
            }
        if (pi < 0) break;

        if (pi != k) {
            swap_rows(A, k, pi);
            swap_rows(s.U, k, pi);
            swap_cols(s.Uinv, k, pi);
        }
        if (pj != k) {
            swap_cols(A, k, pj);
            swap_cols(s.V, k, pj);
            swap_rows(s.Vinv, k, pj);
        }

        // scale the pivot row so the pivot becomes exactly p^e
        Scalar pe(pow_int(p, static_cast<unsigned long>(pv)));
        Scalar u = div_exact(A.at(k, k), pe, p);
        ADAMS_REQUIRE(is_unit(u, p), "pivot unit extraction failed");
        Scalar uinv = div_exact(Scalar(1), u, p);
        for (int j = 0; j < C; ++j) A.at(k, j) = uinv * A.at(k, j);
        for (int j = 0; j < R; ++j) s.U.at(k, j) = uinv * s.U.at(k, j);
        for (int i = 0; i < R; ++i) s.Uinv.at(i, k) = u * s.Uinv.at(i, k);

        // clear the pivot column; quotients stay p-local because the pivot
        // has minimal valuation in the submatrix
        for (int i = k + 1; i < R; ++i) {
            if (A.at(i, k).is_zero()) continue;
            Scalar f = div_exact(A.at(i, k), pe, p);
            for (int j = 0; j < C; ++j) A.at(i, j) = A.at(i, j) - f * A.at(k, j);
            for (int j = 0; j < R; ++j) s.U.at(i, j) = s.U.at(i, j) - f * s.U.at(k, j);
            for (int r = 0; r < R; ++r) s.Uinv.at(r, k) = s.Uinv.at(r, k) + f * s.Uinv.at(r, i);
        }
        // clear the pivot row
        for (int j = k + 1; j < C; ++j) {
            if (A.at(k, j).is_zero()) continue;
            Scalar g = div_exact(A.at(k, j), pe, p);
            for (int i = 0; i < R; ++i) A.at(i, j) = A.at(i, j) - g * A.at(i, k);
            for (int i = 0; i < C; ++i) s.V.at(i, j) = s.V.at(i, j) - g * s.V.at(i, k);
            for (int c = 0; c < C; ++c) s.Vinv.at(k, c) = s.Vinv.at(k, c) + g * s.Vinv.at(j, c);
        }
        s.exps.push_back(pv);
        ++k;
    }
    s.rank = k;
    s.D = A;
    return s;
}

// Solve A x = b over Z_(p) via a shared SNF; returns std::nullopt when b is
// not in the column span. Free coordinates are set to zero, so solutions are
// deterministic.
struct LinSolver {
    const Int p;
    Snf s;
    explicit LinSolver(const Mat& A, Int prime) : p(std::move(prime)), s(snf(A, p)) {}

    std::optional<Mat> solve(const Mat& b) const
    {
        ADAMS_REQUIRE(b.rows == s.U.cols && b.cols == 1, "solve shape mismatch");
        Mat ub = s.U * b;
        Mat y(s.V.rows, 1);
        for (int i = 0; i < ub.rows; ++i) {
            if (i < s.rank) {
                const Scalar& c = ub.at(i, 0);
                if (c.is_zero()) continue;
                if (valuation(c, p) < s.exps[static_cast<size_t>(i)]) return std::nullopt;
                y.at(i, 0) = div_exact(c, s.D.at(i, i), p);
            }
            else if (!ub.at(i, 0).is_zero()) {
                return std::nullopt;
            }
        }
        return s.V * y;
    }

    std::optional<Mat> solve_matrix(const Mat& B) const
    {
        Mat X(s.V.rows, B.cols);
        for (int j = 0; j < B.cols; ++j) {
            auto x = solve(B.col(j));
            if (!x) return std::nullopt;
            X.set_col(j, *x);
        }
        return X;
    }

    // basis of {x : A x = 0}: the trailing columns of V
    Mat kernel() const
    {
        const int C = s.V.rows;
        Mat K(C, C - s.rank);
        for (int j = s.rank; j < C; ++j)
            for (int i = 0; i < C; ++i) K.at(i, j - s.rank) = s.V.at(i, j);
        return K;
    }
};

// Inverse of a matrix that is invertible over Z_(p) (all elementary divisors
// are units).
inline Mat inverse(const Mat& m, const Int& p)
{
    ADAMS_REQUIRE(m.rows == m.cols, "inverse of non-square matrix");
    Snf s = snf(m, p);
    ADAMS_REQUIRE(s.rank == m.rows, "matrix is singular");
    for (long long e : s.exps) ADAMS_REQUIRE(e == 0, "matrix not invertible over Z_(p)");
    // m = Uinv D Vinv with D = I, so m^{-1} = V U
    return s.V * s.U;
}

}  // namespace adams
