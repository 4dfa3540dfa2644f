#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row-major, rectangular

inline std::size_t row_count(const Mat& a) { return a.size(); }
inline std::size_t col_count(const Mat& a) { return a.empty() ? 0 : a[0].size(); }

inline Mat identity(std::size_t n) {
    Mat e(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        e[i][i] = 1;
    return e;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
    Vec y(row_count(a), 0);
    for (std::size_t i = 0; i < row_count(a); ++i)
        for (std::size_t j = 0; j < col_count(a); ++j)
            y[i] += a[i][j] * x[j];
    return y;
}

inline Int dot(const Vec& x, const Vec& y) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] * y[i];
    return s;
}

// Fraction-free Gaussian elimination; intermediate entries stay integral
// and divisions are exact. Row pivoting only, sign tracked.
inline Int det_bareiss(Mat a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Sylvester's criterion on the leading principal minors, evaluated
// fraction-free: after k Bareiss steps without pivoting, a[k][k] is the
// (k+1)-st leading principal minor. A pivot <= 0 decides the answer.
inline bool positive_definite_minors(const Mat& m) {
    Mat a = m;
    const std::size_t n = a.size();
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0)
            return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> min_abs_entry(const Mat& a,
                                                         std::size_t t) {
    std::size_t bi = t, bj = t;
    Int best = 0;
    for (std::size_t i = t; i < row_count(a); ++i)
        for (std::size_t j = t; j < col_count(a); ++j) {
            if (a[i][j] == 0)
                continue;
            Int v = abs(a[i][j]);
            if (best == 0 || v < best) {
                best = v;
                bi = i;
                bj = j;
            }
        }
    return {bi, bj};
}

inline bool submatrix_zero(const Mat& a, std::size_t t) {
    for (std::size_t i = t; i < row_count(a); ++i)
        for (std::size_t j = t; j < col_count(a); ++j)
            if (a[i][j] != 0)
                return false;
    return true;
}

}  // namespace detail

// Invariant factors d_1 | d_2 | ... | d_r (all positive, 1s included).
// Pivots on the minimal absolute value to control entry growth.
inline std::vector<Int> smith_invariant_factors(Mat a) {
    const std::size_t rows = row_count(a), cols = col_count(a);
    std::vector<Int> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        if (detail::submatrix_zero(a, t))
            break;
        for (;;) {
            auto [pi, pj] = detail::min_abs_entry(a, t);
            std::swap(a[t], a[pi]);
            if (pj != t)
                for (std::size_t i = 0; i < rows; ++i)
                    std::swap(a[i][t], a[i][pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
    // enforce the divisibility chain; diag(a,b) and diag(gcd,lcm) present
    // the same group
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                Int g = gcd(diag[i], diag[j]);
                Int l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
    std::sort(diag.begin(), diag.end());
    return diag;
}

// Column-style Hermite normal form of a nonsingular square matrix:
// returns lower-triangular H with positive diagonal and, in each row,
// the entries left of the diagonal reduced into [0, diagonal).
// The columns of H generate the same lattice as the columns of a.
inline Mat hnf_columns(Mat a) {
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        for (;;) {
            std::size_t p = n;
            Int best = 0;
            for (std::size_t j = r; j < n; ++j) {
                if (a[r][j] == 0)
                    continue;
                Int v = abs(a[r][j]);
                if (best == 0 || v < best) {
                    best = v;
                    p = j;
                }
            }
            if (p == n)
                throw PreconditionError("hnf_columns: singular matrix");
            if (p != r)
                for (std::size_t i = 0; i < n; ++i)
                    std::swap(a[i][r], a[i][p]);
            bool clean = true;
            for (std::size_t j = r + 1; j < n; ++j) {
                if (a[r][j] == 0)
                    continue;
                Int q = a[r][j] / a[r][r];
                for (std::size_t i = 0; i < n; ++i)
                    a[i][j] -= q * a[i][r];
                if (a[r][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a[r][r] < 0)
            for (std::size_t i = 0; i < n; ++i)
                a[i][r] = -a[i][r];
        for (std::size_t j = 0; j < r; ++j) {
            Int q = floor_div(a[r][j], a[r][r]);
            if (q != 0)
                for (std::size_t i = 0; i < n; ++i)
                    a[i][j] -= q * a[i][r];
        }
    }
    return a;
}

// Basis of { x : a x = 0 } over the integers, one basis vector per
// column, canonicalized (first nonzero entry positive, columns sorted).
inline std::vector<Vec> kernel_basis(const Mat& a) {
    const std::size_t rows = row_count(a), n = col_count(a);
    Mat w = a;
    Mat u = identity(n);
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < n; ++r) {
        for (;;) {
            std::size_t p = n;
            Int best = 0;
            for (std::size_t j = lead; j < n; ++j) {
                if (w[r][j] == 0)
                    continue;
                Int v = abs(w[r][j]);
                if (best == 0 || v < best) {
                    best = v;
                    p = j;
                }
            }
            if (p == n)
                break;  // row already clear, no pivot here
            if (p != lead) {
                for (std::size_t i = 0; i < rows; ++i)
                    std::swap(w[i][lead], w[i][p]);
                for (std::size_t i = 0; i < n; ++i)
                    std::swap(u[i][lead], u[i][p]);
            }
            bool clean = true;
            for (std::size_t j = lead + 1; j < n; ++j) {
                if (w[r][j] == 0)
                    continue;
                Int q = w[r][j] / w[r][lead];
                for (std::size_t i = 0; i < rows; ++i)
                    w[i][j] -= q * w[i][lead];
                for (std::size_t i = 0; i < n; ++i)
                    u[i][j] -= q * u[i][lead];
                if (w[r][j] != 0)
                    clean = false;
            }
            if (clean) {
                ++lead;
                break;
            }
        }
    }
    std::vector<Vec> basis;
    for (std::size_t j = lead; j < n; ++j) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = u[i][j];
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == 0)
                continue;
            if (v[i] < 0)
                for (auto& e : v)
                    e = -e;
            break;
        }
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

}  // namespace plumbcalc
