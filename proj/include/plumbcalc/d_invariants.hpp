#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plumbcalc/graph.hpp"
#include "plumbcalc/lattice.hpp"
#include "plumbcalc/matrix.hpp"
#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

inline constexpr unsigned long long kDefaultNodeBudget = 20'000'000ULL;

namespace detail {

inline std::vector<Rat> solve_rational(const Mat& m, const Vec& b) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rat(m[i][j]);
        a[i][n] = Rat(b[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            throw PreconditionError("degenerate form");
        std::swap(a[k], a[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0)
                continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

// LDL^T data for a positive-definite integer form:
// x^T M x = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2
struct SquareDecomposition {
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> u;
};

inline SquareDecomposition decompose_squares(const Mat& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rat(m[i][j]);
    SquareDecomposition dec;
    dec.d.resize(n);
    dec.u.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        dec.d[i] = a[i][i];
        if (dec.d[i] <= 0)
            throw PreconditionError("form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j)
            dec.u[i][j] = a[i][j] / dec.d[i];
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t c = r; c < n; ++c) {
                a[r][c] -= dec.d[i] * dec.u[i][r] * dec.u[i][c];
                a[c][r] = a[r][c];
            }
    }
    return dec;
}

// Exact closest-vector enumeration: minimizes v^T M v over v = x + h,
// x integral. Every pruning bound is an exact rational comparison.
class CosetMinimizer {
public:
    CosetMinimizer(const Mat& m, std::vector<Rat> shift,
                   unsigned long long budget)
        : dec_(decompose_squares(m)),
          h_(std::move(shift)),
          n_(m.size()),
          budget_(budget),
          x_(m.size(), 0) {}

    Rat minimum() {
        if (n_ == 0)
            return Rat(0);
        descend(n_, Rat(0));
        return *best_;
    }

private:
    void descend(std::size_t level, const Rat& partial) {
        if (level == 0) {
            if (!best_ || partial < *best_)
                best_ = partial;
            return;
        }
        const std::size_t i = level - 1;
        Rat center = -h_[i];
        for (std::size_t j = i + 1; j < n_; ++j)
            center -= dec_.u[i][j] * (Rat(x_[j]) + h_[j]);
        const Int start = round_nearest(center);
        scan(i, partial, center, start, 1);
        scan(i, partial, center, start - 1, -1);
    }

    void scan(std::size_t i, const Rat& partial, const Rat& center, Int x,
              int step) {
        for (;; x += step) {
            if (++nodes_ > budget_)
                throw BudgetExceeded(budget_);
            Rat offset = Rat(x) - center;
            Rat term = dec_.d[i] * offset * offset;
            // moving away from the center only increases the term
            if (best_ && partial + term >= *best_)
                return;
            x_[i] = x;
            descend(i, partial + term);
            if (!best_)
                return;  // unreachable: the first leaf sets a bound
        }
    }

    SquareDecomposition dec_;
    std::vector<Rat> h_;
    std::size_t n_;
    unsigned long long budget_;
    unsigned long long nodes_ = 0;
    std::vector<Int> x_;
    std::optional<Rat> best_;
};

}  // namespace detail

// K^2 of a characteristic vector, evaluated in the negative-definite
// form -M: K^2 = -K^T M^{-1} K, an exact rational.
inline Rat char_square(const IntersectionForm& f, const Vec& k) {
    if (!is_characteristic(f.m, k))
        throw PreconditionError("vector is not characteristic");
    if (f.size() > 0 && det_bareiss(f.m) == 0)
        throw PreconditionError("degenerate form");
    auto y = detail::solve_rational(f.m, k);
    Rat s = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
        s += Rat(k[i]) * y[i];
    return -s;
}

// Extremum of (K^2 + |G|)/4 over the coset K0 + 2*M*Z^n. Substituting
// K = 2M(x + h) with h = M^{-1} K0 / 2 turns the search into a
// closest-vector problem for the positive-definite form M, so the
// extremum is a maximum and equals (|G| - 4 min_x (x+h)^T M (x+h))/4.
inline Rat d_from_characteristic(const IntersectionForm& f, const Vec& k0,
                                 unsigned long long budget = kDefaultNodeBudget) {
    if (!is_characteristic(f.m, k0))
        throw PreconditionError("vector is not characteristic");
    if (!is_positive_definite(f))
        throw PreconditionError("form is not positive definite");
    const std::size_t n = f.size();
    if (n == 0)
        return Rat(0);
    auto y = detail::solve_rational(f.m, k0);
    std::vector<Rat> h(n);
    for (std::size_t i = 0; i < n; ++i)
        h[i] = y[i] / 2;
    detail::CosetMinimizer search(f.m, std::move(h), budget);
    return (Rat(n) - 4 * search.minimum()) / 4;
}

inline Rat d_invariant(const IntersectionForm& f, const SpinCClass& s,
                       unsigned long long budget = kDefaultNodeBudget) {
    return d_from_characteristic(f, s.rep, budget);
}

struct DInvariantTable {
    std::vector<std::pair<SpinCClass, Rat>> entries;  // canonical-rep order
    std::size_t graph_size = 0;
};

inline DInvariantTable d_table(const WeightedGraph& g,
                               unsigned long long budget = kDefaultNodeBudget) {
    IntersectionForm f = intersection_form(g);
    if (!is_positive_definite(f))
        throw PreconditionError("form is not positive definite");
    DInvariantTable table;
    table.graph_size = f.size();
    for (const auto& s : enumerate_spinc(f))
        table.entries.emplace_back(s, d_invariant(f, s, budget));
    return table;
}

}  // namespace plumbcalc
