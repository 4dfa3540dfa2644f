#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "plumbcalc/graph.hpp"
#include "plumbcalc/matrix.hpp"
#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

/// Intersection form of the plumbing 4-manifold, in declaration order:
/// diagonal = weights, off-diagonal 1 per edge. The negated matrix
/// represents the orientation with negative-definite form.
struct IntersectionForm {
    Mat m;

    std::size_t size() const { return m.size(); }
};

inline IntersectionForm intersection_form(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = g.weight(i);
    for (auto [a, b] : g.edges())
        m[a][b] = m[b][a] = 1;
    return {std::move(m)};
}

struct HomologySummary {
    Int det;
    std::size_t b1 = 0;               // corank
    std::vector<Int> torsion_orders;  // invariant factors > 1
    std::optional<Int> h1_order;      // |det| when b1 == 0
};

inline HomologySummary homology_summary(const IntersectionForm& f) {
    HomologySummary s;
    s.det = det_bareiss(f.m);
    auto factors = smith_invariant_factors(f.m);
    s.b1 = f.size() - factors.size();
    for (const auto& d : factors)
        if (d > 1)
            s.torsion_orders.push_back(d);
    if (s.b1 == 0)
        s.h1_order = abs(s.det);
    return s;
}

inline bool is_positive_definite(const IntersectionForm& f) {
    return positive_definite_minors(f.m);
}

/// A Spin^c structure on the plumbed boundary: a coset of characteristic
/// vectors modulo 2*M*Z^n, held by its canonical representative (the
/// unique coset element in the half-open fundamental box of the Hermite
/// normal form of 2M).
struct SpinCClass {
    Vec rep;

    bool operator==(const SpinCClass&) const = default;
    bool operator<(const SpinCClass& o) const { return rep < o.rep; }
};

inline bool is_characteristic(const Mat& m, const Vec& k) {
    if (k.size() != m.size())
        return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        if ((k[i] - m[i][i]) % 2 != 0)
            return false;
    return true;
}

namespace detail {

inline Mat doubled_form_hnf(const Mat& m) {
    Mat twice = m;
    for (auto& row : twice)
        for (auto& e : row)
            e *= 2;
    return hnf_columns(std::move(twice));
}

// reduce v into the fundamental box of a lower-triangular column basis
inline Vec reduce_into_box(const Mat& h, Vec v) {
    for (std::size_t i = 0; i < h.size(); ++i) {
        Int q = floor_div(v[i], h[i][i]);
        if (q == 0)
            continue;
        for (std::size_t r = i; r < h.size(); ++r)
            v[r] -= q * h[r][i];
    }
    return v;
}

}  // namespace detail

inline Vec canonical_characteristic_rep(const Mat& m, const Vec& k) {
    if (!is_characteristic(m, k))
        throw PreconditionError("vector is not characteristic");
    if (m.empty())
        return {};
    return detail::reduce_into_box(detail::doubled_form_hnf(m), k);
}

inline SpinCClass spinc_from_vector(const IntersectionForm& f, const Vec& k) {
    if (det_bareiss(f.m) == 0)
        throw PreconditionError("degenerate form");
    return SpinCClass{canonical_characteristic_rep(f.m, k)};
}

// Exactly |det M| cosets, in lexicographic order of their canonical
// representatives. All diagonal entries of HNF(2M) are even, so ranging
// each coordinate over the residues of the right parity enumerates each
// coset exactly once.
inline std::vector<SpinCClass> enumerate_spinc(const IntersectionForm& f) {
    const std::size_t n = f.size();
    if (n == 0)
        return {SpinCClass{{}}};
    if (det_bareiss(f.m) == 0)
        throw PreconditionError("degenerate form");
    Mat h = detail::doubled_form_hnf(f.m);
    std::vector<SpinCClass> out;
    Vec cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(SpinCClass{cur});
            return;
        }
        Int parity = ((f.m[i][i] % 2) + 2) % 2;
        for (Int v = parity; v < h[i][i]; v += 2) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline SpinCClass conjugate_spinc(const IntersectionForm& f,
                                  const SpinCClass& s) {
    Vec neg = s.rep;
    for (auto& e : neg)
        e = -e;
    return spinc_from_vector(f, neg);
}

// d(s) = (c1(s)^2 - 2*chi - 3*sign) / 4
inline Rat formal_degree(const Rat& c1_square, long long euler,
                         long long signature) {
    return (c1_square - 2 * Rat(euler) - 3 * Rat(signature)) / 4;
}

inline std::string format_vector(const Vec& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out << ',';
        out << v[i];
    }
    return out.str();
}

}  // namespace plumbcalc
