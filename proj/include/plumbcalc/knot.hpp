#pragma once

#include <cstdlib>
#include <vector>

#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

/// Symmetrized Alexander polynomial a_0 + sum a_i (T^i + T^-i),
/// normalized so that the top coefficient is +1 and Delta(1) = 1.
struct SymmetricLaurent {
    int genus = 1;
    std::vector<long long> coeffs;  // a_0 .. a_g

    long long at(long long k) const {
        k = std::llabs(k);
        return k <= genus ? coeffs[static_cast<std::size_t>(k)] : 0;
    }

    long long eval_at_one() const {
        long long s = coeffs[0];
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            s += 2 * coeffs[i];
        return s;
    }
};

// Alexander polynomial of the (2, 2g+1) torus knot: alternating signs
// with a_g = +1, i.e. a_i = (-1)^(g-i).
inline SymmetricLaurent torus_knot_alexander(int g) {
    if (g < 1)
        throw PreconditionError("torus_knot_alexander needs genus >= 1");
    SymmetricLaurent p;
    p.genus = g;
    p.coeffs.resize(g + 1);
    for (int i = 0; i <= g; ++i)
        p.coeffs[i] = (g - i) % 2 == 0 ? 1 : -1;
    return p;
}

// Rank of HF+ of zero-surgery on the (2, 2g+1) torus knot in the
// non-torsion Spin^c structure with <c1(t), [F]> = 2i:
// sum_{j>=1} j * a_{|i|+j}, empty above the genus.
inline long long hfp_rank_zero_surgery(int g, long long i) {
    if (g < 1)
        throw PreconditionError("genus must be >= 1");
    if (i == 0)
        throw PreconditionError("torsion Spin^c structure (i = 0) not covered");
    SymmetricLaurent p = torus_knot_alexander(g);
    long long rank = 0;
    for (long long j = 1; std::llabs(i) + j <= g; ++j)
        rank += j * p.at(std::llabs(i) + j);
    return rank;
}

}  // namespace plumbcalc
