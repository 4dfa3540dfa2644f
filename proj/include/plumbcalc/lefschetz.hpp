#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "plumbcalc/matrix.hpp"
#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

/// Standard symplectic basis a_1, b_1, ..., a_g, b_g of H_1 of a closed
/// genus-g surface, with a_i . b_i = +1. Coordinate layout interleaves
/// the pairs, so the pairing matrix is block-diagonal.
struct SurfaceBasis {
    int genus = 1;

    std::size_t dim() const { return 2 * static_cast<std::size_t>(genus); }
    std::size_t a_index(int i) const { return 2 * (i - 1); }      // 1-based
    std::size_t b_index(int i) const { return 2 * (i - 1) + 1; }  // 1-based
};

using CurveClass = std::vector<long long>;
using SqMat = std::vector<std::vector<long long>>;

struct MonodromyWord {
    SurfaceBasis surface;
    std::vector<CurveClass> twists;  // each a right-handed Dehn twist
};

inline long long pairing(const SurfaceBasis& s, const CurveClass& x,
                         const CurveClass& y) {
    long long v = 0;
    for (int i = 0; i < s.genus; ++i) {
        std::size_t a = s.a_index(i + 1), b = s.b_index(i + 1);
        v += x[a] * y[b] - x[b] * y[a];
    }
    return v;
}

inline SqMat identity_matrix(std::size_t n) {
    SqMat e(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        e[i][i] = 1;
    return e;
}

inline SqMat matrix_product(const SqMat& a, const SqMat& b) {
    const std::size_t n = a.size();
    SqMat c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Homological action of the right-handed Dehn twist about c:
// the transvection x -> x + (x.c) c. Symplectic, and (A - I)^2 = 0.
inline SqMat twist_action(const SurfaceBasis& s, const CurveClass& c) {
    const std::size_t n = s.dim();
    SqMat a = identity_matrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        CurveClass ej(n, 0);
        ej[j] = 1;
        long long coeff = pairing(s, ej, c);
        for (std::size_t i = 0; i < n; ++i)
            a[i][j] += coeff * c[i];
    }
    return a;
}

// Product of the twist actions with the first twist applied first, the
// composition order under which Hurwitz moves fix the total action.
inline SqMat word_action(const MonodromyWord& w) {
    SqMat a = identity_matrix(w.surface.dim());
    for (const auto& t : w.twists)
        a = matrix_product(twist_action(w.surface, t), a);
    return a;
}

enum class HurwitzDirection { left, right };

// (..., a, b, ...) -> (..., b, a + (a.b) b, ...) for a right move at
// 1-based index i; the left move is its inverse. The total monodromy
// action is unchanged.
inline MonodromyWord hurwitz_move(const MonodromyWord& w, std::size_t i,
                                  HurwitzDirection dir) {
    if (i < 1 || i >= w.twists.size())
        throw PreconditionError("hurwitz index out of range");
    MonodromyWord out = w;
    CurveClass a = w.twists[i - 1];
    CurveClass b = w.twists[i];
    if (dir == HurwitzDirection::right) {
        long long p = pairing(w.surface, a, b);
        out.twists[i - 1] = b;
        for (std::size_t k = 0; k < a.size(); ++k)
            a[k] += p * b[k];
        out.twists[i] = a;
    } else {
        long long p = pairing(w.surface, b, a);
        for (std::size_t k = 0; k < b.size(); ++k)
            b[k] -= p * a[k];
        out.twists[i - 1] = b;
        out.twists[i] = a;
    }
    return out;
}

/// H_2 of the Lefschetz fibration over the disk with the given vanishing
/// cycles: Z (the fiber class) plus the kernel of Z^n -> H_1(F).
struct FibrationHomology {
    std::size_t h2_rank = 1;
    std::vector<Vec> kernel_basis;
    std::size_t fiber_class_index = 0;
};

inline FibrationHomology fibration_homology(const MonodromyWord& w) {
    const std::size_t rows = w.surface.dim();
    const std::size_t n = w.twists.size();
    Mat m(rows, Vec(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m[i][j] = w.twists[j][i];
    FibrationHomology out;
    out.kernel_basis = kernel_basis(m);
    out.h2_rank = 1 + out.kernel_basis.size();
    return out;
}

/// A subsurface of the fiber with boundary on vanishing cycles, closed
/// off by the Lefschetz thimble disks (each with framing -1).
struct CappedSurface {
    long long genus = 0;
    long long boundary_count = 0;
    long long self_int = 0;
    long long c1_eval = 0;
};

inline CappedSurface cap_subsurface(const SurfaceBasis& s, long long genus,
                                    const std::vector<CurveClass>& boundary) {
    if (boundary.empty())
        throw PreconditionError("need at least one boundary class");
    CurveClass sum(s.dim(), 0);
    for (const auto& c : boundary) {
        if (c.size() != s.dim())
            throw PreconditionError("boundary class has wrong length");
        for (std::size_t k = 0; k < sum.size(); ++k)
            sum[k] += c[k];
    }
    if (std::any_of(sum.begin(), sum.end(), [](long long v) { return v != 0; }))
        throw PreconditionError("boundary classes do not sum to zero");
    const long long m = static_cast<long long>(boundary.size());
    return {genus, m, -m, 2 - 2 * genus + m};
}

// The complementary capped surface P2 = F - P1: genus from the gluing
// identity g(F) = g(P1) + g(P2) + m - 1, same boundary count.
inline CappedSurface complement_cap(long long fiber_genus,
                                    const CappedSurface& p1) {
    long long g2 = fiber_genus - p1.genus - p1.boundary_count + 1;
    if (g2 < 0)
        throw PreconditionError("complementary genus would be negative");
    const long long m = p1.boundary_count;
    return {g2, m, -m, 2 - 2 * g2 + m};
}

// P1 . P2 = m: the pair meets once along each shared thimble disk.
inline long long cap_pair_intersection(const CappedSurface& p1,
                                       const CappedSurface& p2) {
    if (p1.boundary_count != p2.boundary_count)
        throw PreconditionError("boundary counts differ");
    return p1.boundary_count;
}

enum class AdjunctionVerdict {
    canonical_compatible,
    adjunction_violating,
    indeterminate,
};

inline const char* to_string(AdjunctionVerdict v) {
    switch (v) {
        case AdjunctionVerdict::canonical_compatible:
            return "canonical_compatible";
        case AdjunctionVerdict::adjunction_violating:
            return "adjunction_violating";
        default:
            return "indeterminate";
    }
}

// canonical_compatible: <c1,S> - S.S = 2 - 2g; adjunction_violating:
// <c1,S> - S.S <= -2g. The two cases never overlap.
inline AdjunctionVerdict adjunction_screen(long long c1_eval,
                                           long long self_int,
                                           long long genus) {
    long long lhs = c1_eval - self_int;
    if (lhs == 2 - 2 * genus)
        return AdjunctionVerdict::canonical_compatible;
    if (lhs <= -2 * genus)
        return AdjunctionVerdict::adjunction_violating;
    return AdjunctionVerdict::indeterminate;
}

/// Homology classes of the monoid generating system: the Humphries
/// curves alpha_1..alpha_g, beta_1..beta_g, the extra curves
/// alpha_{g+1}, delta, epsilon. The curves
///   alpha_1, beta_1, alpha_2, beta_2, ..., alpha_g, beta_g, epsilon
/// form a chain (consecutive curves meet once, all other pairs are
/// disjoint), and the classes satisfy the relations
///   alpha_1 + alpha_2 + delta = 0
///   epsilon + alpha_{g+1} + alpha_1 = 0
///   alpha_2 + ... + alpha_{g+1} = 0.
/// Both constraints together pin the classes below; the chain structure
/// is what makes the relation word of e2g_word trivial.
struct HumphriesSystem {
    SurfaceBasis surface;
    std::vector<CurveClass> alpha;  // alpha[0] unused; indices 1..g+1
    std::vector<CurveClass> beta;   // beta[0] unused; indices 1..g
    CurveClass delta;
    CurveClass epsilon;
};

inline HumphriesSystem humphries_system(int g) {
    if (g < 2)
        throw PreconditionError("humphries_system needs genus >= 2");
    SurfaceBasis s{g};
    const std::size_t n = s.dim();
    HumphriesSystem h;
    h.surface = s;
    h.alpha.assign(g + 2, CurveClass(n, 0));
    h.beta.assign(g + 1, CurveClass(n, 0));
    h.alpha[1][s.a_index(1)] = 1;  // a_1
    for (int i = 2; i <= g; ++i) {
        h.alpha[i][s.a_index(i - 1)] = 1;  // a_{i-1} - a_i
        h.alpha[i][s.a_index(i)] = -1;
    }
    for (int i = 1; i <= g; ++i)
        h.beta[i][s.b_index(i)] = 1;  // b_i
    // alpha_{g+1} = -(alpha_2 + ... + alpha_g) = a_g - a_1
    for (int i = 2; i <= g; ++i)
        for (std::size_t k = 0; k < n; ++k)
            h.alpha[g + 1][k] -= h.alpha[i][k];
    h.delta = CurveClass(n, 0);
    h.epsilon = CurveClass(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        h.delta[k] = -h.alpha[1][k] - h.alpha[2][k];          // a_2 - 2 a_1
        h.epsilon[k] = -h.alpha[g + 1][k] - h.alpha[1][k];    // -a_g
    }
    return h;
}

// ((prod_i D_{alpha_i} D_{beta_i}) D_epsilon^2
//  (prod_i D_{beta_{g-i+1}} D_{alpha_{g-i+1}}))^4 -- trivial in the
// mapping class group, so its homological action must be the identity.
inline MonodromyWord e2g_word(int g) {
    HumphriesSystem h = humphries_system(g);
    MonodromyWord w;
    w.surface = h.surface;
    std::vector<CurveClass> block;
    for (int i = 1; i <= g; ++i) {
        block.push_back(h.alpha[i]);
        block.push_back(h.beta[i]);
    }
    block.push_back(h.epsilon);
    block.push_back(h.epsilon);
    for (int i = g; i >= 1; --i) {
        block.push_back(h.beta[i]);
        block.push_back(h.alpha[i]);
    }
    for (int rep = 0; rep < 4; ++rep)
        w.twists.insert(w.twists.end(), block.begin(), block.end());
    return w;
}

enum class TwistFlag {
    zero_class_possibly_trivial_or_separating,
    nonzero_class,
};

// Homology cannot tell an essential separating curve from a trivial
// one, so zero classes are flagged rather than rejected.
inline std::vector<TwistFlag> minimality_audit(const MonodromyWord& w) {
    std::vector<TwistFlag> flags;
    flags.reserve(w.twists.size());
    for (const auto& t : w.twists) {
        bool zero = std::all_of(t.begin(), t.end(),
                                [](long long v) { return v == 0; });
        flags.push_back(zero
                            ? TwistFlag::zero_class_possibly_trivial_or_separating
                            : TwistFlag::nonzero_class);
    }
    return flags;
}

// Word file format: 'g <genus>' header, then per twist either
// 't <2g integers>' or a named generator token from
// {A1..A(g+1), B1..Bg, D, E}. '#' starts a comment.
inline MonodromyWord parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_genus = false;
    MonodromyWord w;
    HumphriesSystem hum;
    bool have_hum = false;
    auto require_humphries = [&](int ln) -> const HumphriesSystem& {
        if (!have_hum) {
            if (w.surface.genus < 2)
                throw ParseError(ln, "named generators need genus >= 2");
            hum = humphries_system(w.surface.genus);
            have_hum = true;
        }
        return hum;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (!have_genus) {
            if (tok != "g")
                throw ParseError(lineno, "expected 'g <genus>' header");
            int g;
            if (!(ls >> g) || g < 1)
                throw ParseError(lineno, "bad genus");
            w.surface.genus = g;
            have_genus = true;
            continue;
        }
        if (tok == "t") {
            CurveClass c(w.surface.dim());
            for (auto& e : c)
                if (!(ls >> e))
                    throw ParseError(lineno, "expected " +
                                                 std::to_string(w.surface.dim()) +
                                                 " integers after 't'");
            long long extra;
            if (ls >> extra)
                throw ParseError(lineno, "too many coordinates");
            w.twists.push_back(std::move(c));
        } else if (tok == "D") {
            w.twists.push_back(require_humphries(lineno).delta);
        } else if (tok == "E") {
            w.twists.push_back(require_humphries(lineno).epsilon);
        } else if (tok.size() >= 2 && (tok[0] == 'A' || tok[0] == 'B')) {
            int k;
            try {
                std::size_t pos = 0;
                k = std::stoi(tok.substr(1), &pos);
                if (pos + 1 != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(lineno, "unknown token '" + tok + "'");
            }
            const auto& sys = require_humphries(lineno);
            int g = w.surface.genus;
            if (tok[0] == 'A' && k >= 1 && k <= g + 1)
                w.twists.push_back(sys.alpha[k]);
            else if (tok[0] == 'B' && k >= 1 && k <= g)
                w.twists.push_back(sys.beta[k]);
            else
                throw ParseError(lineno, "generator index out of range: '" +
                                             tok + "'");
        } else {
            throw ParseError(lineno, "unknown token '" + tok + "'");
        }
    }
    if (!have_genus)
        throw ParseError(lineno, "missing 'g <genus>' header");
    return w;
}

inline std::string format_word(const MonodromyWord& w) {
    std::ostringstream out;
    out << "g " << w.surface.genus << '\n';
    for (const auto& t : w.twists) {
        out << 't';
        for (long long e : t)
            out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

}  // namespace plumbcalc
