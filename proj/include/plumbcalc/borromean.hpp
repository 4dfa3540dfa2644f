#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

/// One of the four tabulated surgeries M{p,q,r} on the Borromean rings,
/// up to coordinate permutation.
struct BorromeanLabel {
    std::array<int, 3> pqr;  // sorted ascending

    static BorromeanLabel of(int p, int q, int r) {
        std::array<int, 3> v{p, q, r};
        std::sort(v.begin(), v.end());
        static constexpr std::array<std::array<int, 3>, 4> tabulated{{
            {{-1, 0, 1}},
            {{-1, 1, 1}},
            {{0, 1, 1}},
            {{1, 1, 1}},
        }};
        if (std::find(tabulated.begin(), tabulated.end(), v) ==
            tabulated.end())
            throw PreconditionError("untabulated label {" +
                                    std::to_string(p) + "," +
                                    std::to_string(q) + "," +
                                    std::to_string(r) + "}");
        return BorromeanLabel{v};
    }

    bool operator==(const BorromeanLabel&) const = default;
};

inline std::array<int, 3> orientation_reverse(int p, int q, int r) {
    return {-p, -q, -r};
}

namespace detail {

inline bool is_even_integer(const Rat& k) {
    return denominator(k) == 1 && numerator(k) % 2 == 0;
}

// k = 1/2 (mod 2)
inline bool half_mod_two(const Rat& k) {
    Rat t = k - Rat(1, 2);
    return denominator(t) == 1 && numerator(t) % 2 == 0;
}

// k = 1/2 (mod Z)
inline bool half_mod_one(const Rat& k) {
    return denominator(k) == 2;
}

}  // namespace detail

// Graded ranks of HF+ of M{p,q,r} at grading k; fixture data, not a
// computation.
inline int hfp_rank(const BorromeanLabel& label, const Rat& k) {
    const auto& v = label.pqr;
    if (v == std::array<int, 3>{1, 1, 1})
        return detail::is_even_integer(k) && k >= 2 ? 1 : 0;
    if (v == std::array<int, 3>{0, 1, 1})
        return detail::half_mod_two(k) && k >= Rat(3, 2) ? 1 : 0;
    if (v == std::array<int, 3>{-1, 1, 1}) {
        if (k == 0)
            return 2;
        return detail::is_even_integer(k) && k > 0 ? 1 : 0;
    }
    // {-1, 0, 1}
    if (k == Rat(-1, 2))
        return 2;
    return detail::half_mod_one(k) && k >= Rat(1, 2) ? 1 : 0;
}

struct GradedRankFunction {
    BorromeanLabel label;

    int rank(const Rat& k) const { return hfp_rank(label, k); }

    // surjective for M{1,1,1} and M{0,1,1}; one-dimensional cokernel
    // for the other two
    bool u_action_surjective() const {
        return label.pqr == std::array<int, 3>{1, 1, 1} ||
               label.pqr == std::array<int, 3>{0, 1, 1};
    }
};

inline GradedRankFunction graded_ranks(const BorromeanLabel& label) {
    return GradedRankFunction{label};
}

}  // namespace plumbcalc
