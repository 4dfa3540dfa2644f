#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "plumbcalc/graph.hpp"
#include "plumbcalc/lattice.hpp"
#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

struct RankResult {
    Int rank = 1;          // rank of HF-hat over the rational-homology part
    bool hfp_red_vanishes = true;
    std::size_t b1 = 0;    // one per component with m(v) = d(v) everywhere
    bool free_abelian = true;
};

// The two companion graphs of the surgery triangle at a leaf:
// g2 = g1 minus the leaf, g3 = g1 with the leaf weight increased by one.
inline std::pair<WeightedGraph, WeightedGraph> rank_recursion_triple(
    const WeightedGraph& g1, std::string_view leaf_id) {
    auto idx = g1.index_of(leaf_id);
    if (!idx)
        throw PreconditionError("no vertex '" + std::string(leaf_id) + "'");
    if (g1.degree(*idx) != 1)
        throw PreconditionError("'" + std::string(leaf_id) + "' is not a leaf");
    WeightedGraph g2 = detail::subgraph_without(g1, *idx, 0);
    WeightedGraph g3 = detail::with_weight(g1, *idx, g1.weight(*idx) + 1);
    return {std::move(g2), std::move(g3)};
}

namespace detail {

// Rank of a connected plumbing tree, by structural recursion on the
// smallest-id leaf:
//   - single vertex of weight m is a lens space, rank m
//   - a weight-1 leaf is blown down
//   - otherwise rank(leaf weight k) = rank(leaf weight k-1) + rank(leaf
//     deleted), the short-exact-sequence identity
// A tree with m(v) = d(v) everywhere recurses down to a single vertex of
// weight 0 and contributes 0 here; callers account for it as b1.
inline Int tree_rank(const WeightedGraph& g,
                     std::map<std::string, Int>& memo) {
    const std::string key = canonical_key(g);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Int result;
    if (g.vertex_count() == 1) {
        result = g.weight(0);
    } else {
        std::size_t leaf = g.vertex_count();
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            if (g.degree(i) != 1)
                continue;
            if (leaf == g.vertex_count() ||
                g.vertex(i).id < g.vertex(leaf).id)
                leaf = i;
        }
        if (g.weight(leaf) == 1) {
            result = tree_rank(blow_down_leaf(g, g.vertex(leaf).id), memo);
        } else {
            result = tree_rank(with_weight(g, leaf, g.weight(leaf) - 1), memo) +
                     tree_rank(subgraph_without(g, leaf, 0), memo);
        }
    }
    memo.emplace(key, result);
    return result;
}

}  // namespace detail

inline RankResult hfhat_rank(const WeightedGraph& g) {
    auto report = validate(g);
    if (!report.hypotheses_ok())
        throw PreconditionError(
            "hypotheses violated: need a forest with m(v) >= d(v)");
    RankResult out;
    std::map<std::string, Int> memo;
    for (const auto& comp : components(g)) {
        bool tight = true;
        for (std::size_t i = 0; i < comp.vertex_count(); ++i)
            if (comp.weight(i) !=
                static_cast<long long>(comp.degree(i))) {
                tight = false;
                break;
            }
        if (tight) {
            // repeated blow-downs give S^2 x S^1; no rank contribution
            ++out.b1;
            continue;
        }
        Int r = detail::tree_rank(comp, memo);
        Int det = abs(det_bareiss(intersection_form(comp).m));
        if (r != det)
            throw std::logic_error(
                "rank recursion disagrees with |det| on a component");
        out.rank *= r;
    }
    return out;
}

}  // namespace plumbcalc
