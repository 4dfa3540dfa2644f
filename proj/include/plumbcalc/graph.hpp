#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

struct Vertex {
    std::string id;
    long long weight;
};

/// A plumbing diagram: simple undirected graph with integer vertex
/// weights. Immutable after construction; all orderings follow
/// declaration order.
class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(std::vector<Vertex> verts,
                  std::vector<std::pair<std::size_t, std::size_t>> edges)
        : verts_(std::move(verts)) {
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (!index_.emplace(verts_[i].id, i).second)
                throw PreconditionError("duplicate vertex id '" + verts_[i].id +
                                        "'");
        }
        for (auto [a, b] : edges)
            add_edge(a, b);
    }

    // Line format: '# comment', 'v <id> <weight>', 'e <id> <id>'.
    // Vertices must be declared before edges referencing them.
    static WeightedGraph parse(std::string_view text) {
        WeightedGraph g;
        std::istringstream in{std::string(text)};
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream ls(line);
            std::string kind;
            if (!(ls >> kind))
                continue;
            if (kind == "v") {
                std::string id, weight_tok, extra;
                if (!(ls >> id >> weight_tok) || (ls >> extra))
                    throw ParseError(lineno, "expected 'v <id> <weight>'");
                long long w;
                try {
                    std::size_t pos = 0;
                    w = std::stoll(weight_tok, &pos);
                    if (pos != weight_tok.size())
                        throw std::invalid_argument(weight_tok);
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad weight '" + weight_tok + "'");
                }
                if (g.index_.count(id))
                    throw ParseError(lineno, "duplicate vertex id '" + id + "'");
                g.index_.emplace(id, g.verts_.size());
                g.verts_.push_back({id, w});
            } else if (kind == "e") {
                std::string a, b, extra;
                if (!(ls >> a >> b) || (ls >> extra))
                    throw ParseError(lineno, "expected 'e <id> <id>'");
                auto ia = g.index_of(a), ib = g.index_of(b);
                if (!ia)
                    throw ParseError(lineno, "edge to undeclared vertex '" + a + "'");
                if (!ib)
                    throw ParseError(lineno, "edge to undeclared vertex '" + b + "'");
                try {
                    g.add_edge(*ia, *ib);
                } catch (const PreconditionError& e) {
                    throw ParseError(lineno, e.what());
                }
            } else {
                throw ParseError(lineno, "unknown directive '" + kind + "'");
            }
        }
        return g;
    }

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    const Vertex& vertex(std::size_t i) const { return verts_[i]; }
    long long weight(std::size_t i) const { return verts_[i].weight; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
        return edges_;
    }

    std::optional<std::size_t> index_of(std::string_view id) const {
        auto it = index_.find(std::string(id));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    // degree is always derived from the edge list
    std::size_t degree(std::size_t i) const {
        std::size_t d = 0;
        for (auto [a, b] : edges_)
            d += (a == i) + (b == i);
        return d;
    }

    std::vector<std::size_t> neighbors(std::size_t i) const {
        std::vector<std::size_t> out;
        for (auto [a, b] : edges_) {
            if (a == i)
                out.push_back(b);
            else if (b == i)
                out.push_back(a);
        }
        return out;
    }

    bool has_edge(std::size_t a, std::size_t b) const {
        auto e = std::minmax(a, b);
        return std::find(edges_.begin(), edges_.end(),
                         std::make_pair(e.first, e.second)) != edges_.end();
    }

    std::string format() const {
        std::ostringstream out;
        for (const auto& v : verts_)
            out << "v " << v.id << ' ' << v.weight << '\n';
        for (auto [a, b] : edges_)
            out << "e " << verts_[a].id << ' ' << verts_[b].id << '\n';
        return out.str();
    }

private:
    void add_edge(std::size_t a, std::size_t b) {
        if (a >= verts_.size() || b >= verts_.size())
            throw PreconditionError("edge endpoint out of range");
        if (a == b)
            throw PreconditionError("self-loop at '" + verts_[a].id + "'");
        auto e = std::minmax(a, b);
        if (has_edge(e.first, e.second))
            throw PreconditionError("repeated edge '" + verts_[a].id + " " +
                                    verts_[b].id + "'");
        edges_.emplace_back(e.first, e.second);
    }

    std::vector<Vertex> verts_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::map<std::string, std::size_t> index_;
};

struct ValidationReport {
    bool is_forest = true;
    std::vector<long long> slack;  // m(v) - d(v), declaration order
    std::vector<std::vector<std::string>> components;
    bool each_component_has_strict_vertex = true;

    bool inequality_ok() const {
        return std::all_of(slack.begin(), slack.end(),
                           [](long long s) { return s >= 0; });
    }
    bool hypotheses_ok() const { return is_forest && inequality_ok(); }
};

namespace detail {

inline std::vector<std::size_t> component_labels(const WeightedGraph& g,
                                                 std::size_t& count) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges())
        parent[find(a)] = find(b);
    std::map<std::size_t, std::size_t> relabel;
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        auto [it, fresh] = relabel.emplace(r, relabel.size());
        (void)fresh;
        label[i] = it->second;
    }
    count = relabel.size();
    return label;
}

}  // namespace detail

// Never fails: reports whether g satisfies the plumbing hypotheses
// (forest, m(v) >= d(v)) and where they break.
inline ValidationReport validate(const WeightedGraph& g) {
    ValidationReport r;
    const std::size_t n = g.vertex_count();
    std::size_t ncomp = 0;
    auto label = detail::component_labels(g, ncomp);
    // a simple graph is a forest iff |E| = |V| - #components
    r.is_forest = g.edge_count() + ncomp == n;
    r.slack.resize(n);
    r.components.assign(ncomp, {});
    std::vector<bool> strict(ncomp, false);
    for (std::size_t i = 0; i < n; ++i) {
        r.slack[i] = g.weight(i) - static_cast<long long>(g.degree(i));
        r.components[label[i]].push_back(g.vertex(i).id);
        if (r.slack[i] > 0)
            strict[label[i]] = true;
    }
    r.each_component_has_strict_vertex =
        std::all_of(strict.begin(), strict.end(), [](bool b) { return b; });
    return r;
}

namespace detail {

inline WeightedGraph subgraph_without(const WeightedGraph& g, std::size_t drop,
                                      long long neighbor_delta) {
    std::vector<Vertex> verts;
    std::vector<std::size_t> newindex(g.vertex_count());
    auto nbrs = g.neighbors(drop);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (i == drop)
            continue;
        newindex[i] = verts.size();
        Vertex v = g.vertex(i);
        if (neighbor_delta != 0 &&
            std::find(nbrs.begin(), nbrs.end(), i) != nbrs.end())
            v.weight += neighbor_delta;
        verts.push_back(v);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [a, b] : g.edges()) {
        if (a == drop || b == drop)
            continue;
        edges.emplace_back(newindex[a], newindex[b]);
    }
    return WeightedGraph(std::move(verts), std::move(edges));
}

inline WeightedGraph with_weight(const WeightedGraph& g, std::size_t i,
                                 long long w) {
    std::vector<Vertex> verts = g.vertices();
    verts[i].weight = w;
    return WeightedGraph(std::move(verts), g.edges());
}

}  // namespace detail

// Deletes a weight-1 leaf and decreases its neighbor's weight by one.
// The boundary three-manifold is unchanged.
inline WeightedGraph blow_down_leaf(const WeightedGraph& g,
                                    std::string_view leaf_id) {
    auto idx = g.index_of(leaf_id);
    if (!idx)
        throw PreconditionError("no vertex '" + std::string(leaf_id) + "'");
    if (g.degree(*idx) != 1)
        throw PreconditionError("'" + std::string(leaf_id) + "' is not a leaf");
    if (g.weight(*idx) != 1)
        throw PreconditionError("'" + std::string(leaf_id) +
                                "' has weight != 1");
    return detail::subgraph_without(g, *idx, -1);
}

inline std::vector<WeightedGraph> components(const WeightedGraph& g) {
    std::size_t ncomp = 0;
    auto label = detail::component_labels(g, ncomp);
    std::vector<std::vector<Vertex>> verts(ncomp);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(ncomp);
    std::vector<std::size_t> newindex(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        newindex[i] = verts[label[i]].size();
        verts[label[i]].push_back(g.vertex(i));
    }
    for (auto [a, b] : g.edges())
        edges[label[a]].emplace_back(newindex[a], newindex[b]);
    std::vector<WeightedGraph> out;
    out.reserve(ncomp);
    for (std::size_t c = 0; c < ncomp; ++c)
        out.emplace_back(std::move(verts[c]), std::move(edges[c]));
    return out;
}

namespace detail {

// AHU encoding of a weighted rooted tree
inline std::string encode_rooted(const WeightedGraph& g, std::size_t v,
                                 std::size_t parent) {
    std::vector<std::string> child_codes;
    for (std::size_t u : g.neighbors(v))
        if (u != parent)
            child_codes.push_back(encode_rooted(g, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(" + std::to_string(g.weight(v)) + ":";
    for (const auto& c : child_codes)
        code += c;
    code += ")";
    return code;
}

inline std::string encode_tree(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    // peel leaves to find the 1- or 2-vertex center
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i)
        deg[i] = g.degree(i);
    std::vector<bool> removed(n, false);
    std::size_t remaining = n;
    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < n; ++i)
        if (deg[i] <= 1)
            frontier.push_back(i);
    while (remaining > 2) {
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            removed[v] = true;
            --remaining;
            for (std::size_t u : g.neighbors(v))
                if (!removed[u] && --deg[u] == 1)
                    next.push_back(u);
        }
        frontier = std::move(next);
    }
    std::vector<std::size_t> centers;
    for (std::size_t i = 0; i < n; ++i)
        if (!removed[i])
            centers.push_back(i);
    if (centers.size() == 1)
        return encode_rooted(g, centers[0], centers[0]);
    std::string a = encode_rooted(g, centers[0], centers[1]);
    std::string b = encode_rooted(g, centers[1], centers[0]);
    if (b < a)
        std::swap(a, b);
    return "[" + a + b + "]";
}

}  // namespace detail

// Canonical form of a weighted forest, invariant under relabeling;
// used as a memoization key by the rank recursion.
inline std::string canonical_key(const WeightedGraph& g) {
    auto report = validate(g);
    if (!report.is_forest)
        throw PreconditionError("canonical_key: graph is not a forest");
    std::vector<std::string> codes;
    for (const auto& comp : components(g))
        codes.push_back(detail::encode_tree(comp));
    std::sort(codes.begin(), codes.end());
    std::string key;
    for (const auto& c : codes)
        key += c;
    return key;
}

}  // namespace plumbcalc
