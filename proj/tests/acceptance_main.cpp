// Acceptance suite: one pass/fail line per criterion. Exit 0 iff all
// pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "plumbcalc/plumbcalc.hpp"

using namespace plumbcalc;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define EXPECT(cond, msg)                          \
    do {                                           \
        if (!(cond))                               \
            throw Failure(std::string("check failed: ") + (msg)); \
    } while (0)

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---- criterion 1 & 2: rank-determinant oracle and recursion identity --

std::vector<WeightedGraph> forest_corpus() {
    std::mt19937_64 rng(20513);
    std::vector<WeightedGraph> corpus;
    corpus.reserve(500);
    for (int i = 0; i < 500; ++i)
        corpus.push_back(oracles::random_valid_forest(rng));
    return corpus;
}

std::string criterion1(const std::vector<WeightedGraph>& corpus) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& g : corpus) {
        auto r = hfhat_rank(g);
        EXPECT(r.b1 == 0, "corpus graph has a tight component");
        Int det = abs(homology_summary(intersection_form(g)).det);
        EXPECT(r.rank == det, "hfhat_rank != |det M| on " + g.format());
        EXPECT(r.hfp_red_vanishes, "HF+_red must vanish");
    }
    double dt = seconds_since(t0);
    EXPECT(dt < 60.0, "runtime over 60 s");
    std::ostringstream s;
    s << "500 forests, " << dt << " s";
    return s.str();
}

std::string criterion2(const std::vector<WeightedGraph>& corpus) {
    long long checked = 0;
    for (const auto& g : corpus) {
        Int rank1 = hfhat_rank(g).rank;
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            if (g.degree(i) != 1)
                continue;
            auto [g2, g3] = rank_recursion_triple(g, g.vertex(i).id);
            EXPECT(hfhat_rank(g3).rank == rank1 + hfhat_rank(g2).rank,
                   "rank(G3) != rank(G1) + rank(G2) at leaf " +
                       g.vertex(i).id);
            ++checked;
        }
    }
    return std::to_string(checked) + " leaves";
}

// ---- criterion 3 & 4: d-invariant oracle, coset independence ----------

std::vector<WeightedGraph> small_valid_graphs() {
    std::vector<WeightedGraph> out;
    std::set<std::string> seen;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> all_edges;
        for (std::size_t a = 0; a < static_cast<std::size_t>(n); ++a)
            for (std::size_t b = a + 1; b < static_cast<std::size_t>(n); ++b)
                all_edges.emplace_back(a, b);
        for (unsigned mask = 0; mask < (1u << all_edges.size()); ++mask) {
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            for (std::size_t e = 0; e < all_edges.size(); ++e)
                if (mask & (1u << e))
                    edges.push_back(all_edges[e]);
            if (edges.size() >= static_cast<std::size_t>(n))
                continue;  // a forest on n vertices has < n edges
            std::vector<long long> w(n, 1);
            for (;;) {
                std::vector<Vertex> verts;
                for (int i = 0; i < n; ++i)
                    verts.push_back({"v" + std::to_string(i), w[i]});
                WeightedGraph g(std::move(verts), edges);
                auto r = validate(g);
                if (r.is_forest && r.inequality_ok() &&
                    r.each_component_has_strict_vertex &&
                    seen.insert(canonical_key(g)).second)
                    out.push_back(g);
                int i = 0;
                while (i < n && w[i] == 5)
                    w[i++] = 1;
                if (i == n)
                    break;
                ++w[i];
            }
        }
    }
    return out;
}

std::string criterion3(const std::vector<WeightedGraph>& graphs) {
    long long cosets = 0;
    for (const auto& g : graphs) {
        auto f = intersection_form(g);
        auto table = d_table(g);
        auto oracle = oracles::d_table_by_box_scan(g);
        EXPECT(oracle.size() == table.entries.size(),
               "coset count mismatch on " + g.format());
        std::map<Vec, Rat> by_rep;
        for (const auto& [s, d] : table.entries) {
            EXPECT(oracle.at(s.rep) == d,
                   "branch-and-bound disagrees with the box oracle on " +
                       g.format());
            by_rep[s.rep] = d;
            ++cosets;
        }
        for (const auto& [s, d] : table.entries)
            EXPECT(by_rep.at(conjugate_spinc(f, s).rep) == d,
                   "conjugation symmetry fails on " + g.format());
    }
    // pinned values
    auto t2 = d_table(WeightedGraph::parse("v a 2"));
    std::multiset<Rat> v2;
    for (const auto& [s, d] : t2.entries)
        v2.insert(d);
    EXPECT((v2 == std::multiset<Rat>{Rat(-1, 4), Rat(1, 4)}),
           "weight-2 vertex table");
    auto t1 = d_table(WeightedGraph::parse("v a 1"));
    EXPECT(t1.entries.size() == 1 && t1.entries[0].second == 0,
           "weight-1 vertex table");
    return std::to_string(graphs.size()) + " graphs, " +
           std::to_string(cosets) + " cosets";
}

std::string criterion4(const std::vector<WeightedGraph>& graphs) {
    std::mt19937_64 rng(977);
    std::uniform_int_distribution<long long> shift(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
    int done = 0;
    while (done < 100) {
        const auto& g = graphs[pick(rng)];
        auto f = intersection_form(g);
        auto cosets = enumerate_spinc(f);
        std::uniform_int_distribution<std::size_t> cpick(0, cosets.size() - 1);
        const auto& s = cosets[cpick(rng)];
        Vec x(f.size());
        for (auto& e : x)
            e = shift(rng);
        Vec k = s.rep;
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = 0; j < k.size(); ++j)
                k[i] += 2 * f.m[i][j] * x[j];
        EXPECT(d_from_characteristic(f, k) == d_invariant(f, s),
               "re-representation changed the d-invariant");
        ++done;
    }
    return "100 re-representations";
}

// ---- criterion 5 & 6: Lefschetz identities ----------------------------

SqMat pairing_matrix(const SurfaceBasis& s) {
    SqMat j(s.dim(), std::vector<long long>(s.dim(), 0));
    for (int i = 1; i <= s.genus; ++i) {
        j[s.a_index(i)][s.b_index(i)] = 1;
        j[s.b_index(i)][s.a_index(i)] = -1;
    }
    return j;
}

bool symplectic(const SurfaceBasis& s, const SqMat& a) {
    const std::size_t n = s.dim();
    SqMat j = pairing_matrix(s);
    SqMat at(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            at[k][i] = a[i][k];
    return matrix_product(matrix_product(at, j), a) == j;
}

std::string criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    for (int g = 2; g <= 5; ++g) {
        auto w = e2g_word(g);
        EXPECT(w.twists.size() == static_cast<std::size_t>(4 * (4 * g + 2)),
               "E(2g) word length");
        for (const auto& c : w.twists)
            EXPECT(symplectic(w.surface, twist_action(w.surface, c)),
                   "twist matrix is not symplectic");
        EXPECT(word_action(w) == identity_matrix(w.surface.dim()),
               "E(2g) relation word does not act trivially, g = " +
                   std::to_string(g));
    }
    double dt = seconds_since(t0);
    EXPECT(dt < 5.0, "runtime over 5 s");
    std::ostringstream s;
    s << "g in {2,3,4,5}, " << dt << " s";
    return s.str();
}

std::string criterion6() {
    std::mt19937_64 rng(1297);
    long long moves = 0;
    for (int t = 0; t < 200; ++t) {
        auto w = oracles::random_word(rng, 4, 12);
        SqMat act = word_action(w);
        for (std::size_t i = 1; i < w.twists.size(); ++i) {
            auto r = hurwitz_move(w, i, HurwitzDirection::right);
            auto l = hurwitz_move(w, i, HurwitzDirection::left);
            EXPECT(word_action(r) == act, "right move changed the action");
            EXPECT(word_action(l) == act, "left move changed the action");
            EXPECT(hurwitz_move(r, i, HurwitzDirection::left).twists ==
                       w.twists,
                   "left o right is not the identity");
            ++moves;
        }
    }
    return "200 words, " + std::to_string(moves) + " moves";
}

// ---- criterion 7: capped-surface identities ---------------------------

std::string criterion7() {
    SurfaceBasis s{3};
    std::mt19937_64 rng(31337);
    long long caps = 0;
    for (long long h = 0; h <= 3; ++h)
        for (long long m = 1; m <= 4; ++m) {
            std::vector<CurveClass> boundary;
            CurveClass sum(s.dim(), 0);
            for (long long i = 0; i + 1 < m; ++i) {
                auto c = oracles::random_class(rng, s.dim());
                for (std::size_t k = 0; k < sum.size(); ++k)
                    sum[k] += c[k];
                boundary.push_back(c);
            }
            for (auto& e : sum)
                e = -e;
            boundary.push_back(sum);
            auto cap = cap_subsurface(s, h, boundary);
            EXPECT(cap.self_int == -m, "self_int != -m");
            EXPECT(cap.c1_eval + cap.self_int == 2 - 2 * cap.genus,
                   "constructor identity");
            for (long long g = h + m - 1; g <= h + m + 2; ++g) {
                auto p2 = complement_cap(g, cap);
                EXPECT(g == cap.genus + p2.genus + m - 1, "genus additivity");
                EXPECT(cap_pair_intersection(cap, p2) == m, "P1.P2 != m");
                EXPECT(p2.c1_eval + p2.self_int == 2 - 2 * p2.genus,
                       "complement constructor identity");
                ++caps;
            }
        }
    return std::to_string(caps) + " cap/complement pairs";
}

// ---- criterion 8: torus-knot ranks ------------------------------------

std::string criterion8() {
    for (int g = 2; g <= 20; ++g)
        EXPECT(hfp_rank_zero_surgery(g, g - 1) == 1,
               "rank != 1 at |i| = g - 1, g = " + std::to_string(g));
    for (int g = 1; g <= 50; ++g)
        for (long long i = g; i <= g + 5; ++i) {
            EXPECT(hfp_rank_zero_surgery(g, i) == 0, "rank != 0 above genus");
            EXPECT(hfp_rank_zero_surgery(g, -i) == 0, "rank != 0 above genus");
        }
    for (int g = 1; g <= 50; ++g)
        for (long long i = 1; i <= g; ++i)
            EXPECT(hfp_rank_zero_surgery(g, i) >= 0, "negative rank");
    return "g up to 50";
}

// ---- criterion 9: the twelve table clauses ----------------------------

std::string criterion9() {
    auto m111 = BorromeanLabel::of(1, 1, 1);
    auto m011 = BorromeanLabel::of(0, 1, 1);
    auto m_111 = BorromeanLabel::of(-1, 1, 1);
    auto m_101 = BorromeanLabel::of(-1, 0, 1);

    // 1: M{1,1,1} = Z for k even, k >= 2
    for (long long k : {2, 4, 6, 20, 100})
        EXPECT(hfp_rank(m111, Rat(k)) == 1, "clause 1");
    // 2: M{1,1,1} = 0 otherwise
    for (const Rat& k : {Rat(0), Rat(1), Rat(-2), Rat(3, 2), Rat(7)})
        EXPECT(hfp_rank(m111, k) == 0, "clause 2");
    // 3: M{0,1,1} = Z for k = 1/2 (mod 2), k >= 3/2
    for (const Rat& k : {Rat(5, 2), Rat(9, 2), Rat(13, 2), Rat(41, 2)})
        EXPECT(hfp_rank(m011, k) == 1, "clause 3");
    // 4: M{0,1,1} = 0 otherwise
    for (const Rat& k : {Rat(1, 2), Rat(3, 2), Rat(2), Rat(7, 2), Rat(-3, 2)})
        EXPECT(hfp_rank(m011, k) == 0, "clause 4");
    // 5: M{-1,1,1} = Z + Z at k = 0
    EXPECT(hfp_rank(m_111, Rat(0)) == 2, "clause 5");
    // 6: M{-1,1,1} = Z for k even, k > 0
    for (long long k : {2, 4, 8, 30})
        EXPECT(hfp_rank(m_111, Rat(k)) == 1, "clause 6");
    // 7: M{-1,1,1} = 0 otherwise
    for (const Rat& k : {Rat(-2), Rat(1), Rat(1, 2), Rat(3)})
        EXPECT(hfp_rank(m_111, k) == 0, "clause 7");
    // 8: M{-1,0,1} = Z for k = 1/2 (mod Z), k >= 1/2
    for (const Rat& k : {Rat(1, 2), Rat(3, 2), Rat(5, 2), Rat(21, 2)})
        EXPECT(hfp_rank(m_101, k) == 1, "clause 8");
    // 9: M{-1,0,1} = Z + Z at k = -1/2
    EXPECT(hfp_rank(m_101, Rat(-1, 2)) == 2, "clause 9");
    // 10: M{-1,0,1} = 0 otherwise
    for (const Rat& k : {Rat(-3, 2), Rat(0), Rat(1), Rat(2)})
        EXPECT(hfp_rank(m_101, k) == 0, "clause 10");
    // 11: U action surjective for the first two
    EXPECT(graded_ranks(m111).u_action_surjective(), "clause 11");
    EXPECT(graded_ranks(m011).u_action_surjective(), "clause 11");
    // 12: one-dimensional cokernel for the second two
    EXPECT(!graded_ranks(m_111).u_action_surjective(), "clause 12");
    EXPECT(!graded_ranks(m_101).u_action_surjective(), "clause 12");

    for (int p = -1; p <= 1; ++p)
        for (int q = -1; q <= 1; ++q)
            for (int r = -1; r <= 1; ++r) {
                auto [a, b, c] = orientation_reverse(p, q, r);
                EXPECT((orientation_reverse(a, b, c) ==
                        std::array<int, 3>{p, q, r}),
                       "orientation reversal is not an involution");
            }
    return "12 clauses + involution";
}

// ---- criterion 10: CLI contract ---------------------------------------

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(PLUMBCALC_CLI_PATH) + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw Failure("popen failed");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string data_path(const std::string& name) {
    return std::string(PLUMBCALC_DATA_DIR) + "/" + name;
}

void expect_cli(const std::string& args, int code, const std::string& bytes,
                const char* what) {
    auto r = run_cli(args);
    EXPECT(r.exit_code == code, std::string(what) + ": exit code " +
                                    std::to_string(r.exit_code) + " != " +
                                    std::to_string(code));
    EXPECT(r.out == bytes, std::string(what) + ": output mismatch, got:\n" +
                               r.out);
}

std::string criterion10() {
    expect_cli("validate " + data_path("lens_chain.graph"), 0,
               "vertices\t3\n"
               "edges\t2\n"
               "components\t1\n"
               "is_forest\t1\n"
               "inequality_ok\t1\n"
               "strict_per_component\t1\n"
               "hypotheses\tok\n",
               "validate valid");
    expect_cli("validate " + data_path("cycle.graph"), 2,
               "vertices\t3\n"
               "edges\t3\n"
               "components\t1\n"
               "is_forest\t0\n"
               "inequality_ok\t1\n"
               "strict_per_component\t1\n"
               "hypotheses\tviolated\n",
               "validate cycle");
    expect_cli("validate " + data_path("malformed.graph"), 1, "",
               "validate malformed");
    expect_cli("invariants " + data_path("lens_chain.graph"), 0,
               "h1\t4\n"
               "b1\t0\n"
               "hfhat_rank\t4\n"
               "hfp_red\t0\n"
               "free\t1\n",
               "invariants valid");
    expect_cli("invariants " + data_path("empty.graph"), 0,
               "h1\t1\n"
               "b1\t0\n"
               "hfhat_rank\t1\n"
               "hfp_red\t0\n"
               "free\t1\n",
               "invariants empty");
    expect_cli("dinv " + data_path("vertex2.graph"), 0,
               "spinc=0 d=1/4\nspinc=2 d=-1/4\n", "dinv vertex2");
    expect_cli("dinv --orientation plumbing " + data_path("vertex2.graph"), 0,
               "spinc=0 d=-1/4\nspinc=2 d=1/4\n", "dinv vertex2 plumbing");
    expect_cli("dinv " + data_path("vertex1.graph"), 0, "spinc=1 d=0\n",
               "dinv vertex1");
    expect_cli("dinv " + data_path("chain22.graph"), 0,
               "spinc=0,0 d=1/2\nspinc=0,2 d=-1/6\nspinc=0,4 d=-1/6\n",
               "dinv chain22");
    expect_cli("dinv " + data_path("e8.graph"), 0,
               "spinc=0,0,0,0,0,0,0,0 d=2\n", "dinv e8");
    expect_cli("dinv " + data_path("indefinite.graph"), 2, "",
               "dinv indefinite");
    expect_cli("dinv --budget 2 " + data_path("budget.graph"), 3, "",
               "dinv budget");
    expect_cli("knot 2 1", 0, "1\n", "knot 2 1");
    expect_cli("knot 3 3", 0, "0\n", "knot 3 3");
    expect_cli("knot 2 0", 2, "", "knot torsion case");
    expect_cli("table 1,1,1 2", 0, "1\n", "table");
    expect_cli("table 0,0,0 2", 2, "", "table untabulated");
    return "exit-code matrix + byte-stable outputs";
}

}  // namespace

int main() {
    auto corpus = forest_corpus();
    auto small = small_valid_graphs();
    std::vector<std::pair<std::string, std::function<std::string()>>>
        criteria = {
            {"1. rank-determinant oracle",
             [&] { return criterion1(corpus); }},
            {"2. recursion identity", [&] { return criterion2(corpus); }},
            {"3. d-invariant oracle", [&] { return criterion3(small); }},
            {"4. d-invariant coset independence",
             [&] { return criterion4(small); }},
            {"5. trivial-word identity", [] { return criterion5(); }},
            {"6. Hurwitz invariance", [] { return criterion6(); }},
            {"7. capped-surface identities", [] { return criterion7(); }},
            {"8. torus-knot ranks", [] { return criterion8(); }},
            {"9. surgery rank tables", [] { return criterion9(); }},
            {"10. CLI contract", [] { return criterion10(); }},
        };
    int failures = 0;
    for (auto& [name, fn] : criteria) {
        try {
            std::string detail = fn();
            std::cout << "[PASS] " << name
                      << (detail.empty() ? "" : " (" + detail + ")") << '\n';
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] " << name << ": " << e.what() << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}
