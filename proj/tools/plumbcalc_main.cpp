// plumbcalc: invariants of plumbed three-manifolds and Lefschetz
// fibrations over the disk.
//
// Exit codes: 0 success, 1 input syntax error, 2 hypothesis or
// precondition violation, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plumbcalc/plumbcalc.hpp"

namespace {

using namespace plumbcalc;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_kv(const std::string& key, const std::string& value) {
    std::cout << key << '\t' << value << '\n';
}

void print_kv(const std::string& key, const Int& value) {
    print_kv(key, value.str());
}

void print_kv(const std::string& key, std::size_t value) {
    print_kv(key, std::to_string(value));
}

void print_kv(const std::string& key, bool value) {
    print_kv(key, std::string(value ? "1" : "0"));
}

std::string first_violation(const WeightedGraph& g,
                            const ValidationReport& r) {
    if (!r.is_forest)
        return "the graph contains a cycle";
    for (std::size_t i = 0; i < r.slack.size(); ++i)
        if (r.slack[i] < 0)
            return "m(v) < d(v) at vertex '" + g.vertex(i).id + "'";
    return "";
}

void print_validation(const WeightedGraph& g, const ValidationReport& r) {
    print_kv("vertices", g.vertex_count());
    print_kv("edges", g.edge_count());
    print_kv("components", r.components.size());
    print_kv("is_forest", r.is_forest);
    print_kv("inequality_ok", r.inequality_ok());
    print_kv("strict_per_component", r.each_component_has_strict_vertex);
    print_kv("hypotheses", std::string(r.hypotheses_ok() ? "ok" : "violated"));
}

int cmd_validate(const std::string& path) {
    WeightedGraph g = WeightedGraph::parse(read_input(path));
    ValidationReport r = validate(g);
    print_validation(g, r);
    if (!r.hypotheses_ok()) {
        std::cerr << "hypotheses violated: " << first_violation(g, r) << '\n';
        return 2;
    }
    return 0;
}

void print_invariants(const WeightedGraph& g) {
    RankResult rk = hfhat_rank(g);
    if (rk.b1 == 0) {
        HomologySummary h = homology_summary(intersection_form(g));
        print_kv("h1", *h.h1_order);
        print_kv("b1", rk.b1);
        print_kv("hfhat_rank", rk.rank);
    } else {
        print_kv("b1", rk.b1);
    }
    print_kv("hfp_red", std::string("0"));
    print_kv("free", rk.free_abelian);
}

void print_homology(const WeightedGraph& g) {
    HomologySummary h = homology_summary(intersection_form(g));
    print_kv("det", h.det);
    if (!h.torsion_orders.empty()) {
        std::ostringstream torsion;
        for (std::size_t i = 0; i < h.torsion_orders.size(); ++i) {
            if (i)
                torsion << ',';
            torsion << h.torsion_orders[i];
        }
        print_kv("torsion", torsion.str());
    }
}

int cmd_invariants(const std::string& path) {
    WeightedGraph g = WeightedGraph::parse(read_input(path));
    ValidationReport r = validate(g);
    if (!r.hypotheses_ok()) {
        std::cerr << "hypotheses violated: " << first_violation(g, r) << '\n';
        return 2;
    }
    print_invariants(g);
    return 0;
}

void print_d_table(const DInvariantTable& table, bool plumbing_orientation) {
    for (const auto& [spinc, d] : table.entries) {
        Rat value = plumbing_orientation ? -d : d;
        std::cout << "spinc=" << format_vector(spinc.rep) << " d="
                  << format_rational(value) << '\n';
    }
}

int cmd_dinv(const std::string& path, const std::string& orientation,
             unsigned long long budget) {
    WeightedGraph g = WeightedGraph::parse(read_input(path));
    print_d_table(d_table(g, budget), orientation == "plumbing");
    return 0;
}

int cmd_report(const std::string& path, bool quiet, bool with_d_table,
               unsigned long long budget) {
    WeightedGraph g = WeightedGraph::parse(read_input(path));
    ValidationReport r = validate(g);
    print_validation(g, r);
    if (r.hypotheses_ok()) {
        print_homology(g);
        print_invariants(g);
        if (with_d_table) {
            IntersectionForm f = intersection_form(g);
            if (is_positive_definite(f) && f.size() > 0)
                print_d_table(d_table(g, budget), false);
        }
        print_kv("splitting_obstructed", true);
        print_kv("stein_filling_b2plus_zero", true);
        if (!quiet) {
            std::cout << "# hypotheses hold: disjoint union of trees, "
                         "m(v) >= d(v) at every vertex\n"
                      << "# no closed symplectic 4-manifold decomposes along "
                         "this boundary into two pieces both having b2+ > 0\n"
                      << "# every Stein filling of the boundary, with either "
                         "orientation, has b2+ = 0\n";
        }
    } else {
        print_kv("splitting_obstructed", false);
        print_kv("stein_filling_b2plus_zero", false);
        if (!quiet)
            std::cout << "# verdicts suppressed: " << first_violation(g, r)
                      << '\n';
    }
    return 0;
}

void print_matrix(const SqMat& a) {
    for (const auto& row : a) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                std::cout << '\t';
            std::cout << row[j];
        }
        std::cout << '\n';
    }
}

int cmd_lef_act(const std::string& path) {
    print_matrix(word_action(parse_word(read_input(path))));
    return 0;
}

int cmd_lef_hurwitz(const std::string& path, std::size_t index,
                    const std::string& direction) {
    MonodromyWord w = parse_word(read_input(path));
    auto dir = direction == "left" ? HurwitzDirection::left
                                   : HurwitzDirection::right;
    std::cout << format_word(hurwitz_move(w, index, dir));
    return 0;
}

int cmd_lef_h2(const std::string& path) {
    MonodromyWord w = parse_word(read_input(path));
    FibrationHomology h = fibration_homology(w);
    print_kv("h2_rank", h.h2_rank);
    print_kv("fiber_class_index", h.fiber_class_index);
    for (const auto& v : h.kernel_basis) {
        std::ostringstream line;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                line << ',';
            line << v[i];
        }
        print_kv("kernel", line.str());
    }
    return 0;
}

int cmd_lef_cap(long long genus, const std::string& path) {
    MonodromyWord w = parse_word(read_input(path));
    CappedSurface cap = cap_subsurface(w.surface, genus, w.twists);
    print_kv("genus", std::to_string(cap.genus));
    print_kv("boundary_count", std::to_string(cap.boundary_count));
    print_kv("self_int", std::to_string(cap.self_int));
    print_kv("c1_eval", std::to_string(cap.c1_eval));
    auto flags = minimality_audit(w);
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i] == TwistFlag::zero_class_possibly_trivial_or_separating)
            print_kv("zero_class", i + 1);
    return 0;
}

int cmd_lef_screen(long long c1_eval, long long self_int, long long genus) {
    print_kv("verdict",
             std::string(to_string(adjunction_screen(c1_eval, self_int, genus))));
    return 0;
}

int cmd_lef_e2g(int genus) {
    std::cout << format_word(e2g_word(genus));
    return 0;
}

int cmd_knot(int g, long long i) {
    std::cout << hfp_rank_zero_surgery(g, i) << '\n';
    return 0;
}

int cmd_table(const std::string& label, const std::string& grading) {
    std::vector<int> parts;
    std::istringstream in(label);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t pos = 0;
            parts.push_back(std::stoi(tok, &pos));
            if (pos != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::runtime_error("bad label component '" + tok + "'");
        }
    }
    if (parts.size() != 3)
        throw std::runtime_error("label must be 'p,q,r'");
    BorromeanLabel l = BorromeanLabel::of(parts[0], parts[1], parts[2]);
    std::cout << hfp_rank(l, parse_rational(grading)) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of plumbed 3-manifolds and Lefschetz fibrations"};
    app.require_subcommand(1);

    std::string path = "-";
    std::string orientation = "minus-plumbing";
    unsigned long long budget = kDefaultNodeBudget;
    bool quiet = false;
    bool with_d_table = false;
    std::size_t hurwitz_index = 1;
    std::string hurwitz_dir = "right";
    long long cap_genus = 0;
    long long screen_c1 = 0, screen_self = 0, screen_genus = 0;
    int genus = 2;
    long long spinc_level = 1;
    std::string table_label, table_grading;

    auto* validate_cmd = app.add_subcommand("validate",
                                            "check the plumbing hypotheses");
    validate_cmd->add_option("path", path, "graph file, or - for stdin");

    auto* invariants_cmd =
        app.add_subcommand("invariants", "|H1| or b1, HF-hat rank, vanishing");
    invariants_cmd->add_option("path", path);

    auto* dinv_cmd = app.add_subcommand("dinv", "correction terms per Spin^c");
    dinv_cmd->add_option("path", path);
    dinv_cmd->add_option("--orientation", orientation)
        ->check(CLI::IsMember({"minus-plumbing", "plumbing"}));
    dinv_cmd->add_option("--budget", budget, "search node budget");

    auto* report_cmd = app.add_subcommand("report", "full report with verdicts");
    report_cmd->add_option("path", path);
    report_cmd->add_flag("--quiet", quiet, "suppress explanation lines");
    report_cmd->add_flag("--d-table", with_d_table);
    report_cmd->add_option("--budget", budget);

    auto* lef = app.add_subcommand("lefschetz", "monodromy word calculus");
    lef->require_subcommand(1);
    auto* act_cmd = lef->add_subcommand("act", "H1 action of the word");
    act_cmd->add_option("path", path);
    auto* hurwitz_cmd = lef->add_subcommand("hurwitz", "rewrite one pair");
    hurwitz_cmd->add_option("path", path);
    hurwitz_cmd->add_option("index", hurwitz_index)->required();
    hurwitz_cmd->add_option("direction", hurwitz_dir)
        ->check(CLI::IsMember({"left", "right"}));
    auto* h2_cmd = lef->add_subcommand("h2", "H2 of the fibration");
    h2_cmd->add_option("path", path);
    auto* cap_cmd = lef->add_subcommand("cap", "capped-surface invariants");
    cap_cmd->add_option("genus", cap_genus)->required();
    cap_cmd->add_option("path", path);
    auto* screen_cmd = lef->add_subcommand("screen", "adjunction screen");
    screen_cmd->add_option("c1_eval", screen_c1)->required();
    screen_cmd->add_option("self_int", screen_self)->required();
    screen_cmd->add_option("genus", screen_genus)->required();
    auto* e2g_cmd = lef->add_subcommand("e2g", "trivial relation word");
    e2g_cmd->add_option("genus", genus)->required();

    auto* knot_cmd =
        app.add_subcommand("knot", "HF+ rank of torus-knot zero-surgery");
    knot_cmd->add_option("genus", genus)->required();
    knot_cmd->add_option("i", spinc_level)->required();

    auto* table_cmd = app.add_subcommand("table", "Borromean surgery ranks");
    table_cmd->add_option("label", table_label, "p,q,r")->required();
    table_cmd->add_option("k", table_grading, "rational grading")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(path);
        if (*invariants_cmd)
            return cmd_invariants(path);
        if (*dinv_cmd)
            return cmd_dinv(path, orientation, budget);
        if (*report_cmd)
            return cmd_report(path, quiet, with_d_table, budget);
        if (*lef) {
            if (*act_cmd)
                return cmd_lef_act(path);
            if (*hurwitz_cmd)
                return cmd_lef_hurwitz(path, hurwitz_index, hurwitz_dir);
            if (*h2_cmd)
                return cmd_lef_h2(path);
            if (*cap_cmd)
                return cmd_lef_cap(cap_genus, path);
            if (*screen_cmd)
                return cmd_lef_screen(screen_c1, screen_self, screen_genus);
            if (*e2g_cmd)
                return cmd_lef_e2g(genus);
        }
        if (*knot_cmd)
            return cmd_knot(genus, spinc_level);
        if (*table_cmd)
            return cmd_table(table_label, table_grading);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
