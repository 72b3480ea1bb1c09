#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <starquant/errors.hpp>
#include <starquant/gns.hpp>
#include <starquant/grid.hpp>
#include <starquant/json_io.hpp>
#include <starquant/lagrangian.hpp>
#include <starquant/parse.hpp>
#include <starquant/phase_symbols.hpp>
#include <starquant/printing.hpp>
#include <starquant/weyl_star.hpp>
#include <starquant/wkb.hpp>

using namespace starquant;
using nlohmann::json;

namespace
{

struct common_options {
    unsigned dim = 1;
    std::string envelope = "0";
    bool json_out = false;
    bool pretty = false;
};

void add_common(CLI::App *cmd, common_options &o)
{
    cmd->add_option("--dim", o.dim, "Phase-space half dimension n")->check(CLI::PositiveNumber);
    cmd->add_option("--envelope", o.envelope, "Gaussian envelope rate c for observable arguments");
    auto *j = cmd->add_flag("--json", o.json_out, "JSON output (default)");
    auto *p = cmd->add_flag("--pretty", o.pretty, "Human-readable output");
    j->excludes(p);
}

bool use_color()
{
    const char *env = std::getenv("STARQUANT_COLOR");
    if (env != nullptr && std::string(env) == "0") {
        return false;
    }
    return isatty(STDOUT_FILENO) != 0;
}

std::string heading(const std::string &text)
{
    return use_color() ? "\033[1;36m" + text + "\033[0m" : text;
}

// One labelled block per entry in pretty mode.
using pretty_lines = std::vector<std::pair<std::string, std::string>>;

void emit(const common_options &o, const json &j, const pretty_lines &lines)
{
    if (o.pretty) {
        for (const auto &[label, text] : lines) {
            if (label.empty()) {
                std::cout << text << '\n';
            } else {
                std::cout << heading(label) << ": " << text << '\n';
            }
        }
        return;
    }
    std::cout << j.dump(2) << '\n';
}

gaussian_observable observable_arg(const std::string &text, const common_options &o)
{
    return parse_observable(text, o.dim, parse_rational(o.envelope));
}

action_data action_arg(const std::string &text, unsigned dim)
{
    try {
        return action_data(parse_polynomial(text, dim));
    } catch (const std::invalid_argument &e) {
        throw precondition_error("InvalidAction", e.what());
    }
}

std::string join(const std::vector<int> &v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    return os.str();
}

json error_body(const error &e)
{
    json body = {{"error", e.kind()}, {"message", e.what()}};
    if (const auto *pe = dynamic_cast<const parse_error *>(&e)) {
        body["line"] = pe->line();
        body["column"] = pe->column();
        body["expected"] = pe->expected();
    }
    if (const auto *hj = dynamic_cast<const hamilton_jacobi_violated *>(&e)) {
        body["residual"] = to_json(hj->residual());
        body["residual_text"] = to_text(hj->residual());
    }
    return body;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact Weyl star products, GNS representations and WKB transport"};
    app.require_subcommand(1);
    std::function<int()> action;
    auto bind = [&](CLI::App *cmd, std::function<int()> fn) { cmd->callback([&action, fn] { action = fn; }); };

    // binary observable commands
    common_options o_star, o_comm, o_inner;
    std::string f_star, g_star, f_comm, g_comm, f_inner, g_inner;
    auto *star_cmd = app.add_subcommand("star", "Weyl star product F * G");
    star_cmd->add_option("F", f_star)->required();
    star_cmd->add_option("G", g_star)->required();
    add_common(star_cmd, o_star);
    bind(star_cmd, [&] {
        const auto r = star(observable_arg(f_star, o_star), observable_arg(g_star, o_star));
        emit(o_star, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    auto *comm_cmd = app.add_subcommand("commutator", "Star commutator [F, G]");
    comm_cmd->add_option("F", f_comm)->required();
    comm_cmd->add_option("G", g_comm)->required();
    add_common(comm_cmd, o_comm);
    bind(comm_cmd, [&] {
        const auto r = star_commutator(observable_arg(f_comm, o_comm), observable_arg(g_comm, o_comm));
        emit(o_comm, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    auto *inner_cmd = app.add_subcommand("inner0", "GNS inner product omega0(conj(F) * G)");
    inner_cmd->add_option("F", f_inner)->required();
    inner_cmd->add_option("G", g_inner)->required();
    add_common(inner_cmd, o_inner);
    bind(inner_cmd, [&] {
        const auto r = inner0(observable_arg(f_inner, o_inner), observable_arg(g_inner, o_inner));
        emit(o_inner, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    // unary observable commands
    common_options o_smap, o_omega0, o_ideal0, o_project, o_pi0;
    std::string f_smap, f_omega0, f_ideal0, f_project, f_pi0;
    bool inverse = false;
    auto *smap_cmd = app.add_subcommand("smap", "Weyl-to-standard ordering map S");
    smap_cmd->add_option("F", f_smap)->required();
    smap_cmd->add_flag("--inverse", inverse, "Apply the inverse map");
    add_common(smap_cmd, o_smap);
    bind(smap_cmd, [&] {
        const auto r = s_map(observable_arg(f_smap, o_smap),
                             inverse ? smap_direction::backward : smap_direction::forward);
        emit(o_smap, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    auto *omega0_cmd = app.add_subcommand("omega0", "Zero-section state omega0(F)");
    omega0_cmd->add_option("F", f_omega0)->required();
    add_common(omega0_cmd, o_omega0);
    bind(omega0_cmd, [&] {
        const auto r = omega0(observable_arg(f_omega0, o_omega0));
        emit(o_omega0, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    auto *ideal0_cmd = app.add_subcommand("ideal0", "Membership in the Gel'fand ideal J0");
    ideal0_cmd->add_option("F", f_ideal0)->required();
    add_common(ideal0_cmd, o_ideal0);
    bind(ideal0_cmd, [&] {
        const auto f = observable_arg(f_ideal0, o_ideal0);
        const bool member = gelfand_member0(f);
        json j = {{"member", member}};
        pretty_lines lines{{"member", member ? "yes" : "no"}};
        if (member) {
            json parts = json::array();
            const auto gs = momenta_decompose(f);
            for (std::size_t k = 0; k < gs.size(); ++k) {
                parts.push_back(to_json(gs[k]));
                lines.push_back({"g" + std::to_string(k + 1), to_text(gs[k])});
            }
            j["decomposition"] = parts;
        }
        emit(o_ideal0, j, lines);
        return 0;
    });

    auto *project_cmd = app.add_subcommand("project", "Representative i* S F in H0");
    project_cmd->add_option("F", f_project)->required();
    add_common(project_cmd, o_project);
    bind(project_cmd, [&] {
        const auto r = project_H0(observable_arg(f_project, o_project));
        emit(o_project, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    auto *pi0_cmd = app.add_subcommand("pi0", "Zero-section representation as a differential operator");
    pi0_cmd->add_option("F", f_pi0)->required();
    add_common(pi0_cmd, o_pi0);
    bind(pi0_cmd, [&] {
        const auto r = pi0(observable_arg(f_pi0, o_pi0));
        emit(o_pi0, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    common_options o_weyl;
    int max_degree = 4;
    auto *weyl_cmd = app.add_subcommand("weyl-check", "Compare pi0 on monomials with symmetrised operator words");
    weyl_cmd->add_option("--max-degree", max_degree, "Largest total degree |alpha| + |beta|")->required();
    add_common(weyl_cmd, o_weyl);
    bind(weyl_cmd, [&] {
        if (max_degree > weyl_oracle_max_factors) {
            throw precondition_error("DegreeCapExceeded", "weyl-check supports degrees up to "
                                                              + std::to_string(weyl_oracle_max_factors));
        }
        const unsigned n = o_weyl.dim;
        int checked = 0;
        json mismatches = json::array();
        for (int d = 0; d <= max_degree; ++d) {
            for (const auto &e : multi_indices_of_degree(2 * n, d)) {
                std::vector<int> alpha(e.begin(), e.begin() + n), beta(e.begin() + n, e.end());
                const auto f = phase_polynomial::term(n, 0, alpha, beta, scalar(1));
                ++checked;
                if (!(pi0(gaussian_observable(f)) == weyl_symmetrize_oracle(alpha, beta))) {
                    mismatches.push_back({{"alpha", alpha}, {"beta", beta}});
                }
            }
        }
        const bool pass = mismatches.empty();
        emit(o_weyl, {{"checked", checked}, {"mismatches", mismatches}, {"pass", pass}},
             {{"checked", std::to_string(checked) + " monomials"}, {"pass", pass ? "yes" : "no"}});
        for (const auto &m : mismatches) {
            if (o_weyl.pretty) {
                std::cout << "mismatch alpha=(" << join(m["alpha"]) << ") beta=(" << join(m["beta"]) << ")\n";
            }
        }
        return pass ? 0 : 1;
    });

    // Lagrangian commands
    common_options o_evolve, o_omega1, o_ideal1, o_pi1;
    std::string f_evolve, f_omega1, f_ideal1, f_pi1, s_evolve, s_omega1, s_ideal1, s_pi1, t_evolve = "1";
    auto *evolve_cmd = app.add_subcommand("evolve", "Heisenberg evolution A_t F along pi* S");
    evolve_cmd->add_option("F", f_evolve)->required();
    evolve_cmd->add_option("--t", t_evolve, "Rational time");
    evolve_cmd->add_option("--action", s_evolve, "Action S(q)")->required();
    add_common(evolve_cmd, o_evolve);
    bind(evolve_cmd, [&] {
        const auto r = evolve(observable_arg(f_evolve, o_evolve), parse_rational(t_evolve),
                              action_arg(s_evolve, o_evolve.dim));
        emit(o_evolve, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    auto *omega1_cmd = app.add_subcommand("omega1", "State omega1 = omega0 o A_{-1}");
    omega1_cmd->add_option("F", f_omega1)->required();
    omega1_cmd->add_option("--action", s_omega1, "Action S(q)")->required();
    add_common(omega1_cmd, o_omega1);
    bind(omega1_cmd, [&] {
        const auto r = omega1(observable_arg(f_omega1, o_omega1), action_arg(s_omega1, o_omega1.dim));
        emit(o_omega1, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    auto *ideal1_cmd = app.add_subcommand("ideal1", "Membership in the Gel'fand ideal J1");
    ideal1_cmd->add_option("F", f_ideal1)->required();
    ideal1_cmd->add_option("--action", s_ideal1, "Action S(q)")->required();
    add_common(ideal1_cmd, o_ideal1);
    bind(ideal1_cmd, [&] {
        const bool member = gelfand_member1(observable_arg(f_ideal1, o_ideal1), action_arg(s_ideal1, o_ideal1.dim));
        emit(o_ideal1, {{"member", member}}, {{"member", member ? "yes" : "no"}});
        return 0;
    });

    auto *pi1_cmd = app.add_subcommand("pi1", "Representation on the Lagrangian graph of dS");
    pi1_cmd->add_option("F", f_pi1)->required();
    pi1_cmd->add_option("--action", s_pi1, "Action S(q)")->required();
    add_common(pi1_cmd, o_pi1);
    bind(pi1_cmd, [&] {
        const auto r = pi1(observable_arg(f_pi1, o_pi1), action_arg(s_pi1, o_pi1.dim));
        emit(o_pi1, to_json(r), {{"", to_text(r)}});
        return 0;
    });

    // WKB
    auto *wkb_cmd = app.add_subcommand("wkb", "WKB transport hierarchy and 1-D solver");
    wkb_cmd->require_subcommand(1);

    common_options o_hier;
    std::string ham, s_hier, energy;
    int hier_order = 3;
    auto *hier_cmd = wkb_cmd->add_subcommand("hierarchy", "Operators D_j of the eigenproblem hierarchy");
    hier_cmd->add_option("--ham", ham, "Hamiltonian H(q, p)")->required();
    hier_cmd->add_option("--action", s_hier, "Action S(q)")->required();
    hier_cmd->add_option("--energy", energy, "Energy E")->required();
    hier_cmd->add_option("--order", hier_order, "Highest lambda order")->check(CLI::NonNegativeNumber);
    add_common(hier_cmd, o_hier);
    bind(hier_cmd, [&] {
        const auto h = eigenproblem_hierarchy(parse_polynomial(ham, o_hier.dim), action_arg(s_hier, o_hier.dim),
                                              parse_rational(energy), hier_order);
        pretty_lines lines;
        for (std::size_t j = 0; j < h.orders.size(); ++j) {
            lines.push_back({"D" + std::to_string(j), to_text(h.orders[j])});
        }
        emit(o_hier, to_json(h), lines);
        return 0;
    });

    common_options o_solve;
    std::string sprime_file, sprime_expr, bc = "1";
    std::vector<double> interval;
    std::size_t samples = 256;
    int solve_order = 0;
    double tol = 1e-5;
    auto *solve_cmd = wkb_cmd->add_subcommand("solve1d", "Solve the 1-D transport hierarchy on a grid");
    auto *file_opt = solve_cmd->add_option("--sprime-file", sprime_file, "Two-column table of (q, S'(q))");
    auto *expr_opt = solve_cmd->add_option("--sprime-expr", sprime_expr, "S'(q) as a polynomial");
    file_opt->excludes(expr_opt);
    solve_cmd->add_option("--interval", interval, "Interval endpoints a b")->expected(2)->required();
    solve_cmd->add_option("--samples", samples, "Interior sample count N");
    solve_cmd->add_option("--order", solve_order, "Highest transport order R")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--bc", bc, "phi_0 at the left endpoint");
    solve_cmd->add_option("--tol", tol, "Residual tolerance");
    add_common(solve_cmd, o_solve);
    bind(solve_cmd, [&] {
        if (sprime_file.empty() == sprime_expr.empty()) {
            throw precondition_error("MissingInput", "give exactly one of --sprime-file and --sprime-expr");
        }
        const double a = interval[0], b = interval[1];
        grid_function_1d sprime(a, b, samples);
        if (!sprime_expr.empty()) {
            const auto expr = parse_polynomial(sprime_expr, 1);
            if (!expr.is_base() || expr.min_lambda() < 0 || expr.max_lambda() > 0) {
                throw precondition_error("InvalidAction", "S' must be a lambda-free function of q");
            }
            sprime = grid_function_1d::sample(a, b, samples, default_grid_pad,
                                              [&](double x) { return evaluate_base(expr, x); });
        } else {
            std::vector<double> xs, ys;
            read_two_column(sprime_file, xs, ys);
            sprime = resample_cubic(xs, ys, a, b, samples);
        }
        const auto sol = solve_wkb_1d(sprime, solve_order, parse_rational(bc).get_d());
        const auto report = verify_transport_residual(sprime, sol, tol);
        json orders = json::array();
        pretty_lines lines;
        for (std::size_t r = 0; r < sol.size(); ++r) {
            orders.push_back(to_json(sol[r]));
            std::ostringstream os;
            os << "max |phi| = " << sol[r].interior_max_abs() << ", residual = " << report.residuals[r];
            lines.push_back({"phi" + std::to_string(r), os.str()});
        }
        lines.push_back({"pass", report.pass ? "yes" : "no"});
        emit(o_solve, {{"solution", orders}, {"residual", to_json(report)}}, lines);
        return report.pass ? 0 : 1;
    });

    // phase conjugation
    common_options o_conj;
    std::string h_conj, s_conj, t_conj = "1";
    auto *conj_cmd = app.add_subcommand("phase-conj", "exp(itS/lambda) * H * exp(-itS/lambda)");
    conj_cmd->add_option("H", h_conj)->required();
    conj_cmd->add_option("--action", s_conj, "Action S(q)")->required();
    conj_cmd->add_option("--t", t_conj, "Rational time");
    add_common(conj_cmd, o_conj);
    bind(conj_cmd, [&] {
        const auto H = parse_polynomial(h_conj, o_conj.dim);
        const auto s = action_arg(s_conj, o_conj.dim);
        const auto t = parse_rational(t_conj);
        const gaussian_observable r(conjugate_by_phase(H, s, t));
        const bool equal = r == evolve(gaussian_observable(H), t, s);
        emit(o_conj, {{"result", to_json(r)}, {"matches_evolve", equal}},
             {{"result", to_text(r)}, {"matches evolve", equal ? "yes" : "no"}});
        return equal ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }
    try {
        return action ? action() : 0;
    } catch (const parse_error &e) {
        std::cerr << error_body(e).dump(2) << '\n';
        return 2;
    } catch (const precondition_error &e) {
        std::cerr << error_body(e).dump(2) << '\n';
        return 3;
    } catch (const error &e) {
        std::cerr << error_body(e).dump(2) << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump(2) << '\n';
        return 1;
    }
}
