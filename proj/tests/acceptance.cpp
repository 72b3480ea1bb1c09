// Acceptance gate: one PASS/FAIL line per criterion.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <starquant/errors.hpp>
#include <starquant/gns.hpp>
#include <starquant/lagrangian.hpp>
#include <starquant/phase_symbols.hpp>
#include <starquant/weyl_star.hpp>
#include <starquant/wkb.hpp>

#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace starquant;
using sq_test::obs;
using sq_test::poly;

namespace
{

using cplx = std::complex<double>;

struct outcome {
    bool pass = true;
    std::string detail;
};

// Counts failed checks and keeps the first failure message.
struct tally {
    int checks = 0;
    int failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string &what)
    {
        ++checks;
        if (!ok) {
            if (failures++ == 0) {
                first_failure = what;
            }
        }
    }

    outcome result(const std::string &extra = "") const
    {
        std::ostringstream os;
        os << checks - failures << "/" << checks << " checks";
        if (!extra.empty()) {
            os << ", " << extra;
        }
        if (failures) {
            os << "; first failure: " << first_failure;
        }
        return {failures == 0, os.str()};
    }
};

outcome commutation_and_associativity()
{
    tally t;
    for (unsigned n : {1u, 2u, 3u}) {
        for (unsigned k = 0; k < n; ++k) {
            for (unsigned l = 0; l < n; ++l) {
                const auto c = star_commutator(gaussian_observable(phase_polynomial::q(n, k)),
                                               gaussian_observable(phase_polynomial::p(n, l)));
                const auto expected = k == l ? phase_polynomial::lambda(n) * scalar::i() : phase_polynomial(n);
                t.expect(c == gaussian_observable(expected), "[q^k, p_l] != i lambda delta");
            }
        }
    }
    sq_test::random_source rs(1001);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        const gaussian_observable f(rs.polynomial(n, 4, 3, -1, 1));
        const gaussian_observable g(rs.polynomial(n, 4, 3, -1, 1));
        const gaussian_observable h(rs.polynomial(n, 4, 3, -1, 1));
        t.expect(star(star(f, g), h) == star(f, star(g, h)), "associativity on a random triple");
    }
    return t.result("100 random triples");
}

outcome factorization_and_positivity()
{
    tally t;
    sq_test::random_source rs(1002);
    int positive = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        const long rate = rs.uniform(1, 2);
        const auto f = rs.observable(n, 3, 3, rate, -1, 1);
        const auto g = rs.observable(n, 3, 3, rate, -1, 1);
        t.expect(inner0(f, g) == inner0_factorized(f, g), "omega0(conj f * g) != factorised integral");
        const auto ff = inner0(f, f);
        t.expect(ff.is_zero() || ff.is_positive(), "inner0(f, f) neither zero nor positive");
        positive += ff.is_positive() ? 1 : 0;
    }
    return t.result("60 Gaussian pairs, " + std::to_string(positive) + " positive norms");
}

outcome gelfand_ideal()
{
    tally t;
    for (unsigned n : {1u, 2u, 3u}) {
        for (unsigned k = 0; k < n; ++k) {
            t.expect(gelfand_member0(gaussian_observable(phase_polynomial::p(n, k))), "p_k not in J0");
        }
    }
    sq_test::random_source rs(1003);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        gaussian_observable f(n);
        for (unsigned k = 0; k < n; ++k) {
            f += star(gaussian_observable(rs.polynomial(n, 3, 3, -1, 1)),
                      gaussian_observable(phase_polynomial::p(n, k)));
        }
        t.expect(gelfand_member0(f), "constructed member rejected");
        try {
            const auto gs = momenta_decompose(f);
            gaussian_observable back(n);
            for (unsigned k = 0; k < n; ++k) {
                back += star(gs[k], gaussian_observable(phase_polynomial::p(n, k)));
            }
            t.expect(back == f, "decomposition does not reconstruct");
        } catch (const precondition_error &) {
            t.expect(false, "member failed to decompose");
        }
        const gaussian_observable h(rs.polynomial(n, 3, 3, -1, 1));
        t.expect(gelfand_member0(star(h, f)), "left multiple left J0");
    }
    // non-members: membership false and decomposition refused
    int non_members = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        const gaussian_observable f(rs.polynomial(n, 3, 3, -1, 1));
        bool decomposed = true;
        try {
            momenta_decompose(f);
        } catch (const precondition_error &) {
            decomposed = false;
        }
        t.expect(decomposed == gelfand_member0(f), "membership and decomposition disagree");
        non_members += decomposed ? 0 : 1;
    }
    return t.result("30 constructed members, " + std::to_string(non_members) + " random non-members");
}

outcome weyl_correspondence()
{
    tally t;
    int monomials = 0;
    for (auto [n, max_degree] : {std::pair{1u, 6}, std::pair{2u, 4}}) {
        for (int d = 0; d <= max_degree; ++d) {
            for (const auto &e : multi_indices_of_degree(2 * n, d)) {
                const std::vector<int> alpha(e.begin(), e.begin() + n), beta(e.begin() + n, e.end());
                const gaussian_observable f(phase_polynomial::term(n, 0, alpha, beta, scalar(1)));
                t.expect(pi0(f) == weyl_symmetrize_oracle(alpha, beta), "pi0 differs from the Weyl oracle");
                ++monomials;
            }
        }
    }
    sq_test::random_source rs(1004);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        const gaussian_observable f(rs.polynomial(n, 3, 3, -1, 1));
        const gaussian_observable g(rs.polynomial(n, 3, 3, -1, 1));
        t.expect(pi0(star(f, g)) == op_compose(pi0(f), pi0(g)), "pi0 is not multiplicative");
    }
    return t.result(std::to_string(monomials) + " monomials, 30 random pairs");
}

outcome evolution_suite()
{
    tally t;
    sq_test::random_source rs(1005);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        const action_data s(rs.real_base(n, 3, 3));
        const auto f = rs.observable(n, 3, 3, 0, -1, 1);
        const auto g = rs.observable(n, 3, 3, 0, -1, 1);
        const rational a(rs.uniform(-2, 2), rs.uniform(1, 2)), b(rs.uniform(-2, 2));
        t.expect(evolve(evolve(f, b, s), a, s) == evolve(f, a + b, s), "group law");
        t.expect(evolve(star(f, g), a, s) == star(evolve(f, a, s), evolve(g, a, s)), "automorphism");
        t.expect(evolve(f, a, s).conjugate() == evolve(f.conjugate(), a, s), "reality");
        const auto coeffs = evolve_coefficients(f, s);
        const gaussian_observable S(s.S());
        for (std::size_t m = 0; m < coeffs.size(); ++m) {
            const auto rhs = (star_commutator(S, coeffs[m]) * scalar::i()).shift_lambda(-1);
            const auto lhs = m + 1 < coeffs.size() ? coeffs[m + 1] * scalar(static_cast<long>(m + 1))
                                                   : gaussian_observable(n);
            t.expect(lhs == rhs, "Heisenberg residual in t");
        }
        const auto quad = gaussian_observable(rs.polynomial(n, 2, 4, -1, 1));
        t.expect(evolve(quad, a, s) == fiber_flow(quad, a, s), "quadratic shortcut");
    }
    const action_data cubic(poly("q^3"));
    const auto evolved = evolve(obs("p^3"), rational(1), cubic);
    const auto correction = evolved - fiber_flow(obs("p^3"), rational(1), cubic);
    t.expect(!correction.body().lambda_coefficient(2).is_zero(), "no lambda^2 correction for p^3, S = q^3");
    const auto picard = sq_test::picard_evolution(obs("p^3"), cubic);
    for (long tt : {-1L, 1L, 2L}) {
        t.expect(sq_test::evaluate_at(picard, rational(tt), 1) == evolve(obs("p^3"), rational(tt), cubic),
                 "Picard oracle disagrees");
    }
    return t.result("lambda^2 correction " + to_text(correction.body()));
}

outcome unitarity_and_j1()
{
    tally t;
    sq_test::random_source rs(1006);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = static_cast<unsigned>(rs.uniform(1, 2));
        const action_data s(rs.real_base(n, 3, 3));
        const auto f = rs.observable(n, 3, 3, 1, -1, 1);
        const auto g = rs.observable(n, 3, 3, 1, -1, 1);
        const auto af = evolve(f, rational(1), s);
        const auto ag = evolve(g, rational(1), s);
        t.expect(inner0(f, g) == omega1(star(af.conjugate(), ag), s), "unitarity transfer");
        for (unsigned k = 0; k < n; ++k) {
            const gaussian_observable gen(phase_polynomial::p(n, k) - s.dS()[k]);
            t.expect(gelfand_member1(gen, s), "p_k - dS/dq^k not in J1");
            const gaussian_observable h(rs.polynomial(n, 3, 3, -1, 1));
            t.expect(gelfand_member1(star(h, gen), s), "left multiple of a generator not in J1");
        }
    }
    return t.result("30 random actions");
}

outcome phase_conjugation()
{
    tally t;
    for (const char *h : {"p", "p^2", "p^3"}) {
        for (const char *sx : {"q^2/2", "q^3"}) {
            for (long tt : {-1L, 1L}) {
                const action_data s(poly(sx));
                t.expect(gaussian_observable(conjugate_by_phase(poly(h), s, rational(tt)))
                             == evolve(obs(h), rational(tt), s),
                         std::string("H = ") + h + ", S = " + sx);
            }
        }
    }
    return t.result();
}

outcome hierarchy_reduction()
{
    tally t;
    for (const char *sx : {"q^2/2", "q^3/3 + q", "q^4 - q^2", "2*q^5"}) {
        const action_data s(poly(sx));
        const rational E(1);
        const auto sp = s.dS()[0];
        const auto H = poly("p^2") + phase_polynomial::constant(1, scalar(E)) - sp * sp;
        const auto hier = eigenproblem_hierarchy(H, s, E, 5);
        const auto phys = physical_transport_equation(s, 1);
        schrodinger_operator d1(1), d2(1);
        d1.add_term({0}, sp.dq(0) * scalar(rational(0), rational(-1)), rational(0));
        d1.add_term({1}, sp * scalar(rational(0), rational(-2)), rational(0));
        d2.add_term({2}, poly("-1"), rational(0));
        t.expect(hier.orders[0].is_zero(), "D0 nonzero");
        t.expect(hier.orders[1] == d1, "D1 != -i(S'' + 2 S' d)");
        t.expect(hier.orders[2] == d2, "D2 != -d^2");
        t.expect(hier.orders[1] == scalar(rational(0), rational(-1)) * phys.lhs, "D1 != -i lhs");
        t.expect(hier.orders[2] == scalar::i() * phys.rhs, "D2 != i rhs");
        for (std::size_t j = 3; j < hier.orders.size(); ++j) {
            t.expect(hier.orders[j].is_zero(), "D_j nonzero for j >= 3");
        }
    }
    return t.result();
}

double rel_error(const grid_function_1d &g, const std::function<cplx(double)> &exact)
{
    double err = 0;
    double scale = 0;
    for (std::size_t i = g.interior_begin(); i < g.interior_end(); ++i) {
        err = std::max(err, std::abs(g[i] - exact(g.x(i))));
        scale = std::max(scale, std::abs(exact(g.x(i))));
    }
    return err / scale;
}

outcome amplitude_law(const std::filesystem::path &scratch)
{
    tally t;
    std::ostringstream extra;
    extra.precision(3);
    auto linear = [](double x) { return cplx(x, 0.0); };

    // order zero, S' = q
    const auto sp = grid_function_1d::sample(1.0, 2.0, 512, default_grid_pad, linear);
    const double e_lin = rel_error(solve_transport_1d(sp, nullptr, 1.0),
                                   [](double x) { return cplx(1.0 / std::sqrt(x), 0.0); });
    t.expect(e_lin <= 1e-6, "order-0 error for S' = q");

    // order zero, S' = sqrt(1 + q^2) from a tabulated file
    const auto table = scratch / "sprime_sqrt.txt";
    {
        std::ofstream out(table);
        out.precision(17);
        out << "# q  S'(q)\n";
        for (int i = 0; i <= 3000; ++i) {
            const double x = 0.5 + 0.001 * i;
            out << x << ' ' << std::sqrt(1.0 + x * x) << '\n';
        }
    }
    std::vector<double> xs, ys;
    read_two_column(table.string(), xs, ys);
    const auto sq = resample_cubic(xs, ys, 1.0, 2.0, 512);
    const double c = std::pow(2.0, 0.25);
    const double e_sqrt = rel_error(solve_transport_1d(sq, nullptr, 1.0),
                                    [c](double x) { return cplx(c * std::pow(1.0 + x * x, -0.25), 0.0); });
    t.expect(e_sqrt <= 1e-6, "order-0 error for S' = sqrt(1 + q^2)");
    extra << "order-0 rel. errors " << e_lin << " and " << e_sqrt;

    // convergence of the first correction against its closed form
    auto phi1 = [](double q) { return cplx(0.0, 3.0 / 16.0) * (1.0 - 1.0 / (q * q)) / std::sqrt(q); };
    double prev = 0;
    extra << "; phi1 errors";
    for (std::size_t n : {64, 128, 256}) {
        const auto g = grid_function_1d::sample(1.0, 2.0, n, default_grid_pad, linear);
        const double err = rel_error(solve_wkb_1d(g, 1, 1.0)[1], phi1);
        extra << ' ' << err;
        if (prev > 0) {
            t.expect(prev / err >= 8.0, "error ratio below 8 at N = " + std::to_string(n));
        }
        prev = err;
    }

    // eigen residual for (phi0, phi1)
    const action_data s(poly("q^2/2"));
    const auto hier = eigenproblem_hierarchy(poly("p^2 + 1 - q^2"), s, rational(1), 3);
    const auto report = verify_eigen_residual(hier, solve_wkb_1d(sp, 1, 1.0), 1e-5);
    t.expect(report.pass, "eigen residual above 1e-5");
    extra << "; eigen residuals";
    for (double r : report.residuals) {
        extra << ' ' << r;
    }

    // turning point
    bool raised = false;
    try {
        solve_transport_1d(grid_function_1d::sample(-1.0, 1.0, 64, default_grid_pad, linear), nullptr, 1.0);
    } catch (const precondition_error &e) {
        raised = e.kind() == "TurningPointError";
    }
    t.expect(raised, "TurningPointError not raised");
    return t.result(extra.str());
}

std::string run_capture(const std::string &command)
{
    std::string out;
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    pclose(pipe);
    return out;
}

std::string read_file(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

outcome cli_goldens(const std::string &cli, const std::filesystem::path &golden)
{
    tally t;
    const std::vector<std::pair<std::string, std::string>> cases{
        {"star \"q\" \"p\" --dim 1 --json", "star_q_p.json"},
        {"wkb hierarchy --ham \"p^2+1-q^2\" --action \"q^2/2\" --energy 1 --order 3", "wkb_hierarchy.json"},
        {"wkb solve1d --sprime-expr \"q\" --interval 1 2 --samples 256 --order 0 --bc 1", "wkb_solve1d.json"},
    };
    for (const auto &[args, file] : cases) {
        const auto expected = read_file(golden / file);
        const auto first = run_capture("\"" + cli + "\" " + args);
        const auto second = run_capture("\"" + cli + "\" " + args);
        t.expect(!expected.empty() && first == expected, file + " differs from golden");
        t.expect(first == second, file + " is not deterministic");
    }
    return t.result();
}

} // namespace

int main(int argc, char **argv)
{
    std::string cli = STARQUANT_CLI_PATH;
    std::filesystem::path golden = STARQUANT_GOLDEN_DIR;
    if (argc > 1) {
        cli = argv[1];
    }
    if (argc > 2) {
        golden = argv[2];
    }
    const auto scratch = std::filesystem::temp_directory_path();

    const std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
        {"canonical commutation and associativity", commutation_and_associativity},
        {"GNS factorisation and positivity", factorization_and_positivity},
        {"Gel'fand ideal J0", gelfand_ideal},
        {"Weyl correspondence and representation", weyl_correspondence},
        {"Heisenberg evolution suite", evolution_suite},
        {"omega1 unitarity and J1 generators", unitarity_and_j1},
        {"phase conjugation equals evolution", phase_conjugation},
        {"hierarchy reduces to transport equations", hierarchy_reduction},
        {"WKB amplitude law", [&] { return amplitude_law(scratch); }},
        {"CLI golden determinism", [&] { return cli_goldens(cli, golden); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail << ")\n";
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failed == 0 ? 0 : 1;
}
