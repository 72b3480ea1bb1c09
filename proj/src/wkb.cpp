#include <starquant/wkb.hpp>

#include <algorithm>
#include <cmath>

#include <starquant/gns.hpp>
#include <starquant/kernels.hpp>

namespace starquant
{

phase_polynomial hj_residual(const phase_polynomial &H, const action_data &s, const rational &E)
{
    if (H.dim() != s.dim()) {
        throw mismatch_error("DimensionMismatch", "Hamiltonian and action dimensions differ");
    }
    return H.substitute_momenta(s.dS()).restrict_zero_section() - phase_polynomial::constant(H.dim(), scalar(E));
}

transport_hierarchy eigenproblem_hierarchy(const phase_polynomial &H, const action_data &s, const rational &E,
                                           int max_order)
{
    auto residual = hj_residual(H, s, E);
    if (!residual.is_zero()) {
        throw hamilton_jacobi_violated(std::move(residual));
    }
    const unsigned n = H.dim();
    auto P = pi0(evolve(gaussian_observable(H), rational(-1), s));
    P -= scalar(E) * schrodinger_operator::identity(n);
    if (P.min_lambda() < 0) {
        throw precondition_error("NegativeLambdaOrder", "Hamiltonian produces negative lambda orders");
    }
    transport_hierarchy h{{}, H, s, E};
    for (int j = 0; j <= max_order; ++j) {
        h.orders.push_back(P.lambda_coefficient(j));
    }
    return h;
}

transport_equation physical_transport_equation(const action_data &s, int r)
{
    const unsigned n = s.dim();
    transport_equation eq{schrodinger_operator(n), schrodinger_operator(n), r == 0};
    phase_polynomial lap(n);
    for (unsigned k = 0; k < n; ++k) {
        lap += s.dS()[k].dq(k);
    }
    eq.lhs.add_term(std::vector<int>(n, 0), lap, rational(0));
    for (unsigned k = 0; k < n; ++k) {
        std::vector<int> e(n, 0);
        e[k] = 1;
        eq.lhs.add_term(e, s.dS()[k] * scalar(2), rational(0));
        e[k] = 2;
        eq.rhs.add_term(e, phase_polynomial::constant(n, scalar::i()), rational(0));
    }
    return eq;
}

namespace
{

// Cumulative integral from sample `anchor`: composite Simpson on pairs, a
// fourth-order single-interval rule to reach the odd offsets.
std::vector<std::complex<double>> cumulative_integral(const std::vector<std::complex<double>> &f, double h,
                                                      std::size_t anchor)
{
    const std::size_t n = f.size();
    auto interval = [&](std::size_t i) -> std::complex<double> {
        // integral over [x_i, x_{i+1}]
        if (i >= 1 && i + 2 < n) {
            return h / 24.0 * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
        }
        if (i == 0) {
            return h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
        }
        return h / 24.0 * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
    };
    auto simpson = [&](std::size_t i) { return h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]); };

    std::vector<std::complex<double>> out(n, 0.0);
    for (std::size_t j = anchor; j + 1 < n; j += 2) {
        out[j + 1] = out[j] + interval(j);
        if (j + 2 < n) {
            out[j + 2] = out[j] + simpson(j);
        }
    }
    for (std::size_t j = anchor; j >= 1; j -= 2) {
        out[j - 1] = out[j] - interval(j - 1);
        if (j >= 2) {
            out[j - 2] = out[j] - simpson(j - 2);
        } else {
            break;
        }
    }
    return out;
}

} // namespace

grid_function_1d solve_transport_1d(const grid_function_1d &sprime, const grid_function_1d *phi_prev,
                                    std::complex<double> boundary)
{
    const std::size_t size = sprime.size();
    std::vector<std::complex<double>> w(size);
    for (std::size_t i = 0; i < size; ++i) {
        const double v = sprime[i].real();
        if (!(v > 0.0)) {
            throw precondition_error("TurningPointError", "S' <= 0 at q = " + std::to_string(sprime.x(i))
                                                              + " (no turning points allowed)");
        }
        w[i] = 1.0 / std::sqrt(v);
    }
    const std::size_t anchor = sprime.interior_begin();
    const std::complex<double> c = boundary / w[anchor];
    grid_function_1d phi(sprime.a(), sprime.b(), sprime.n(), sprime.pad());
    if (phi_prev == nullptr) {
        for (std::size_t i = 0; i < size; ++i) {
            phi[i] = c * w[i];
        }
        return phi;
    }
    if (!phi_prev->same_grid(sprime)) {
        throw std::invalid_argument("previous order lives on a different grid");
    }
    const auto d2 = phi_prev->derivative(2);
    std::vector<std::complex<double>> integrand(size);
    for (std::size_t i = 0; i < size; ++i) {
        integrand[i] = w[i] * d2[i];
    }
    const auto integral = cumulative_integral(integrand, sprime.h(), anchor);
    const std::complex<double> half_i(0.0, 0.5);
    for (std::size_t i = 0; i < size; ++i) {
        phi[i] = w[i] * (c + half_i * integral[i]);
    }
    return phi;
}

wkb_solution solve_wkb_1d(const grid_function_1d &sprime, int max_order, std::complex<double> boundary,
                          std::complex<double> higher_boundary)
{
    wkb_solution sol;
    sol.push_back(solve_transport_1d(sprime, nullptr, boundary));
    for (int r = 1; r <= max_order; ++r) {
        sol.push_back(solve_transport_1d(sprime, &sol.back(), higher_boundary));
    }
    return sol;
}

grid_function_1d apply_on_grid(const schrodinger_operator &op, const grid_function_1d &phi)
{
    if (op.dim() != 1) {
        throw std::invalid_argument("grid application needs a one-dimensional operator");
    }
    grid_function_1d out(phi.a(), phi.b(), phi.n(), phi.pad());
    const double rate = op.rate().get_d();
    for (const auto &[gamma, coeff] : op.terms()) {
        const auto d = phi.derivative(static_cast<unsigned>(gamma[0]));
        for (std::size_t i = 0; i < out.size(); ++i) {
            const double x = phi.x(i);
            out[i] += evaluate_base(coeff, x) * std::exp(-rate * x * x) * d[i];
        }
    }
    return out;
}

namespace
{

residual_report finish(std::vector<double> residuals, double tol)
{
    residual_report rep{std::move(residuals), tol, true};
    rep.pass = std::all_of(rep.residuals.begin(), rep.residuals.end(), [tol](double r) { return r <= tol; });
    return rep;
}

} // namespace

residual_report verify_eigen_residual(const transport_hierarchy &hier, const wkb_solution &sol, double tol)
{
    if (sol.empty()) {
        return finish({}, tol);
    }
    for (const auto &g : sol) {
        if (!g.same_grid(sol.front())) {
            throw std::invalid_argument("WKB solution orders live on different grids");
        }
    }
    const int R = static_cast<int>(sol.size()) - 1;
    std::vector<double> residuals;
    for (int r = 0; r <= R; ++r) {
        const int m = r + 1;
        grid_function_1d acc(sol[0].a(), sol[0].b(), sol[0].n(), sol[0].pad());
        for (int j = 0; j <= m && j < static_cast<int>(hier.orders.size()); ++j) {
            const int idx = m - j;
            if (idx < 0 || idx > R || hier.orders[static_cast<std::size_t>(j)].is_zero()) {
                continue;
            }
            const auto term = apply_on_grid(hier.orders[static_cast<std::size_t>(j)], sol[static_cast<std::size_t>(idx)]);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] += term[i];
            }
        }
        residuals.push_back(acc.interior_max_abs());
    }
    return finish(std::move(residuals), tol);
}

residual_report verify_transport_residual(const grid_function_1d &sprime, const wkb_solution &sol, double tol)
{
    const auto s2 = sprime.derivative(1);
    std::vector<double> residuals;
    for (std::size_t r = 0; r < sol.size(); ++r) {
        const auto d1 = sol[r].derivative(1);
        grid_function_1d res(sprime.a(), sprime.b(), sprime.n(), sprime.pad());
        for (std::size_t i = 0; i < res.size(); ++i) {
            res[i] = s2[i] * sol[r][i] + 2.0 * sprime[i] * d1[i];
        }
        if (r > 0) {
            const auto d2 = sol[r - 1].derivative(2);
            for (std::size_t i = 0; i < res.size(); ++i) {
                res[i] -= std::complex<double>(0.0, 1.0) * d2[i];
            }
        }
        residuals.push_back(res.interior_max_abs());
    }
    return finish(std::move(residuals), tol);
}

} // namespace starquant
