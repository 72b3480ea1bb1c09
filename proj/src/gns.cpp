#include <starquant/gns.hpp>

#include <algorithm>
#include <numeric>

#include <starquant/errors.hpp>
#include <starquant/weyl_star.hpp>

namespace starquant
{

namespace
{

// int q^e exp(-c q^2) dq / (pi/c)^(1/2) = (e-1)!! / (2c)^(e/2) for even e.
rational gaussian_moment(int e, const rational &c)
{
    if (e % 2) {
        return rational(0);
    }
    rational r(1);
    for (int j = e - 1; j > 0; j -= 2) {
        r *= j;
    }
    for (int j = 0; j < e / 2; ++j) {
        r /= 2 * c;
    }
    return r;
}

} // namespace

integral_value omega0(const gaussian_observable &f)
{
    const auto restricted = f.body().restrict_zero_section();
    if (restricted.is_zero()) {
        return integral_value({}, f.rate(), f.dim());
    }
    if (sgn(f.rate()) == 0) {
        throw precondition_error("NonIntegrable", "observable has no Gaussian envelope along the zero section");
    }
    laurent_series<scalar> series;
    for (const auto &[m, c] : restricted.terms()) {
        rational w(1);
        for (unsigned k = 0; k < f.dim() && sgn(w) != 0; ++k) {
            w *= gaussian_moment(m.q(k), f.rate());
        }
        if (sgn(w) != 0) {
            series.add_term(m.lam, c * scalar(w));
        }
    }
    return integral_value(std::move(series), f.rate(), f.dim());
}

integral_value inner0(const gaussian_observable &f, const gaussian_observable &g)
{
    return omega0(star(f.conjugate(), g));
}

integral_value inner0_factorized(const gaussian_observable &f, const gaussian_observable &g)
{
    const auto left = s_map(f.conjugate(), smap_direction::backward).restrict_zero_section();
    const auto right = s_map(g, smap_direction::forward).restrict_zero_section();
    return omega0(left * right);
}

gaussian_observable project_H0(const gaussian_observable &f)
{
    return s_map(f, smap_direction::forward).restrict_zero_section();
}

bool gelfand_member0(const gaussian_observable &f)
{
    return project_H0(f).is_zero();
}

std::vector<gaussian_observable> momenta_decompose(const gaussian_observable &f)
{
    if (!gelfand_member0(f)) {
        throw precondition_error("NotInIdeal", "observable is not in the Gel'fand ideal J0");
    }
    const unsigned n = f.dim();
    std::vector<gaussian_observable> g(n, gaussian_observable(phase_polynomial(n), f.rate()));
    gaussian_observable residual = f;
    while (!residual.is_zero()) {
        // Highest p-degree term; ties resolved by canonical order.
        const auto &terms = residual.body().terms();
        auto top = std::max_element(terms.begin(), terms.end(), [](const auto &x, const auto &y) {
            return x.first.p_degree() < y.first.p_degree();
        });
        if (top->first.p_degree() == 0) {
            throw std::logic_error("momenta_decompose: base residual left for an ideal member");
        }
        monomial m = top->first;
        unsigned k = 0;
        while (m.p(k) == 0) {
            ++k;
        }
        m.exps[n + k] -= 1;
        phase_polynomial piece(n);
        piece.add_term(m, top->second);
        gaussian_observable gterm(piece, f.rate());
        g[k] += gterm;
        residual -= star(gterm, gaussian_observable(phase_polynomial::p(n, k)));
    }
    return g;
}

schrodinger_operator pi0(const gaussian_observable &f)
{
    const unsigned n = f.dim();
    schrodinger_operator r(n);
    const auto sf = s_map(f, smap_direction::forward);
    if (sf.is_zero()) {
        return r;
    }
    const std::vector<int> none(n, 0);
    for (const auto &gamma : multi_indices_below(p_degree_bounds(sf.body()))) {
        const auto d = sf.derivative(none, gamma).restrict_zero_section();
        if (d.is_zero()) {
            continue;
        }
        const int order = std::accumulate(gamma.begin(), gamma.end(), 0);
        // (lambda/i)^r = (-i)^r lambda^r
        const scalar w = scalar::i_pow(-order) / scalar(multi_factorial(gamma));
        r.add_term(gamma, (d.body() * w).shift_lambda(order), f.rate());
    }
    return r;
}

schrodinger_operator weyl_symmetrize_oracle(const std::vector<int> &alpha, const std::vector<int> &beta)
{
    if (alpha.size() != beta.size() || alpha.empty()) {
        throw mismatch_error("DimensionMismatch", "alpha and beta must have the same positive length");
    }
    const auto n = static_cast<unsigned>(alpha.size());
    const int factors = std::accumulate(alpha.begin(), alpha.end(), 0) + std::accumulate(beta.begin(), beta.end(), 0);
    if (factors > weyl_oracle_max_factors) {
        throw precondition_error("DegreeCapExceeded", "Weyl oracle enumerates at most 8 factors");
    }
    // Letter k < n: multiplication by q^k; letter n + k: -i lambda d/dq^k.
    std::vector<schrodinger_operator> letters;
    for (unsigned k = 0; k < n; ++k) {
        letters.push_back(schrodinger_operator::multiplication(gaussian_observable(phase_polynomial::q(n, k))));
    }
    for (unsigned k = 0; k < n; ++k) {
        std::vector<int> e(n, 0);
        e[k] = 1;
        letters.push_back((-scalar::i() * schrodinger_operator::derivative(n, e)).shift_lambda(1));
    }
    std::vector<unsigned> word;
    for (unsigned k = 0; k < n; ++k) {
        word.insert(word.end(), static_cast<std::size_t>(alpha[k]), k);
    }
    for (unsigned k = 0; k < n; ++k) {
        word.insert(word.end(), static_cast<std::size_t>(beta[k]), n + k);
    }
    std::sort(word.begin(), word.end());

    schrodinger_operator sum(n);
    long count = 0;
    do {
        auto op = schrodinger_operator::identity(n);
        for (unsigned letter : word) {
            op = op_compose(op, letters[letter]);
        }
        sum += op;
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return scalar(rational(1) / count) * sum;
}

} // namespace starquant
