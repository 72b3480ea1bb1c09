#include <starquant/phase_symbols.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

#include <starquant/errors.hpp>
#include <starquant/weyl_star.hpp>

namespace starquant
{

phase_symbol phase_symbol::from_polynomial(const action_data &s, const phase_polynomial &f)
{
    phase_symbol r(s);
    r.add_term(rational(0), f);
    return r;
}

phase_symbol phase_symbol::pure_phase(const action_data &s, const rational &tau)
{
    phase_symbol r(s);
    r.add_term(tau, phase_polynomial::constant(s.dim(), scalar(1)));
    return r;
}

void phase_symbol::add_term(const rational &tau, const phase_polynomial &amplitude)
{
    if (amplitude.dim() != m_action.dim()) {
        throw mismatch_error("DimensionMismatch", "amplitude and action dimensions differ");
    }
    if (amplitude.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(tau, amplitude);
    if (!inserted) {
        it->second += amplitude;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

int phase_symbol::min_lambda() const
{
    int lo = std::numeric_limits<int>::max();
    for (const auto &[tau, a] : m_terms) {
        lo = std::min(lo, a.min_lambda());
    }
    return m_terms.empty() ? 0 : lo;
}

namespace
{

// d/dq^k acting on a * exp(i tau S / lambda), returned without the phase.
phase_polynomial twisted_dq(const phase_polynomial &a, unsigned k, const rational &tau, const action_data &s)
{
    phase_polynomial r = a.dq(k);
    if (sgn(tau) != 0) {
        r += (s.dS()[k] * a * scalar(rational(0), tau)).shift_lambda(-1);
    }
    return r;
}

phase_polynomial twisted_derivative(const phase_polynomial &a, const std::vector<int> &q_orders,
                                    const std::vector<int> &p_orders, const rational &tau, const action_data &s)
{
    const std::vector<int> none(a.dim(), 0);
    phase_polynomial r = a.derivative(none, p_orders);
    for (unsigned k = 0; k < a.dim(); ++k) {
        for (int j = 0; j < q_orders[k] && !r.is_zero(); ++j) {
            r = twisted_dq(r, k, tau, s);
        }
    }
    return r;
}

} // namespace

phase_symbol phase_star(const phase_symbol &f, const phase_symbol &g)
{
    if (!(f.action() == g.action())) {
        throw mismatch_error("ActionMismatch", "phase symbols carry different actions");
    }
    const auto &s = f.action();
    phase_symbol out(s);
    for (const auto &[tau, a] : f.terms()) {
        for (const auto &[sigma, b] : g.terms()) {
            const auto alphas = multi_indices_below(p_degree_bounds(b));
            const auto cs = multi_indices_below(p_degree_bounds(a));
            phase_polynomial acc(s.dim());
            for (const auto &alpha : alphas) {
                for (const auto &c : cs) {
                    const auto fa = twisted_derivative(a, alpha, c, tau, s);
                    if (fa.is_zero()) {
                        continue;
                    }
                    const auto gb = twisted_derivative(b, c, alpha, sigma, s);
                    if (gb.is_zero()) {
                        continue;
                    }
                    const int nc = std::accumulate(c.begin(), c.end(), 0);
                    const int order = std::accumulate(alpha.begin(), alpha.end(), 0) + nc;
                    mpz_class two_pow;
                    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(order));
                    rational w = rational(1) / (multi_factorial(alpha) * multi_factorial(c) * rational(two_pow));
                    if (nc % 2) {
                        w = -w;
                    }
                    acc += (fa * gb * (scalar::i_pow(order) * scalar(w))).shift_lambda(order);
                }
            }
            out.add_term(tau + sigma, acc);
        }
    }
    return out;
}

phase_polynomial conjugate_by_phase(const phase_polynomial &H, const action_data &s, const rational &t)
{
    const auto left = phase_star(phase_symbol::pure_phase(s, t), phase_symbol::from_polynomial(s, H));
    const auto both = phase_star(left, phase_symbol::pure_phase(s, rational(-t)));
    phase_polynomial out(H.dim());
    for (const auto &[tau, a] : both.terms()) {
        if (sgn(tau) != 0) {
            throw error("PhaseResidual", "phase conjugation left a nonzero phase " + tau.get_str());
        }
        out = a;
    }
    return out;
}

} // namespace starquant
