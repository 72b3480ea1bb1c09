#include <starquant/lagrangian.hpp>

#include <numeric>
#include <stdexcept>

#include <starquant/gns.hpp>
#include <starquant/weyl_star.hpp>

namespace starquant
{

action_data::action_data(phase_polynomial s) : m_s(std::move(s))
{
    if (!m_s.is_base()) {
        throw std::invalid_argument("action must depend on q only");
    }
    if (!m_s.is_real()) {
        throw std::invalid_argument("action must be real");
    }
    if (!m_s.is_zero() && (m_s.min_lambda() != 0 || m_s.max_lambda() != 0)) {
        throw std::invalid_argument("action must not depend on lambda");
    }
    for (unsigned k = 0; k < m_s.dim(); ++k) {
        m_ds.push_back(m_s.dq(k));
    }
}

gaussian_observable fiber_flow(const gaussian_observable &f, const rational &t, const action_data &s)
{
    std::vector<phase_polynomial> shift;
    for (const auto &d : s.dS()) {
        shift.push_back(d * scalar(rational(-t)));
    }
    return f.substitute_momenta(shift);
}

gaussian_observable heisenberg_generator(const gaussian_observable &f, const action_data &s)
{
    const unsigned n = f.dim();
    gaussian_observable r(n);
    const int pdeg = f.body().p_degree();
    const std::vector<int> none(n, 0);
    for (int b = 1; b <= pdeg; b += 2) {
        mpz_class two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(b));
        const scalar w = scalar(2) * scalar::i_pow(b + 1) / scalar(rational(two_pow));
        for (const auto &a : multi_indices_of_degree(n, b)) {
            const auto dS = s.S().derivative(a, none);
            if (dS.is_zero()) {
                continue;
            }
            const auto df = f.derivative(none, a);
            if (df.is_zero()) {
                continue;
            }
            r += (gaussian_observable(dS) * df * (w / scalar(multi_factorial(a)))).shift_lambda(b - 1);
        }
    }
    return r;
}

std::vector<gaussian_observable> evolve_coefficients(const gaussian_observable &f, const action_data &s)
{
    if (f.dim() != s.dim()) {
        throw std::invalid_argument("observable and action dimensions differ");
    }
    std::vector<gaussian_observable> out;
    gaussian_observable cur = f;
    for (long m = 0; !cur.is_zero(); ++m) {
        out.push_back(cur);
        cur = heisenberg_generator(cur, s) * scalar(rational(1) / (m + 1));
    }
    return out;
}

gaussian_observable evolve(const gaussian_observable &f, const rational &t, const action_data &s)
{
    const auto coeffs = evolve_coefficients(f, s);
    gaussian_observable r(f.dim());
    rational tp(1);
    for (const auto &c : coeffs) {
        if (sgn(tp) != 0) {
            r += c * scalar(tp);
        }
        tp *= t;
    }
    return r;
}

gaussian_observable t_operator_apply(const gaussian_observable &f, const rational &t, int r, const action_data &s)
{
    gaussian_observable out(f.dim());
    if (f.is_zero()) {
        return out;
    }
    for (int k = f.body().min_lambda(); k <= f.body().max_lambda(); ++k) {
        const gaussian_observable fk{f.body().lambda_coefficient(k), f.rate()};
        if (fk.is_zero()) {
            continue;
        }
        const auto tf = fiber_flow(evolve(fk, t, s), -t, s);
        out += gaussian_observable{tf.body().lambda_coefficient(r), tf.rate()}.shift_lambda(k);
    }
    return out;
}

integral_value omega1(const gaussian_observable &f, const action_data &s)
{
    return omega0(evolve(f, rational(-1), s));
}

bool gelfand_member1(const gaussian_observable &f, const action_data &s)
{
    return gelfand_member0(evolve(f, rational(-1), s));
}

schrodinger_operator pi1(const gaussian_observable &f, const action_data &s)
{
    return pi0(evolve(f, rational(-1), s));
}

} // namespace starquant
