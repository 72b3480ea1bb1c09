#ifndef STARQUANT_PHASE_SYMBOLS_HPP
#define STARQUANT_PHASE_SYMBOLS_HPP

#include <map>

#include <starquant/lagrangian.hpp>

namespace starquant
{

// sum_tau amplitude_tau(q, p, lambda) * exp(i tau S(q) / lambda)
class phase_symbol
{
public:
    using map_type = std::map<rational, phase_polynomial>;

    explicit phase_symbol(action_data s) : m_action(std::move(s)) {}

    // Polynomial observable, phase multiplier 0.
    static phase_symbol from_polynomial(const action_data &s, const phase_polynomial &f);
    // exp(i tau S / lambda)
    static phase_symbol pure_phase(const action_data &s, const rational &tau);

    const action_data &action() const
    {
        return m_action;
    }
    const map_type &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    // Merges equal tau; drops zero amplitudes.
    void add_term(const rational &tau, const phase_polynomial &amplitude);

    // Lowest lambda power over all amplitudes (0 for the zero symbol).
    int min_lambda() const;

    friend bool operator==(const phase_symbol &a, const phase_symbol &b)
    {
        return a.m_action == b.m_action && a.m_terms == b.m_terms;
    }

private:
    action_data m_action;
    map_type m_terms;
};

// Weyl star product with the phase rule d/dq^k exp(i tau S/lambda) =
// (i tau / lambda) dS/dq^k exp(i tau S/lambda). Throws
// mismatch_error("ActionMismatch") for different actions.
phase_symbol phase_star(const phase_symbol &f, const phase_symbol &g);

// exp(itS/lambda) * H * exp(-itS/lambda). The phases cancel; a leftover
// nonzero phase raises error("PhaseResidual").
phase_polynomial conjugate_by_phase(const phase_polynomial &H, const action_data &s, const rational &t);

} // namespace starquant

#endif
