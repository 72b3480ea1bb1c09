#ifndef STARQUANT_LAGRANGIAN_HPP
#define STARQUANT_LAGRANGIAN_HPP

#include <vector>

#include <starquant/gaussian.hpp>
#include <starquant/integral_value.hpp>
#include <starquant/schrodinger_operator.hpp>

namespace starquant
{

// Real action S(q); its graph dS is the Lagrangian submanifold L.
class action_data
{
public:
    // Throws std::invalid_argument unless s is base-only with real
    // coefficients and no lambda-dependence.
    explicit action_data(phase_polynomial s);

    unsigned dim() const
    {
        return m_s.dim();
    }
    const phase_polynomial &S() const
    {
        return m_s;
    }
    const std::vector<phase_polynomial> &dS() const
    {
        return m_ds;
    }

    friend bool operator==(const action_data &a, const action_data &b)
    {
        return a.m_s == b.m_s;
    }

private:
    phase_polynomial m_s;
    std::vector<phase_polynomial> m_ds;
};

// Fibre translation p_k -> p_k - t dS/dq^k (Hamiltonian flow of pi*S).
gaussian_observable fiber_flow(const gaussian_observable &f, const rational &t, const action_data &s);

// Generator of the Heisenberg evolution, (i/lambda)[pi*S, f]_*, using that
// S depends on q only:
//   sum_{b odd} 2 i^{b+1} lambda^{b-1} / 2^b  sum_{|a|=b} (1/a!) d^a S d_p^a f
gaussian_observable heisenberg_generator(const gaussian_observable &f, const action_data &s);

// Taylor coefficients F_m of t -> A_t f = sum_m t^m F_m. The generator lowers
// the p-degree, so the list is finite (at most deg_p f + 1 entries).
std::vector<gaussian_observable> evolve_coefficients(const gaussian_observable &f, const action_data &s);

// A_t f at rational t.
gaussian_observable evolve(const gaussian_observable &f, const rational &t, const action_data &s);

// T_t^{(r)} f, the lambda^r coefficient of T_t = Phi_{-t}^* o A_t, extended
// C((lambda))-linearly to lambda-graded f.
gaussian_observable t_operator_apply(const gaussian_observable &f, const rational &t, int r, const action_data &s);

// omega0 o A_{-1}
integral_value omega1(const gaussian_observable &f, const action_data &s);

// f in J1 = A_1 J0  iff  A_{-1} f in J0.
bool gelfand_member1(const gaussian_observable &f, const action_data &s);

// pi0(A_{-1} f): the representation on L transported to functions of q by
// the base diffeomorphism onto L.
schrodinger_operator pi1(const gaussian_observable &f, const action_data &s);

} // namespace starquant

#endif
