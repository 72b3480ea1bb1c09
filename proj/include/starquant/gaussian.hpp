#ifndef STARQUANT_GAUSSIAN_HPP
#define STARQUANT_GAUSSIAN_HPP

#include <span>

#include <starquant/phase_polynomial.hpp>

namespace starquant
{

// body(q, p, lambda) * exp(-rate * |q|^2), rate >= 0. rate == 0 is a plain
// polynomial observable. Closed under derivatives, products (rates add) and
// sums of equal rate.
class gaussian_observable
{
public:
    explicit gaussian_observable(unsigned dim = 1) : m_body(dim), m_rate(0) {}
    gaussian_observable(phase_polynomial body) : m_body(std::move(body)), m_rate(0) {}
    gaussian_observable(phase_polynomial body, rational rate);

    unsigned dim() const
    {
        return m_body.dim();
    }
    const phase_polynomial &body() const
    {
        return m_body;
    }
    const rational &rate() const
    {
        return m_rate;
    }
    bool is_zero() const
    {
        return m_body.is_zero();
    }

    gaussian_observable dq(unsigned k) const;
    gaussian_observable dp(unsigned k) const
    {
        return {m_body.dp(k), m_rate};
    }
    gaussian_observable derivative(std::span<const int> q_orders, std::span<const int> p_orders) const;

    gaussian_observable restrict_zero_section() const
    {
        return {m_body.restrict_zero_section(), m_rate};
    }
    gaussian_observable substitute_momenta(std::span<const phase_polynomial> shift) const
    {
        return {m_body.substitute_momenta(shift), m_rate};
    }
    gaussian_observable conjugate() const
    {
        return {m_body.conjugate(), m_rate};
    }
    gaussian_observable shift_lambda(int by) const
    {
        return {m_body.shift_lambda(by), m_rate};
    }
    gaussian_observable lambda_part(int order) const
    {
        return {m_body.lambda_part(order), m_rate};
    }

    bool is_base() const
    {
        return m_body.is_base();
    }

    gaussian_observable &operator+=(const gaussian_observable &o);
    gaussian_observable &operator-=(const gaussian_observable &o);
    gaussian_observable operator-() const
    {
        return {-m_body, m_rate};
    }

    friend gaussian_observable operator+(gaussian_observable a, const gaussian_observable &b)
    {
        return a += b;
    }
    friend gaussian_observable operator-(gaussian_observable a, const gaussian_observable &b)
    {
        return a -= b;
    }
    friend gaussian_observable operator*(const gaussian_observable &a, const gaussian_observable &b)
    {
        return {a.m_body * b.m_body, a.m_rate + b.m_rate};
    }
    friend gaussian_observable operator*(gaussian_observable a, const scalar &c)
    {
        a.m_body *= c;
        return a;
    }
    friend gaussian_observable operator*(const scalar &c, gaussian_observable a)
    {
        a.m_body *= c;
        return a;
    }

    // Zero observables compare equal regardless of their envelope.
    friend bool operator==(const gaussian_observable &a, const gaussian_observable &b);

private:
    phase_polynomial m_body;
    rational m_rate;
};

} // namespace starquant

#endif
