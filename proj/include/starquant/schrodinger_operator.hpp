#ifndef STARQUANT_SCHRODINGER_OPERATOR_HPP
#define STARQUANT_SCHRODINGER_OPERATOR_HPP

#include <map>
#include <vector>

#include <starquant/gaussian.hpp>

namespace starquant
{

// Formal differential operator in q:
//   exp(-rate |q|^2) * sum_gamma c_gamma(q, lambda) d^gamma/dq^gamma
// with base-only, lambda-graded polynomial coefficients.
class schrodinger_operator
{
public:
    using map_type = std::map<std::vector<int>, phase_polynomial>;

    explicit schrodinger_operator(unsigned dim = 1) : m_dim(dim), m_rate(0) {}

    static schrodinger_operator identity(unsigned dim);
    // Multiplication by a base function.
    static schrodinger_operator multiplication(const gaussian_observable &f);
    static schrodinger_operator derivative(unsigned dim, std::vector<int> gamma);

    unsigned dim() const
    {
        return m_dim;
    }
    const rational &rate() const
    {
        return m_rate;
    }
    const map_type &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    // Adds coeff * d^gamma; coeff must be base-only.
    void add_term(const std::vector<int> &gamma, const phase_polynomial &coeff, const rational &rate);

    schrodinger_operator &operator+=(const schrodinger_operator &o);
    schrodinger_operator &operator-=(const schrodinger_operator &o);
    friend schrodinger_operator operator+(schrodinger_operator a, const schrodinger_operator &b)
    {
        return a += b;
    }
    friend schrodinger_operator operator-(schrodinger_operator a, const schrodinger_operator &b)
    {
        return a -= b;
    }
    friend schrodinger_operator operator*(const scalar &c, const schrodinger_operator &a);

    schrodinger_operator shift_lambda(int by) const;
    // Coefficient of lambda^order, as a lambda-free operator.
    schrodinger_operator lambda_coefficient(int order) const;
    int min_lambda() const;
    int max_lambda() const;
    // Highest total derivative order, -1 for the zero operator.
    int order() const;

    // Zero operators compare equal regardless of envelope.
    friend bool operator==(const schrodinger_operator &a, const schrodinger_operator &b);

private:
    unsigned m_dim;
    rational m_rate;
    map_type m_terms;
};

// A o B via the Leibniz rule.
schrodinger_operator op_compose(const schrodinger_operator &a, const schrodinger_operator &b);

// A applied to a base function (no p-dependence).
gaussian_observable op_apply_base(const schrodinger_operator &a, const gaussian_observable &phi);

} // namespace starquant

#endif
