#ifndef STARQUANT_INTEGRAL_VALUE_HPP
#define STARQUANT_INTEGRAL_VALUE_HPP

#include <starquant/laurent.hpp>
#include <starquant/scalar.hpp>

namespace starquant
{

// coeff * (pi / rate)^(dim/2). The unit factor is positive, so the sign of
// the value is carried entirely by coeff.
class integral_value
{
public:
    integral_value() = default;
    integral_value(laurent_series<scalar> coeff, rational rate, unsigned dim);

    const laurent_series<scalar> &coeff() const
    {
        return m_coeff;
    }
    const rational &rate() const
    {
        return m_rate;
    }
    unsigned dim() const
    {
        return m_dim;
    }
    bool is_zero() const
    {
        return m_coeff.is_zero();
    }
    bool is_real() const;
    // Positive in the ordered field R((lambda)); false for non-real values.
    bool is_positive() const;

    // Requires matching units unless one side is zero.
    integral_value &operator+=(const integral_value &o);

    // Zero values compare equal irrespective of unit; nonzero values need the
    // same unit and identical coefficients.
    friend bool operator==(const integral_value &a, const integral_value &b);

    // Floating-point value at a numeric lambda, for diagnostics only.
    double approx(double lambda) const;

private:
    laurent_series<scalar> m_coeff;
    rational m_rate{0};
    unsigned m_dim = 1;
};

} // namespace starquant

#endif
