#include <starquant/integral_value.hpp>

#include <cmath>
#include <numbers>

#include <starquant/errors.hpp>

namespace starquant
{

integral_value::integral_value(laurent_series<scalar> coeff, rational rate, unsigned dim)
    : m_coeff(std::move(coeff)), m_rate(std::move(rate)), m_dim(dim)
{
    m_rate.canonicalize();
    if (!m_coeff.is_zero() && sgn(m_rate) <= 0) {
        throw std::invalid_argument("nonzero integral value needs a positive unit rate");
    }
}

bool integral_value::is_real() const
{
    for (const auto &[k, c] : m_coeff.terms()) {
        if (!c.is_real()) {
            return false;
        }
    }
    return true;
}

bool integral_value::is_positive() const
{
    if (!is_real()) {
        return false;
    }
    laurent_series<rational> re;
    for (const auto &[k, c] : m_coeff.terms()) {
        re.add_term(k, c.re());
    }
    return laurent_is_positive(re);
}

integral_value &integral_value::operator+=(const integral_value &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (m_rate != o.m_rate || m_dim != o.m_dim) {
        throw mismatch_error("UnitMismatch", "integral values with different units cannot be added");
    }
    m_coeff += o.m_coeff;
    return *this;
}

bool operator==(const integral_value &a, const integral_value &b)
{
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    return a.m_rate == b.m_rate && a.m_dim == b.m_dim && a.m_coeff == b.m_coeff;
}

double integral_value::approx(double lambda) const
{
    double re = 0;
    for (const auto &[k, c] : m_coeff.terms()) {
        re += c.re().get_d() * std::pow(lambda, k);
    }
    if (is_zero()) {
        return 0;
    }
    return re * std::pow(std::numbers::pi / m_rate.get_d(), 0.5 * m_dim);
}

} // namespace starquant
