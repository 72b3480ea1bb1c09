#include <starquant/gaussian.hpp>

#include <starquant/errors.hpp>

namespace starquant
{

gaussian_observable::gaussian_observable(phase_polynomial body, rational rate)
    : m_body(std::move(body)), m_rate(std::move(rate))
{
    m_rate.canonicalize();
    if (sgn(m_rate) < 0) {
        throw std::invalid_argument("envelope rate must be nonnegative");
    }
}

// d/dq_k (P e^{-c|q|^2}) = (dP/dq_k - 2 c q_k P) e^{-c|q|^2}
gaussian_observable gaussian_observable::dq(unsigned k) const
{
    phase_polynomial d = m_body.dq(k);
    if (sgn(m_rate) != 0) {
        d -= phase_polynomial::q(dim(), k) * m_body * scalar(rational(2 * m_rate));
    }
    return {std::move(d), m_rate};
}

gaussian_observable gaussian_observable::derivative(std::span<const int> q_orders, std::span<const int> p_orders) const
{
    const std::vector<int> none(dim(), 0);
    gaussian_observable r{m_body.derivative(none, p_orders), m_rate};
    if (sgn(m_rate) == 0) {
        r.m_body = r.m_body.derivative(q_orders, none);
        return r;
    }
    for (unsigned k = 0; k < dim(); ++k) {
        for (int j = 0; j < q_orders[k] && !r.is_zero(); ++j) {
            r = r.dq(k);
        }
    }
    return r;
}

gaussian_observable &gaussian_observable::operator+=(const gaussian_observable &o)
{
    if (o.is_zero()) {
        if (dim() != o.dim()) {
            throw mismatch_error("DimensionMismatch", "dimension mismatch in observable sum");
        }
        return *this;
    }
    if (is_zero()) {
        if (dim() != o.dim()) {
            throw mismatch_error("DimensionMismatch", "dimension mismatch in observable sum");
        }
        *this = o;
        return *this;
    }
    if (m_rate != o.m_rate) {
        throw mismatch_error("RateMismatch", "cannot add observables with different envelope rates "
                                                 + m_rate.get_str() + " and " + o.m_rate.get_str());
    }
    m_body += o.m_body;
    return *this;
}

gaussian_observable &gaussian_observable::operator-=(const gaussian_observable &o)
{
    return *this += -o;
}

bool operator==(const gaussian_observable &a, const gaussian_observable &b)
{
    if (a.dim() != b.dim()) {
        return false;
    }
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    return a.m_rate == b.m_rate && a.m_body == b.m_body;
}

} // namespace starquant
