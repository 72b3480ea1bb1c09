#include <starquant/schrodinger_operator.hpp>

#include <algorithm>
#include <limits>

#include <starquant/errors.hpp>

namespace starquant
{

schrodinger_operator schrodinger_operator::identity(unsigned dim)
{
    schrodinger_operator r(dim);
    r.add_term(std::vector<int>(dim, 0), phase_polynomial::constant(dim, scalar(1)), rational(0));
    return r;
}

schrodinger_operator schrodinger_operator::multiplication(const gaussian_observable &f)
{
    schrodinger_operator r(f.dim());
    r.add_term(std::vector<int>(f.dim(), 0), f.body(), f.rate());
    return r;
}

schrodinger_operator schrodinger_operator::derivative(unsigned dim, std::vector<int> gamma)
{
    schrodinger_operator r(dim);
    r.add_term(gamma, phase_polynomial::constant(dim, scalar(1)), rational(0));
    return r;
}

void schrodinger_operator::add_term(const std::vector<int> &gamma, const phase_polynomial &coeff,
                                    const rational &rate)
{
    if (coeff.dim() != m_dim || gamma.size() != m_dim) {
        throw mismatch_error("DimensionMismatch", "operator term dimension mismatch");
    }
    if (!coeff.is_base()) {
        throw std::invalid_argument("operator coefficients must not depend on p");
    }
    if (coeff.is_zero()) {
        return;
    }
    if (m_terms.empty()) {
        m_rate = rate;
    } else if (m_rate != rate) {
        throw mismatch_error("RateMismatch", "operator terms with different envelope rates");
    }
    auto [it, inserted] = m_terms.try_emplace(gamma, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

schrodinger_operator &schrodinger_operator::operator+=(const schrodinger_operator &o)
{
    if (o.m_dim != m_dim) {
        throw mismatch_error("DimensionMismatch", "operator dimension mismatch");
    }
    for (const auto &[g, c] : o.m_terms) {
        add_term(g, c, o.m_rate);
    }
    return *this;
}

schrodinger_operator &schrodinger_operator::operator-=(const schrodinger_operator &o)
{
    return *this += scalar(-1) * o;
}

schrodinger_operator operator*(const scalar &c, const schrodinger_operator &a)
{
    schrodinger_operator r(a.m_dim);
    for (const auto &[g, v] : a.m_terms) {
        r.add_term(g, v * c, a.m_rate);
    }
    return r;
}

schrodinger_operator schrodinger_operator::shift_lambda(int by) const
{
    schrodinger_operator r(m_dim);
    for (const auto &[g, v] : m_terms) {
        r.add_term(g, v.shift_lambda(by), m_rate);
    }
    return r;
}

schrodinger_operator schrodinger_operator::lambda_coefficient(int order) const
{
    schrodinger_operator r(m_dim);
    for (const auto &[g, v] : m_terms) {
        r.add_term(g, v.lambda_coefficient(order), m_rate);
    }
    return r;
}

int schrodinger_operator::min_lambda() const
{
    int lo = std::numeric_limits<int>::max();
    for (const auto &[g, v] : m_terms) {
        lo = std::min(lo, v.min_lambda());
    }
    return m_terms.empty() ? 0 : lo;
}

int schrodinger_operator::max_lambda() const
{
    int hi = std::numeric_limits<int>::min();
    for (const auto &[g, v] : m_terms) {
        hi = std::max(hi, v.max_lambda());
    }
    return m_terms.empty() ? 0 : hi;
}

int schrodinger_operator::order() const
{
    int d = -1;
    for (const auto &[g, v] : m_terms) {
        int s = 0;
        for (int e : g) {
            s += e;
        }
        d = std::max(d, s);
    }
    return d;
}

bool operator==(const schrodinger_operator &a, const schrodinger_operator &b)
{
    if (a.m_dim != b.m_dim) {
        return false;
    }
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    return a.m_rate == b.m_rate && a.m_terms == b.m_terms;
}

namespace
{

rational multi_binomial(const std::vector<int> &top, const std::vector<int> &bottom)
{
    rational r(1);
    for (std::size_t k = 0; k < top.size(); ++k) {
        r *= factorial(static_cast<unsigned>(top[k]))
             / (factorial(static_cast<unsigned>(bottom[k])) * factorial(static_cast<unsigned>(top[k] - bottom[k])));
    }
    return r;
}

} // namespace

schrodinger_operator op_compose(const schrodinger_operator &a, const schrodinger_operator &b)
{
    if (a.dim() != b.dim()) {
        throw mismatch_error("DimensionMismatch", "operator dimension mismatch");
    }
    const unsigned n = a.dim();
    schrodinger_operator r(n);
    const std::vector<int> none(n, 0);
    const rational rate = a.rate() + b.rate();
    for (const auto &[gamma, ca] : a.terms()) {
        for (const auto &mu : multi_indices_below(gamma)) {
            const rational binom = multi_binomial(gamma, mu);
            for (const auto &[delta, cb] : b.terms()) {
                auto dcb = gaussian_observable(cb, b.rate()).derivative(mu, none);
                if (dcb.is_zero()) {
                    continue;
                }
                std::vector<int> out(n);
                for (unsigned k = 0; k < n; ++k) {
                    out[k] = gamma[k] - mu[k] + delta[k];
                }
                r.add_term(out, ca * dcb.body() * scalar(binom), rate);
            }
        }
    }
    return r;
}

gaussian_observable op_apply_base(const schrodinger_operator &a, const gaussian_observable &phi)
{
    if (!phi.is_base()) {
        throw std::invalid_argument("operators act on base functions only");
    }
    if (a.dim() != phi.dim()) {
        throw mismatch_error("DimensionMismatch", "operator dimension mismatch");
    }
    const std::vector<int> none(a.dim(), 0);
    gaussian_observable r(a.dim());
    for (const auto &[gamma, c] : a.terms()) {
        auto d = phi.derivative(gamma, none);
        if (d.is_zero()) {
            continue;
        }
        r += gaussian_observable(c, a.rate()) * d;
    }
    return r;
}

} // namespace starquant
