#include <starquant/phase_polynomial.hpp>

#include <algorithm>
#include <numeric>
#include <string>

#include <starquant/errors.hpp>
#include <starquant/kernels.hpp>

namespace starquant
{

int monomial::p_degree() const
{
    const auto n = dim();
    return std::accumulate(exps.begin() + n, exps.end(), 0);
}

int monomial::q_degree() const
{
    const auto n = dim();
    return std::accumulate(exps.begin(), exps.begin() + n, 0);
}

phase_polynomial::phase_polynomial(unsigned dim) : m_dim(dim)
{
    if (dim == 0) {
        throw std::invalid_argument("phase space dimension must be positive");
    }
}

phase_polynomial phase_polynomial::constant(unsigned dim, const scalar &c)
{
    phase_polynomial r(dim);
    r.add_term(monomial{0, std::vector<int>(2 * dim, 0)}, c);
    return r;
}

phase_polynomial phase_polynomial::q(unsigned dim, unsigned k)
{
    phase_polynomial r(dim);
    monomial m{0, std::vector<int>(2 * dim, 0)};
    m.exps.at(k) = 1;
    r.add_term(m, scalar(1));
    return r;
}

phase_polynomial phase_polynomial::p(unsigned dim, unsigned k)
{
    phase_polynomial r(dim);
    monomial m{0, std::vector<int>(2 * dim, 0)};
    m.exps.at(dim + k) = 1;
    r.add_term(m, scalar(1));
    return r;
}

phase_polynomial phase_polynomial::lambda(unsigned dim, int power)
{
    phase_polynomial r(dim);
    r.add_term(monomial{power, std::vector<int>(2 * dim, 0)}, scalar(1));
    return r;
}

phase_polynomial phase_polynomial::term(unsigned dim, int lam, std::span<const int> alpha, std::span<const int> beta,
                                        const scalar &c)
{
    if (alpha.size() != dim || beta.size() != dim) {
        throw mismatch_error("DimensionMismatch", "multi-index length differs from dimension");
    }
    monomial m{lam, {}};
    m.exps.assign(alpha.begin(), alpha.end());
    m.exps.insert(m.exps.end(), beta.begin(), beta.end());
    phase_polynomial r(dim);
    r.add_term(m, c);
    return r;
}

void phase_polynomial::add_term(const monomial &m, const scalar &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void phase_polynomial::check_dim(const phase_polynomial &o) const
{
    if (m_dim != o.m_dim) {
        throw mismatch_error("DimensionMismatch",
                             "dimension mismatch: " + std::to_string(m_dim) + " vs " + std::to_string(o.m_dim));
    }
}

phase_polynomial &phase_polynomial::operator+=(const phase_polynomial &o)
{
    check_dim(o);
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, c);
    }
    return *this;
}

phase_polynomial &phase_polynomial::operator-=(const phase_polynomial &o)
{
    check_dim(o);
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

phase_polynomial phase_polynomial::operator-() const
{
    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        r.m_terms.emplace(m, -c);
    }
    return r;
}

phase_polynomial &phase_polynomial::operator*=(const scalar &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[m, v] : m_terms) {
        v *= c;
    }
    return *this;
}

phase_polynomial operator*(const phase_polynomial &a, const phase_polynomial &b)
{
    a.check_dim(b);
    return kernels::multiply(a, b);
}

phase_polynomial phase_polynomial::pow(unsigned e) const
{
    phase_polynomial r = constant(m_dim, scalar(1));
    phase_polynomial base = *this;
    while (e) {
        if (e & 1u) {
            r = r * base;
        }
        e >>= 1u;
        if (e) {
            base = base * base;
        }
    }
    return r;
}

phase_polynomial phase_polynomial::shift_lambda(int by) const
{
    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        monomial mm = m;
        mm.lam += by;
        r.m_terms.emplace(std::move(mm), c);
    }
    return r;
}

phase_polynomial phase_polynomial::dq(unsigned k) const
{
    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        const int e = m.exps[k];
        if (e == 0) {
            continue;
        }
        monomial mm = m;
        mm.exps[k] = e - 1;
        r.add_term(mm, c * scalar(e));
    }
    return r;
}

phase_polynomial phase_polynomial::dp(unsigned k) const
{
    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        const int e = m.exps[m_dim + k];
        if (e == 0) {
            continue;
        }
        monomial mm = m;
        mm.exps[m_dim + k] = e - 1;
        r.add_term(mm, c * scalar(e));
    }
    return r;
}

namespace
{

// d^e x^n / dx^e = n!/(n-e)! x^(n-e)
rational falling_factorial(int n, int e)
{
    rational r(1);
    for (int j = 0; j < e; ++j) {
        r *= n - j;
    }
    return r;
}

} // namespace

phase_polynomial phase_polynomial::derivative(std::span<const int> q_orders, std::span<const int> p_orders) const
{
    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        monomial mm = m;
        rational factor(1);
        bool vanishes = false;
        for (unsigned k = 0; k < m_dim && !vanishes; ++k) {
            for (auto [slot, ord] : {std::pair{k, q_orders[k]}, std::pair{m_dim + k, p_orders[k]}}) {
                if (ord == 0) {
                    continue;
                }
                if (mm.exps[slot] < ord) {
                    vanishes = true;
                    break;
                }
                factor *= falling_factorial(mm.exps[slot], ord);
                mm.exps[slot] -= ord;
            }
        }
        if (!vanishes) {
            r.add_term(mm, c * scalar(factor));
        }
    }
    return r;
}

phase_polynomial phase_polynomial::restrict_zero_section() const
{
    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        if (m.p_degree() == 0) {
            r.m_terms.emplace(m, c);
        }
    }
    return r;
}

phase_polynomial phase_polynomial::substitute_momenta(std::span<const phase_polynomial> shift) const
{
    if (shift.size() != m_dim) {
        throw mismatch_error("DimensionMismatch", "momentum substitution needs one shift per dimension");
    }
    for (const auto &u : shift) {
        check_dim(u);
        if (!u.is_base()) {
            throw precondition_error("MomentumDependentShift", "fibre shift must depend on q only");
        }
    }
    // (p_k + u_k)^e cached per (k, e).
    std::vector<std::vector<phase_polynomial>> powers(m_dim);
    for (unsigned k = 0; k < m_dim; ++k) {
        powers[k].push_back(constant(m_dim, scalar(1)));
    }
    auto binomial_power = [&](unsigned k, int e) -> const phase_polynomial & {
        auto &pk = powers[k];
        while (static_cast<int>(pk.size()) <= e) {
            pk.push_back(pk.back() * (p(m_dim, k) + shift[k]));
        }
        return pk[e];
    };

    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        monomial base = m;
        for (unsigned k = 0; k < m_dim; ++k) {
            base.exps[m_dim + k] = 0;
        }
        phase_polynomial t(m_dim);
        t.add_term(base, c);
        for (unsigned k = 0; k < m_dim; ++k) {
            if (m.p(k) > 0) {
                t = t * binomial_power(k, m.p(k));
            }
        }
        r += t;
    }
    return r;
}

phase_polynomial phase_polynomial::conjugate() const
{
    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        r.m_terms.emplace(m, c.conj());
    }
    return r;
}

phase_polynomial phase_polynomial::lambda_part(int order) const
{
    phase_polynomial r(m_dim);
    for (const auto &[m, c] : m_terms) {
        if (m.lam == order) {
            r.m_terms.emplace(m, c);
        }
    }
    return r;
}

phase_polynomial phase_polynomial::lambda_coefficient(int order) const
{
    return lambda_part(order).shift_lambda(-order);
}

int phase_polynomial::min_lambda() const
{
    if (m_terms.empty()) {
        return 0;
    }
    return m_terms.begin()->first.lam;
}

int phase_polynomial::max_lambda() const
{
    if (m_terms.empty()) {
        return 0;
    }
    return m_terms.rbegin()->first.lam;
}

int phase_polynomial::p_degree() const
{
    int d = m_terms.empty() ? -1 : 0;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, m.p_degree());
    }
    return d;
}

int phase_polynomial::q_degree() const
{
    int d = m_terms.empty() ? -1 : 0;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, m.q_degree());
    }
    return d;
}

bool phase_polynomial::is_real() const
{
    return std::all_of(m_terms.begin(), m_terms.end(), [](const auto &t) { return t.second.is_real(); });
}

std::vector<std::vector<int>> multi_indices_below(std::span<const int> bound)
{
    std::vector<std::vector<int>> out;
    if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) {
        return out;
    }
    std::vector<int> cur(bound.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t k = bound.size();
        while (k > 0) {
            --k;
            if (cur[k] < bound[k]) {
                ++cur[k];
                std::fill(cur.begin() + static_cast<long>(k) + 1, cur.end(), 0);
                break;
            }
            if (k == 0) {
                return out;
            }
        }
        if (bound.empty()) {
            return out;
        }
    }
}

std::vector<std::vector<int>> multi_indices_of_degree(unsigned dim, int d)
{
    std::vector<std::vector<int>> out;
    if (d < 0) {
        return out;
    }
    std::vector<int> bound(dim, d);
    for (auto &a : multi_indices_below(bound)) {
        if (std::accumulate(a.begin(), a.end(), 0) == d) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

rational multi_factorial(std::span<const int> a)
{
    rational r(1);
    for (int v : a) {
        r *= factorial(static_cast<unsigned>(v));
    }
    return r;
}

} // namespace starquant
