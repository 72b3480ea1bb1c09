#ifndef STARQUANT_LAURENT_HPP
#define STARQUANT_LAURENT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include <starquant/scalar.hpp>

namespace starquant
{

// Formal Laurent series in lambda with finitely many terms. Only nonzero
// coefficients are stored, so equality is equality of the term maps.
// C needs value-initialised zero, +, -, * and an ADL-visible is_zero(C).
template <typename C>
class laurent_series
{
public:
    using map_type = std::map<int, C>;

    laurent_series() = default;

    static laurent_series monomial(int order, C c)
    {
        laurent_series s;
        s.add_term(order, std::move(c));
        return s;
    }

    const map_type &terms() const
    {
        return m_terms;
    }

    bool is_zero() const
    {
        return m_terms.empty();
    }

    std::optional<int> min_order() const
    {
        if (m_terms.empty()) {
            return std::nullopt;
        }
        return m_terms.begin()->first;
    }

    std::optional<int> max_order() const
    {
        if (m_terms.empty()) {
            return std::nullopt;
        }
        return m_terms.rbegin()->first;
    }

    C coeff(int order) const
    {
        auto it = m_terms.find(order);
        return it == m_terms.end() ? C{} : it->second;
    }

    void add_term(int order, const C &c)
    {
        auto [it, inserted] = m_terms.try_emplace(order, c);
        if (!inserted) {
            it->second = it->second + c;
        }
        if (is_zero_coeff(it->second)) {
            m_terms.erase(it);
        }
    }

    laurent_series &operator+=(const laurent_series &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add_term(k, c);
        }
        return *this;
    }

    laurent_series &operator-=(const laurent_series &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add_term(k, C{} - c);
        }
        return *this;
    }

    laurent_series operator-() const
    {
        laurent_series r;
        for (const auto &[k, c] : m_terms) {
            r.m_terms.emplace(k, C{} - c);
        }
        return r;
    }

    friend laurent_series operator+(laurent_series a, const laurent_series &b)
    {
        return a += b;
    }
    friend laurent_series operator-(laurent_series a, const laurent_series &b)
    {
        return a -= b;
    }

    friend laurent_series operator*(const laurent_series &a, const laurent_series &b)
    {
        laurent_series r;
        for (const auto &[ka, ca] : a.m_terms) {
            for (const auto &[kb, cb] : b.m_terms) {
                r.add_term(ka + kb, ca * cb);
            }
        }
        return r;
    }

    laurent_series scaled(const C &c) const
    {
        laurent_series r;
        for (const auto &[k, v] : m_terms) {
            r.add_term(k, v * c);
        }
        return r;
    }

    laurent_series shifted(int by) const
    {
        laurent_series r;
        for (const auto &[k, v] : m_terms) {
            r.m_terms.emplace(k + by, v);
        }
        return r;
    }

    // Drops every term of order > max_order.
    laurent_series truncated(int max_order) const
    {
        laurent_series r;
        for (const auto &[k, v] : m_terms) {
            if (k > max_order) {
                break;
            }
            r.m_terms.emplace(k, v);
        }
        return r;
    }

    // Series t with (*this) * t == 1 modulo lambda^(max_order + 1).
    // Requires C to be a field.
    laurent_series inverse(int max_order) const
    {
        if (m_terms.empty()) {
            throw std::domain_error("inverse of the zero Laurent series");
        }
        const int k0 = m_terms.begin()->first;
        const C a0_inv = C(1) / m_terms.begin()->second;
        const int count = max_order < 0 ? 0 : max_order;
        std::map<int, C> b;
        laurent_series r;
        for (int m = 0; m <= count; ++m) {
            C acc{};
            if (m == 0) {
                acc = a0_inv;
            } else {
                for (int j = 1; j <= m; ++j) {
                    auto it = m_terms.find(k0 + j);
                    if (it != m_terms.end() && b.count(m - j)) {
                        acc = acc + it->second * b[m - j];
                    }
                }
                acc = C{} - acc * a0_inv;
            }
            b[m] = acc;
            r.add_term(m - k0, acc);
        }
        return r;
    }

    friend bool operator==(const laurent_series &a, const laurent_series &b)
    {
        return a.m_terms == b.m_terms;
    }

private:
    static bool is_zero_coeff(const C &c)
    {
        using starquant::is_zero;
        return is_zero(c);
    }

    map_type m_terms;
};

template <typename C>
inline bool is_zero(const laurent_series<C> &s)
{
    return s.is_zero();
}

// Order of the real Laurent field: positive iff the lowest nonvanishing
// coefficient is > 0.
inline bool laurent_is_positive(const laurent_series<rational> &s)
{
    return !s.is_zero() && sgn(s.terms().begin()->second) > 0;
}

} // namespace starquant

#endif
