#ifndef STARQUANT_PHASE_POLYNOMIAL_HPP
#define STARQUANT_PHASE_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <span>
#include <vector>

#include <starquant/scalar.hpp>

namespace starquant
{

// lambda^lam * q^alpha * p^beta, with exps = (alpha_1..alpha_n, beta_1..beta_n).
// The defaulted ordering is (lam, alpha, beta) lexicographic, which is the
// canonical term order used for printing and serialisation.
struct monomial {
    int lam = 0;
    std::vector<int> exps;

    unsigned dim() const
    {
        return static_cast<unsigned>(exps.size() / 2);
    }
    int q(unsigned k) const
    {
        return exps[k];
    }
    int p(unsigned k) const
    {
        return exps[dim() + k];
    }
    int p_degree() const;
    int q_degree() const;

    friend auto operator<=>(const monomial &, const monomial &) = default;
    friend bool operator==(const monomial &, const monomial &) = default;
};

// Polynomial in (q^1..q^n, p_1..p_n) with exact complex rational
// coefficients and an integer lambda grading (negative powers allowed).
class phase_polynomial
{
public:
    using map_type = std::map<monomial, scalar>;

    explicit phase_polynomial(unsigned dim = 1);

    static phase_polynomial constant(unsigned dim, const scalar &c);
    static phase_polynomial q(unsigned dim, unsigned k);
    static phase_polynomial p(unsigned dim, unsigned k);
    static phase_polynomial lambda(unsigned dim, int power = 1);
    static phase_polynomial term(unsigned dim, int lam, std::span<const int> alpha, std::span<const int> beta,
                                 const scalar &c);

    unsigned dim() const
    {
        return m_dim;
    }
    const map_type &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    std::size_t size() const
    {
        return m_terms.size();
    }

    // Accumulates c * m; drops the term if the coefficient cancels.
    void add_term(const monomial &m, const scalar &c);

    phase_polynomial &operator+=(const phase_polynomial &o);
    phase_polynomial &operator-=(const phase_polynomial &o);
    phase_polynomial operator-() const;
    phase_polynomial &operator*=(const scalar &c);

    friend phase_polynomial operator+(phase_polynomial a, const phase_polynomial &b)
    {
        return a += b;
    }
    friend phase_polynomial operator-(phase_polynomial a, const phase_polynomial &b)
    {
        return a -= b;
    }
    // Pointwise (commutative) product.
    friend phase_polynomial operator*(const phase_polynomial &a, const phase_polynomial &b);
    friend phase_polynomial operator*(phase_polynomial a, const scalar &c)
    {
        return a *= c;
    }
    friend phase_polynomial operator*(const scalar &c, phase_polynomial a)
    {
        return a *= c;
    }
    friend bool operator==(const phase_polynomial &a, const phase_polynomial &b)
    {
        return a.m_dim == b.m_dim && a.m_terms == b.m_terms;
    }

    phase_polynomial pow(unsigned e) const;

    // Multiplication by lambda^by.
    phase_polynomial shift_lambda(int by) const;

    phase_polynomial dq(unsigned k) const;
    phase_polynomial dp(unsigned k) const;
    // Mixed derivative d^a/dq^a d^c/dp^c (multi-indices of length dim).
    phase_polynomial derivative(std::span<const int> q_orders, std::span<const int> p_orders) const;

    // Pullback along the zero section: drops every term with p-dependence.
    phase_polynomial restrict_zero_section() const;
    // Fibre substitution p_k -> p_k + shift[k]; every shift[k] must be base-only.
    phase_polynomial substitute_momenta(std::span<const phase_polynomial> shift) const;
    phase_polynomial conjugate() const;

    // The lambda^order part, with the grading kept.
    phase_polynomial lambda_part(int order) const;
    // Coefficient of lambda^order as a lambda-free polynomial.
    phase_polynomial lambda_coefficient(int order) const;
    int min_lambda() const;
    int max_lambda() const;

    int p_degree() const;
    int q_degree() const;
    bool is_base() const
    {
        return p_degree() <= 0;
    }
    // True iff every coefficient is real.
    bool is_real() const;

private:
    void check_dim(const phase_polynomial &o) const;

    unsigned m_dim;
    map_type m_terms;
};

// Bounded enumeration of multi-indices 0 <= a <= bound (componentwise),
// in lexicographic order.
std::vector<std::vector<int>> multi_indices_below(std::span<const int> bound);
// Multi-indices of length dim with total degree exactly d.
std::vector<std::vector<int>> multi_indices_of_degree(unsigned dim, int d);
// a! = prod a_k!
rational multi_factorial(std::span<const int> a);

} // namespace starquant

#endif
