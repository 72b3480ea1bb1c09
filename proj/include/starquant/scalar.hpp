#ifndef STARQUANT_SCALAR_HPP
#define STARQUANT_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace starquant
{

using rational = mpq_class;

// Parses "a", "-a/b" or a finite decimal "1.25" into an exact rational.
rational parse_rational(const std::string &text);

// Always "num/den", den >= 1.
std::string format_rational(const rational &r);

// Exact complex rational re + i*im.
class scalar
{
public:
    scalar() = default;
    scalar(long v) : m_re(v), m_im(0) {}
    scalar(rational re) : m_re(std::move(re)), m_im(0)
    {
        m_re.canonicalize();
    }
    scalar(rational re, rational im) : m_re(std::move(re)), m_im(std::move(im))
    {
        m_re.canonicalize();
        m_im.canonicalize();
    }

    static scalar i()
    {
        return {rational(0), rational(1)};
    }

    const rational &re() const
    {
        return m_re;
    }
    const rational &im() const
    {
        return m_im;
    }

    bool is_zero() const
    {
        return sgn(m_re) == 0 && sgn(m_im) == 0;
    }
    bool is_real() const
    {
        return sgn(m_im) == 0;
    }

    scalar conj() const
    {
        return {m_re, -m_im};
    }

    scalar operator-() const
    {
        return {-m_re, -m_im};
    }

    scalar &operator+=(const scalar &o)
    {
        m_re += o.m_re;
        m_im += o.m_im;
        return *this;
    }
    scalar &operator-=(const scalar &o)
    {
        m_re -= o.m_re;
        m_im -= o.m_im;
        return *this;
    }
    scalar &operator*=(const scalar &o);
    scalar &operator/=(const scalar &o);

    friend scalar operator+(scalar a, const scalar &b)
    {
        return a += b;
    }
    friend scalar operator-(scalar a, const scalar &b)
    {
        return a -= b;
    }
    friend scalar operator*(scalar a, const scalar &b)
    {
        return a *= b;
    }
    friend scalar operator/(scalar a, const scalar &b)
    {
        return a /= b;
    }

    friend bool operator==(const scalar &a, const scalar &b)
    {
        return a.m_re == b.m_re && a.m_im == b.m_im;
    }

    // (i)^k for integer k.
    static scalar i_pow(long k);

    std::string to_string() const;

private:
    rational m_re{0};
    rational m_im{0};
};

inline bool is_zero(const scalar &s)
{
    return s.is_zero();
}

inline bool is_zero(const rational &r)
{
    return sgn(r) == 0;
}

std::ostream &operator<<(std::ostream &os, const scalar &s);

// n! as a rational.
rational factorial(unsigned n);

} // namespace starquant

#endif
