#include <starquant/scalar.hpp>

#include <stdexcept>

namespace starquant
{

rational parse_rational(const std::string &text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        rational r;
        if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
            throw std::invalid_argument("invalid rational literal '" + text + "'");
        }
        r.canonicalize();
        return r;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") {
        throw std::invalid_argument("invalid decimal literal '" + text + "'");
    }
    if (digits.front() == '+') {
        digits.erase(0, 1);
    }
    mpz_class num;
    if (num.set_str(digits, 10) != 0) {
        throw std::invalid_argument("invalid decimal literal '" + text + "'");
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    rational r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rational(const rational &r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

scalar &scalar::operator*=(const scalar &o)
{
    if (sgn(m_im) == 0 && sgn(o.m_im) == 0) {
        m_re *= o.m_re;
        return *this;
    }
    rational re = m_re * o.m_re - m_im * o.m_im;
    rational im = m_re * o.m_im + m_im * o.m_re;
    m_re = std::move(re);
    m_im = std::move(im);
    return *this;
}

scalar &scalar::operator/=(const scalar &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero scalar");
    }
    const rational norm = o.m_re * o.m_re + o.m_im * o.m_im;
    *this *= o.conj();
    m_re /= norm;
    m_im /= norm;
    return *this;
}

scalar scalar::i_pow(long k)
{
    switch (((k % 4) + 4) % 4) {
        case 0:
            return scalar(1);
        case 1:
            return scalar::i();
        case 2:
            return scalar(-1);
        default:
            return -scalar::i();
    }
}

std::string scalar::to_string() const
{
    if (sgn(m_im) == 0) {
        return m_re.get_str();
    }
    if (sgn(m_re) == 0) {
        return m_im.get_str() + "*i";
    }
    return "(" + m_re.get_str() + (sgn(m_im) > 0 ? " + " : " - ") + rational(abs(m_im)).get_str() + "*i)";
}

std::ostream &operator<<(std::ostream &os, const scalar &s)
{
    return os << s.to_string();
}

rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return rational(f);
}

} // namespace starquant
