#include <starquant/printing.hpp>

#include <sstream>

namespace starquant
{

namespace
{

std::string var_name(char base, unsigned dim, unsigned k)
{
    return dim == 1 ? std::string(1, base) : base + std::to_string(k + 1);
}

std::string power(const std::string &name, int e)
{
    return e == 1 ? name : name + "^" + std::to_string(e);
}

// Monomial factors without coefficient, e.g. "lambda*q1^2*p2"; empty for 1.
std::string monomial_text(const monomial &m, unsigned dim)
{
    std::string s;
    auto append = [&](const std::string &f) { s += (s.empty() ? "" : "*") + f; };
    if (m.lam != 0) {
        append(power("lambda", m.lam));
    }
    for (unsigned k = 0; k < dim; ++k) {
        if (m.q(k)) {
            append(power(var_name('q', dim, k), m.q(k)));
        }
    }
    for (unsigned k = 0; k < dim; ++k) {
        if (m.p(k)) {
            append(power(var_name('p', dim, k), m.p(k)));
        }
    }
    return s;
}

// Writes one signed term; `first` controls the leading separator.
void append_term(std::string &out, const scalar &c, const std::string &factors, bool first)
{
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
        negative = sgn(c.re()) < 0;
        const rational mag = abs(c.re());
        coeff = mag == 1 ? "" : mag.get_str();
    } else if (sgn(c.re()) == 0) {
        negative = sgn(c.im()) < 0;
        const rational mag = abs(c.im());
        coeff = mag == 1 ? "i" : mag.get_str() + "*i";
    } else {
        coeff = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? " - " : " + ") + rational(abs(c.im())).get_str() + "*i)";
    }
    std::string body;
    if (coeff.empty()) {
        body = factors.empty() ? "1" : factors;
    } else {
        body = factors.empty() ? coeff : coeff + "*" + factors;
    }
    if (first) {
        out += (negative ? "-" : "") + body;
    } else {
        out += (negative ? " - " : " + ") + body;
    }
}

} // namespace

std::string to_text(const phase_polynomial &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : f.terms()) {
        append_term(out, c, monomial_text(m, f.dim()), first);
        first = false;
    }
    return out;
}

std::string to_text(const gaussian_observable &f)
{
    if (f.is_zero() || sgn(f.rate()) == 0) {
        return to_text(f.body());
    }
    return "(" + to_text(f.body()) + ")*exp(-" + f.rate().get_str() + "*|q|^2)";
}

std::string to_text(const schrodinger_operator &op)
{
    if (op.is_zero()) {
        return "0";
    }
    const unsigned dim = op.dim();
    std::string out;
    bool first = true;
    for (const auto &[gamma, coeff] : op.terms()) {
        std::string d;
        for (unsigned k = 0; k < dim; ++k) {
            if (gamma[k]) {
                d += (d.empty() ? "" : "*") + power("d" + (dim == 1 ? std::string() : std::to_string(k + 1)), gamma[k]);
            }
        }
        std::string c = to_text(coeff);
        if (coeff.size() > 1) {
            c = "(" + c + ")";
        }
        std::string t;
        if (d.empty()) {
            t = c;
        } else if (c == "1") {
            t = d;
        } else if (c == "-1") {
            t = "-" + d;
        } else {
            t = c + "*" + d;
        }
        if (first) {
            out = t;
        } else if (t.front() == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
        first = false;
    }
    if (sgn(op.rate()) != 0) {
        out = "exp(-" + op.rate().get_str() + "*|q|^2)*[" + out + "]";
    }
    return out;
}

std::string to_text(const integral_value &v)
{
    if (v.is_zero()) {
        return "0";
    }
    phase_polynomial series(1);
    for (const auto &[k, c] : v.coeff().terms()) {
        series.add_term(monomial{k, {0, 0}}, c);
    }
    std::ostringstream os;
    os << "(" << to_text(series) << ")*(pi/" << v.rate().get_str() << ")^(" << v.dim() << "/2)";
    return os.str();
}

} // namespace starquant
