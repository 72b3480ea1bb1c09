#ifndef STARQUANT_PARSE_HPP
#define STARQUANT_PARSE_HPP

#include <string>
#include <vector>

#include <starquant/errors.hpp>
#include <starquant/gaussian.hpp>

namespace starquant
{

// Syntax errors carry a 1-based position and the tokens that would have
// been accepted there. kind() is "SyntaxError", "NegativeExponent" or
// "IndexOutOfRange".
class parse_error : public error
{
public:
    parse_error(std::string kind, const std::string &msg, int line, int column, std::vector<std::string> expected);

    int line() const
    {
        return m_line;
    }
    int column() const
    {
        return m_column;
    }
    const std::vector<std::string> &expected() const
    {
        return m_expected;
    }

private:
    int m_line;
    int m_column;
    std::vector<std::string> m_expected;
};

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      division by nonzero constants only
//   factor := base ('^' integer)?             negative exponent on lambda only
//   base   := rational | 'i' | 'lambda' | 'q'idx? | 'p'idx? | '(' expr ')'
// '*' is the pointwise product. Bare q / p are accepted when n == 1.
phase_polynomial parse_polynomial(const std::string &text, unsigned n);

gaussian_observable parse_observable(const std::string &text, unsigned n, const rational &envelope_rate);

} // namespace starquant

#endif
