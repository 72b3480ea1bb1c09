#include <starquant/parse.hpp>

#include <cctype>
#include <sstream>

namespace starquant
{

namespace
{

std::string describe(const std::vector<std::string> &expected)
{
    std::string s;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        s += (i ? ", " : "") + expected[i];
    }
    return s;
}

} // namespace

parse_error::parse_error(std::string kind, const std::string &msg, int line, int column,
                         std::vector<std::string> expected)
    : error(std::move(kind), msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)
                                 + (expected.empty() ? std::string() : " (expected " + describe(expected) + ")")),
      m_line(line), m_column(column), m_expected(std::move(expected))
{
}

namespace
{

enum class tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct token {
    tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<token> tokenize(const std::string &src)
{
    std::vector<token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const unsigned char ch = static_cast<unsigned char>(src[i]);
        if (std::isspace(ch)) {
            advance(1);
            continue;
        }
        const int l = line;
        const int c = col;
        if (std::isdigit(ch) || (ch == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            std::size_t j = i;
            bool dot = false;
            while (j < src.size()
                   && (std::isdigit(static_cast<unsigned char>(src[j])) || (src[j] == '.' && !dot))) {
                dot = dot || src[j] == '.';
                ++j;
            }
            out.push_back({tok::number, src.substr(i, j - i), l, c});
            advance(j - i);
            continue;
        }
        if (std::isalpha(ch)) {
            std::size_t j = i;
            while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({tok::ident, src.substr(i, j - i), l, c});
            advance(j - i);
            continue;
        }
        // U+2212 MINUS SIGN
        if (src.compare(i, 3, "\xE2\x88\x92") == 0) {
            out.push_back({tok::minus, "-", l, c});
            advance(3);
            continue;
        }
        tok kind;
        switch (ch) {
            case '+':
                kind = tok::plus;
                break;
            case '-':
                kind = tok::minus;
                break;
            case '*':
                kind = tok::star;
                break;
            case '/':
                kind = tok::slash;
                break;
            case '^':
                kind = tok::caret;
                break;
            case '(':
                kind = tok::lparen;
                break;
            case ')':
                kind = tok::rparen;
                break;
            default:
                throw parse_error("SyntaxError", std::string("unexpected character '") + src[i] + "'", l, c,
                                  {"number", "i", "lambda", "q", "p", "("});
        }
        out.push_back({kind, std::string(1, src[i]), l, c});
        advance(1);
    }
    out.push_back({tok::end, "", line, col});
    return out;
}

class parser
{
public:
    parser(std::vector<token> toks, unsigned n) : m_toks(std::move(toks)), m_dim(n) {}

    phase_polynomial parse()
    {
        auto r = expr();
        if (peek().kind != tok::end) {
            fail("unexpected '" + peek().text + "'", {"+", "-", "*", "/", "end of input"});
        }
        return r;
    }

private:
    const token &peek() const
    {
        return m_toks[m_pos];
    }
    const token &next()
    {
        return m_toks[m_pos++];
    }

    [[noreturn]] void fail(const std::string &msg, std::vector<std::string> expected, const char *kind = "SyntaxError")
    {
        const auto &t = peek();
        throw parse_error(kind, msg, t.line, t.column, std::move(expected));
    }

    phase_polynomial expr()
    {
        phase_polynomial r(m_dim);
        bool negate = false;
        if (peek().kind == tok::plus || peek().kind == tok::minus) {
            negate = next().kind == tok::minus;
        }
        r = term();
        if (negate) {
            r = -r;
        }
        while (peek().kind == tok::plus || peek().kind == tok::minus) {
            const bool minus = next().kind == tok::minus;
            auto t = term();
            if (minus) {
                r -= t;
            } else {
                r += t;
            }
        }
        return r;
    }

    phase_polynomial term()
    {
        auto r = factor();
        while (peek().kind == tok::star || peek().kind == tok::slash) {
            const bool div = next().kind == tok::slash;
            const token at = peek();
            auto f = factor();
            if (!div) {
                r = r * f;
                continue;
            }
            const bool constant = f.size() == 1 && f.terms().begin()->first.lam == 0
                                  && f.terms().begin()->first.p_degree() == 0
                                  && f.terms().begin()->first.q_degree() == 0;
            if (!constant) {
                throw parse_error("SyntaxError", "division only by nonzero constants", at.line, at.column,
                                  {"nonzero rational"});
            }
            r *= scalar(1) / f.terms().begin()->second;
        }
        return r;
    }

    phase_polynomial factor()
    {
        bool is_lambda = false;
        auto b = base(is_lambda);
        if (peek().kind != tok::caret) {
            return b;
        }
        next();
        bool negative = false;
        if (peek().kind == tok::minus) {
            next();
            negative = true;
        }
        if (peek().kind != tok::number || peek().text.find('.') != std::string::npos) {
            fail("exponent must be an integer", {"integer"});
        }
        const token num = next();
        long e = std::stol(num.text);
        if (negative) {
            if (!is_lambda) {
                throw parse_error("NegativeExponent", "negative exponent is only allowed on lambda", num.line,
                                  num.column, {"nonnegative integer"});
            }
            return phase_polynomial::lambda(m_dim, static_cast<int>(-e));
        }
        if (is_lambda) {
            return phase_polynomial::lambda(m_dim, static_cast<int>(e));
        }
        return b.pow(static_cast<unsigned>(e));
    }

    unsigned index_of(const token &t, const std::string &digits)
    {
        if (digits.empty()) {
            if (m_dim == 1) {
                return 0;
            }
            throw parse_error("IndexOutOfRange", "'" + t.text + "' needs an index when n > 1", t.line, t.column,
                              {t.text + "1.." + t.text + std::to_string(m_dim)});
        }
        const long k = std::stol(digits);
        if (k < 1 || k > static_cast<long>(m_dim)) {
            throw parse_error("IndexOutOfRange", "index " + digits + " outside 1.." + std::to_string(m_dim), t.line,
                              t.column, {});
        }
        return static_cast<unsigned>(k - 1);
    }

    phase_polynomial base(bool &is_lambda)
    {
        const token t = peek();
        switch (t.kind) {
            case tok::number: {
                next();
                return phase_polynomial::constant(m_dim, scalar(parse_rational(t.text)));
            }
            case tok::lparen: {
                next();
                auto r = expr();
                if (peek().kind != tok::rparen) {
                    fail("unbalanced parenthesis", {")"});
                }
                next();
                return r;
            }
            case tok::ident: {
                next();
                std::size_t split = 0;
                while (split < t.text.size() && std::isalpha(static_cast<unsigned char>(t.text[split]))) {
                    ++split;
                }
                const std::string name = t.text.substr(0, split);
                const std::string digits = t.text.substr(split);
                if (name == "i" && digits.empty()) {
                    return phase_polynomial::constant(m_dim, scalar::i());
                }
                if (name == "lambda" && digits.empty()) {
                    is_lambda = true;
                    return phase_polynomial::lambda(m_dim, 1);
                }
                if (name == "q") {
                    return phase_polynomial::q(m_dim, index_of(t, digits));
                }
                if (name == "p") {
                    return phase_polynomial::p(m_dim, index_of(t, digits));
                }
                throw parse_error("SyntaxError", "unknown identifier '" + t.text + "'", t.line, t.column,
                                  {"i", "lambda", "q", "p"});
            }
            default:
                fail(t.kind == tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'",
                     {"number", "i", "lambda", "q", "p", "("});
        }
    }

    std::vector<token> m_toks;
    std::size_t m_pos = 0;
    unsigned m_dim;
};

} // namespace

phase_polynomial parse_polynomial(const std::string &text, unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    return parser(tokenize(text), n).parse();
}

gaussian_observable parse_observable(const std::string &text, unsigned n, const rational &envelope_rate)
{
    return {parse_polynomial(text, n), envelope_rate};
}

} // namespace starquant
