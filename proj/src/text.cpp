#include "hnkit/text.hpp"

#include "hnkit/errors.hpp"

#include <cctype>
#include <limits>

namespace hnkit {

namespace {

enum class Tok { Number, Imag, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    Rational value;       // Number / Imag literal
    std::size_t index = 0;  // Var (1-based)
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t pos = 0;
    auto read_digits = [&](std::size_t start) {
        std::size_t end = start;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) {
            ++end;
        }
        return end;
    };
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
    };
    while (true) {
        skip_ws();
        if (pos == s.size()) {
            out.push_back({Tok::End, pos, 0});
            return out;
        }
        const std::size_t start = pos;
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = read_digits(pos);
            Integer num(std::string(s.substr(pos, end - pos)));
            Integer den = 1;
            pos = end;
            // p/q is one literal only when a digit follows the slash directly,
            // and never in exponent position (z1^2/2 halves z1^2).
            const bool after_caret = !out.empty() && out.back().kind == Tok::Caret;
            if (!after_caret && pos + 1 < s.size() && s[pos] == '/' &&
                std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                end = read_digits(pos + 1);
                den = Integer(std::string(s.substr(pos + 1, end - pos - 1)));
                if (den == 0) {
                    throw ParseError("zero denominator in rational literal", pos + 1);
                }
                pos = end;
            }
            Rational value(num, den);
            value.canonicalize();
            skip_ws();
            if (pos < s.size() && s[pos] == 'i' &&
                !(pos + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
                ++pos;
                out.push_back({Tok::Imag, start, value});
            } else {
                out.push_back({Tok::Number, start, value});
            }
            continue;
        }
        if (c == 'z') {
            std::size_t end = read_digits(pos + 1);
            if (end == pos + 1) {
                throw ParseError("expected variable index after 'z'", pos + 1);
            }
            const std::string digits(s.substr(pos + 1, end - pos - 1));
            if (digits.size() > 6 || std::stoul(digits) == 0) {
                throw ParseError("variable index out of range", pos + 1);
            }
            Token t{Tok::Var, start, 0};
            t.index = std::stoul(digits);
            out.push_back(std::move(t));
            pos = end;
            continue;
        }
        if (c == 'i' && !(pos + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
            out.push_back({Tok::Imag, start, 1});
            ++pos;
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        out.push_back({kind, start, 0});
        ++pos;
    }
}

// expr   := sign? term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := ('+'|'-') unary | power
// power  := atom ('^' Number)?
// atom   := Number | Imag | Var | '(' expr ')'
class Parser {
public:
    Parser(std::vector<Token> toks, std::size_t n) : toks_(std::move(toks)), n_(n) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (peek().kind != Tok::End) {
            throw ParseError("unexpected trailing input", peek().offset);
        }
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    Polynomial expr() {
        Polynomial acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            Polynomial rhs = term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token& op = next();
            const std::size_t at = peek().offset;
            Polynomial rhs = unary();
            if (op.kind == Tok::Star) {
                acc *= rhs;
                continue;
            }
            if (!rhs.is_constant() || rhs.is_zero()) {
                throw ParseError("division only by a nonzero constant", at);
            }
            acc *= rhs.terms().front().coefficient.inverse();
        }
        return acc;
    }

    Polynomial unary() {
        if (peek().kind == Tok::Minus) {
            next();
            return -unary();
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (peek().kind != Tok::Caret) {
            return base;
        }
        next();
        const Token& e = next();
        if (e.kind != Tok::Number || e.value.get_den() != 1 ||
            e.value.get_num() > std::numeric_limits<std::uint32_t>::max()) {
            throw ParseError("exponent must be a non-negative integer", e.offset);
        }
        return pow(base, static_cast<std::uint32_t>(e.value.get_num().get_ui()));
    }

    Polynomial atom() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::Number: return Polynomial::constant(n_, GaussianRational(t.value));
            case Tok::Imag: return Polynomial::constant(n_, GaussianRational(Rational(0), t.value));
            case Tok::Var: return Polynomial::variable(n_, t.index);
            case Tok::LParen: {
                Polynomial inner = expr();
                if (peek().kind != Tok::RParen) {
                    throw ParseError("expected ')'", peek().offset);
                }
                next();
                return inner;
            }
            case Tok::End: throw ParseError("unexpected end of input", t.offset);
            default: throw ParseError("expected a number, variable or '('", t.offset);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t n_;
};

std::string format_monomial(const ExponentVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'z' + std::to_string(i + 1);
        if (e[i] > 1) {
            out += '^' + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t min_vars) {
    std::vector<Token> toks = lex(text);
    std::size_t n = std::max<std::size_t>(min_vars, 1);
    for (const auto& t : toks) {
        if (t.kind == Tok::Var) {
            n = std::max(n, t.index);
        }
    }
    return Parser(std::move(toks), n).parse();
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const GaussianRational& c = t.coefficient;
        const std::string mono = format_monomial(t.exponents);
        bool negative = false;
        std::string body;
        if (c.is_real() || sgn(c.re()) == 0) {
            const bool real = c.is_real();
            const Rational& part = real ? c.re() : c.im();
            negative = sgn(part) < 0;
            const Rational magnitude = abs(part);
            std::string literal = magnitude.get_str();
            if (!real) {
                literal = magnitude == 1 ? "i" : literal + "i";
            }
            if (mono.empty()) {
                body = literal;
            } else if (real && magnitude == 1) {
                body = mono;
            } else {
                body = literal + "*" + mono;
            }
        } else {
            body = "(" + c.to_string() + ")";
            if (!mono.empty()) {
                body += "*" + mono;
            }
        }
        if (first) {
            out = (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace hnkit
