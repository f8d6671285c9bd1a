#include "salembraid/ring.hpp"

namespace salembraid {

namespace {

// Recursive-descent parser for the canonical entry syntax:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | atom ('^' ['-'] INT)*
//   atom   := INT | IDENT | '(' expr ')'
struct Parser {
    const std::string& s;
    const VarsPtr& vars;
    size_t pos = 0;
    int line;
    int col = 1;

    Parser(const std::string& src, const VarsPtr& v, int line_base)
        : s(src), vars(v), line(line_base) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' || s[pos] == '\n')) {
            if (s[pos] == '\n') {
                ++line;
                col = 0;
            }
            ++pos;
            ++col;
        }
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    void advance() {
        ++pos;
        ++col;
    }

    bool eat(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    mpz_class parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') advance();
        if (start == pos) fail("expected an integer");
        return mpz_class(s.substr(start, pos - start), 10);
    }

    long parse_exponent() {
        bool neg = eat('-');
        mpz_class v = parse_int();
        if (!v.fits_slong_p()) fail("exponent out of range");
        long e = v.get_si();
        return neg ? -e : e;
    }

    RatFunc parse_atom() {
        char c = peek();
        if (c == '(') {
            advance();
            RatFunc r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c >= '0' && c <= '9')
            return RatFunc(LaurentPoly::constant(vars, parse_int()));
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   ((s[pos] >= 'a' && s[pos] <= 'z') || (s[pos] >= 'A' && s[pos] <= 'Z') ||
                    (s[pos] >= '0' && s[pos] <= '9') || s[pos] == '_'))
                advance();
            std::string name = s.substr(start, pos - start);
            auto idx = vars->find(name);
            if (!idx) fail("unknown variable '" + name + "'");
            return RatFunc::variable(vars, *idx);
        }
        if (c == '\0') fail("unexpected end of expression");
        fail(std::string("unexpected character '") + c + "'");
    }

    RatFunc parse_factor() {
        if (eat('-')) return -parse_factor();
        RatFunc r = parse_atom();
        while (eat('^')) r = r.pow(parse_exponent());
        return r;
    }

    RatFunc parse_term() {
        RatFunc r = parse_factor();
        for (;;) {
            if (eat('*')) {
                r = r * parse_factor();
            } else if (eat('/')) {
                RatFunc d = parse_factor();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatFunc parse_expr() {
        RatFunc r = parse_term();
        for (;;) {
            if (eat('+')) {
                r = r + parse_term();
            } else if (eat('-')) {
                r = r - parse_term();
            } else {
                return r;
            }
        }
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& src, const VarsPtr& vars, int line_base) {
    Parser p(src, vars, line_base);
    RatFunc r = p.parse_expr();
    if (p.peek() != '\0') p.fail("trailing input after expression");
    return r;
}

LaurentPoly parse_laurent(const std::string& src, const VarsPtr& vars, int line_base) {
    RatFunc r = parse_ratfunc(src, vars, line_base);
    auto l = r.as_laurent();
    if (!l)
        throw ParseError("expression is not a Laurent polynomial (nontrivial denominator)",
                         line_base, 1);
    return *l;
}

}  // namespace salembraid
