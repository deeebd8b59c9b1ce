#include "bidyn/parse.hpp"

#include <cctype>

namespace bidyn {

namespace {

struct Parser {
    const std::string& text;
    VarList vars;
    std::size_t pos = 0;
    int line = 1, col = 1;

    Parser(const std::string& t, VarList v) : text(t), vars(std::move(v)) {}

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }
    int peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : -1;
    }
    bool accept(char c) {
        if (peek() == c) { advance(); return true; }
        return false;
    }

    PolyQ expr() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        PolyQ acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    PolyQ term() {
        PolyQ acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    PolyQ factor() {
        PolyQ b = base();
        if (accept('^')) {
            int c = peek();
            if (!std::isdigit(c)) fail("expected exponent");
            unsigned long e = uint_lit();
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    unsigned long uint_lit() {
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos];
            advance();
        }
        return std::stoul(digits);
    }

    PolyQ base() {
        int c = peek();
        if (c == '(') {
            advance();
            PolyQ e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(c)) {
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                digits += text[pos];
                advance();
            }
            if (pos < text.size() && text[pos] == '.') fail("non-integer literal");
            return PolyQ::constant(vars, Rat(Int(digits)));
        }
        if (std::isalpha(c) || c == '_') {
            std::string name;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                name += text[pos];
                advance();
            }
            for (std::size_t i = 0; i < vars->size(); ++i)
                if ((*vars)[i] == name) return PolyQ::variable(vars, i, Rat(1));
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected input");
    }
};

}  // namespace

PolyQ parse_poly(const std::string& text, VarList vars) {
    Parser p(text, vars);
    if (p.peek() == -1) p.fail("empty expression");
    PolyQ r = p.expr();
    if (p.peek() != -1) p.fail("trailing input");
    return r;
}

std::string render_poly(const PolyQ& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        Rat c = it->second;
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rat a = neg ? Rat(-c) : c;
        bool any_var = total_degree(it->first) > 0;
        std::string cs = a.get_str();
        bool one = (cs == "1");
        if (!one || !any_var) out += cs;
        bool star = !one && any_var;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (star) out += "*";
            star = true;
            out += (*f.vars)[i];
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace bidyn
