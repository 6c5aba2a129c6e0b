#include "hamop/io.hpp"

#include <cctype>

#include "hamop/error.hpp"

namespace hamop {
namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        if (i >= s.size()) throw ParseError("unexpected end of expression");
        return s[i++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip();
        size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }
    mpz_class integer() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        mpz_class r(s.substr(i, j - i));
        i = j;
        return r;
    }
};

struct Parser {
    Lexer lx;
    const TablePtr& tab;

    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                lx.get();
                r = r + term();
            } else if (c == '-') {
                lx.get();
                r = r - term();
            } else {
                return r;
            }
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        while (true) {
            char c = lx.peek();
            if (c == '*') {
                lx.get();
                r = r * unary();
            } else if (c == '/') {
                lx.get();
                r = r / unary();
            } else {
                return r;
            }
        }
    }

    RatFunc unary() {
        if (lx.peek() == '-') {
            lx.get();
            return -unary();
        }
        if (lx.peek() == '+') {
            lx.get();
            return unary();
        }
        return factor();
    }

    RatFunc factor() {
        RatFunc b = base();
        if (lx.accept('^')) {
            char c = lx.peek();
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("exponent must be a non-negative integer");
            mpz_class e = lx.integer();
            if (e > 64) throw ParseError("exponent too large");
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    RatFunc base() {
        char c = lx.peek();
        if (c == '(') {
            lx.get();
            RatFunc r = expr();
            if (!lx.accept(')')) throw ParseError("missing ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n = lx.integer();
            return RatFunc(Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lx.ident();
            int id = tab->index_of(name);
            if (id < 0) throw UnknownVariable("unknown variable '" + name + "'");
            return RatFunc(Poly::var(tab, id));
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& src, const TablePtr& tab) {
    Parser p{Lexer{src}, tab};
    RatFunc r = p.expr();
    if (!p.lx.eof()) throw ParseError("trailing input after expression");
    // constants come out table-less; anchor the result to the given table
    if (!r.table()) r = RatFunc(r.num().anchored(tab), r.den().anchored(tab));
    return r;
}

Poly parse_poly(const std::string& src, const TablePtr& tab) {
    RatFunc r = parse_ratfunc(src, tab);
    if (!r.is_polynomial()) {
        if (r.den().is_constant()) return r.num().scaled(Rational(1) / r.den().constant_value());
        throw ParseError("expected a polynomial, found a proper rational function");
    }
    return r.num();
}

std::vector<std::string> scan_identifiers(const std::string& src) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            std::string name = src.substr(i, j - i);
            bool seen = false;
            for (auto& n : out)
                if (n == name) seen = true;
            if (!seen) out.push_back(name);
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace hamop
