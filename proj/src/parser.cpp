#include "newtonforge/parser.hpp"

#include <cctype>

namespace newtonforge {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char peek_at(std::size_t off) const { return pos + off < s.size() ? s[pos + off] : '\0'; }

    std::string digits() {
        std::size_t start = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }

    // sign? digits ('.' digits | '/' digits)? with exact decimal conversion.
    // A '/' is consumed into the literal only when plain digits follow it
    // (a decimal after the slash belongs to a division expression instead).
    mpq_class literal() {
        std::size_t start = pos;
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = (peek() == '-');
            ++pos;
        }
        std::string ip = digits();
        if (ip.empty()) throw ParseError("expected a rational literal", start);
        mpq_class value;
        if (peek() == '.' && is_digit(peek_at(1))) {
            ++pos;
            std::string fp = digits();
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
            value = mpq_class(mpz_class(ip) * scale + mpz_class(fp), scale);
        } else if (peek() == '/') {
            std::size_t slash = pos;
            ++pos;
            std::string dp = digits();
            if (dp.empty() || (peek() == '.' && is_digit(peek_at(1)))) {
                pos = slash;  // not part of the literal after all
                value = mpq_class(mpz_class(ip));
            } else {
                mpz_class den(dp);
                if (sgn(den) == 0) throw DomainError("zero denominator in literal");
                value = mpq_class(mpz_class(ip), den);
            }
        } else {
            value = mpq_class(mpz_class(ip));
        }
        value.canonicalize();
        return neg ? mpq_class(-value) : value;
    }

    unsigned parse_uint() {
        std::size_t start = pos;
        std::string d = digits();
        if (d.empty()) throw ParseError("expected an unsigned integer exponent", start);
        if (d.size() > 4) throw DomainError("exponent too large (limit 1024)");
        unsigned long e = std::stoul(d);
        if (e > 1024) throw DomainError("exponent too large (limit 1024)");
        return static_cast<unsigned>(e);
    }
};

struct ExprParser {
    Cursor cur;

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            cur.skip_ws();
            char c = cur.peek();
            if (c == '+') {
                ++cur.pos;
                acc = acc + term();
            } else if (c == '-') {
                ++cur.pos;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        for (;;) {
            cur.skip_ws();
            char c = cur.peek();
            if (c == '*') {
                ++cur.pos;
                acc = acc * factor();
            } else if (c == '/') {
                ++cur.pos;
                acc = acc / factor();
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction b = base();
        cur.skip_ws();
        if (cur.peek() == '^') {
            ++cur.pos;
            cur.skip_ws();
            return b.pow(cur.parse_uint());
        }
        return b;
    }

    RationalFunction base() {
        cur.skip_ws();
        char c = cur.peek();
        if (c == '(') {
            ++cur.pos;
            RationalFunction inner = expr();
            cur.skip_ws();
            if (cur.peek() != ')') throw ParseError("expected ')'", cur.pos);
            ++cur.pos;
            return inner;
        }
        if (c == 'z') {
            ++cur.pos;
            return RationalFunction::from_polynomial(Polynomial::variable());
        }
        if (c == '+' || c == '-' || is_digit(c))
            return RationalFunction::from_polynomial(Polynomial::constant(cur.literal()));
        throw ParseError("expected 'z', a rational literal, or '('", cur.pos);
    }
};

} // namespace

RationalFunction parse_rational(const std::string& text) {
    ExprParser p{Cursor{text, 0}};
    RationalFunction r = p.expr();
    p.cur.skip_ws();
    if (!p.cur.eof()) throw ParseError("unexpected trailing input", p.cur.pos);
    return r;
}

namespace {

// One component of a complex literal: signed rational with an optional
// trailing 'i', or a bare (signed) 'i'.
struct Component {
    mpq_class value;
    bool imaginary = false;
};

Component component(Cursor& cur) {
    Component out;
    if (cur.peek() == 'i' ||
        ((cur.peek() == '+' || cur.peek() == '-') && cur.peek_at(1) == 'i')) {
        bool neg = cur.peek() == '-';
        if (cur.peek() == '+' || cur.peek() == '-') ++cur.pos;
        ++cur.pos;
        out.value = neg ? -1 : 1;
        out.imaginary = true;
        return out;
    }
    out.value = cur.literal();
    if (cur.peek() == 'i') {
        ++cur.pos;
        out.imaginary = true;
    }
    return out;
}

} // namespace

RationalComplex parse_complex_rational(const std::string& text) {
    Cursor cur{text, 0};
    cur.skip_ws();
    if (cur.eof()) throw ParseError("empty scalar", 0);
    Component first = component(cur);
    cur.skip_ws();
    if (cur.eof()) {
        return first.imaginary ? RationalComplex(mpq_class(0), first.value)
                               : RationalComplex(first.value, mpq_class(0));
    }
    if (first.imaginary)
        throw ParseError("imaginary part must come last", cur.pos);
    if (cur.peek() != '+' && cur.peek() != '-')
        throw ParseError("expected '+' or '-' before the imaginary part", cur.pos);
    Component second = component(cur);
    if (!second.imaginary) throw ParseError("expected an imaginary part ending in 'i'", cur.pos);
    cur.skip_ws();
    if (!cur.eof()) throw ParseError("unexpected trailing input", cur.pos);
    return RationalComplex(first.value, second.value);
}

} // namespace newtonforge
