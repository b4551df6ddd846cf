#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ultraspec/polynomial.hpp"
#include "ultraspec/rational_function.hpp"
#include "ultraspec/ultrametric.hpp"
#include "ultraspec/valuation.hpp"

namespace ultraspec {

// Malformed CLI/text input. Carries the byte offset of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

/**
 * Shared cursor for the small text formats: rationals, bracketed
 * coefficient lists, symbolic polynomials, ball specs. U+2212 (the
 * typographic minus) is accepted wherever '-' is.
 */
class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= s_.size(); }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool eat(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    // '-' or the UTF-8 bytes of U+2212.
    bool eat_minus() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return true;
        }
        if (pos_ + 2 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xE2 &&
            static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[pos_ + 2]) == 0x92) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool eat_plus() {
        skip_ws();
        if (peek() != '+') return false;
        ++pos_;
        return true;
    }

    Int digits() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected digit", pos_);
        Int n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + (peek() - '0');
            ++pos_;
        }
        return n;
    }

    // -?digits(/digits)?
    Rational rational() {
        const bool neg = eat_minus();
        Int num = digits();
        if (neg) num = -num;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            const std::size_t den_pos = pos_;
            const Int den = digits();
            if (den == 0) throw ParseError("zero denominator", den_pos);
            return Rational(num, den);
        }
        return Rational(num, Int(1));
    }

    // Nonnegative integer exponent.
    unsigned long long exponent() {
        const Int e = digits();
        if (e > 1000000) throw ParseError("exponent too large", pos_);
        return e.convert_to<unsigned long long>();
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := atom ('^' uint)? ; atom := '(' expr ')' | 'x' | rational
inline Poly poly_expr(Cursor& c);

inline Poly poly_atom(Cursor& c) {
    c.skip_ws();
    if (c.eat('(')) {
        Poly p = poly_expr(c);
        c.expect(')', "')'");
        return p;
    }
    if (c.peek() == 'x' || c.peek() == 'X') {
        c.eat(c.peek());
        return Poly::x();
    }
    return Poly::constant(c.rational());
}

inline Poly poly_factor(Cursor& c) {
    Poly base = poly_atom(c);
    c.skip_ws();
    if (c.eat('^')) {
        unsigned long long e = c.exponent();
        Poly out = Poly::constant(Rational(1));
        for (unsigned long long k = 0; k < e; ++k) out = out * base;
        return out;
    }
    return base;
}

inline Poly poly_term(Cursor& c) {
    Poly out = poly_factor(c);
    c.skip_ws();
    while (c.eat('*')) {
        out = out * poly_factor(c);
        c.skip_ws();
    }
    return out;
}

inline Poly poly_expr(Cursor& c) {
    c.skip_ws();
    bool neg = false;
    if (c.eat_minus()) neg = true;
    else c.eat_plus();
    Poly out = poly_term(c);
    if (neg) out = -out;
    for (;;) {
        c.skip_ws();
        if (c.eat_plus())       out = out + poly_term(c);
        else if (c.eat_minus()) out = out - poly_term(c);
        else break;
    }
    return out;
}

} // namespace detail

// Strict whole-string rational: -?digits(/digits)?
inline Rational parse_rational(std::string_view text) {
    detail::Cursor c(text);
    const Rational r = c.rational();
    c.skip_ws();
    if (!c.at_end()) throw ParseError("trailing characters after rational", c.pos());
    return r;
}

// "[a, b, c]" with rational entries; "[]" is the empty list.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    detail::Cursor c(text);
    c.expect('[', "'['");
    std::vector<Rational> out;
    c.skip_ws();
    if (!c.eat(']')) {
        out.push_back(c.rational());
        while (c.eat(',')) out.push_back(c.rational());
        c.expect(']', "']' or ','");
    }
    c.skip_ws();
    if (!c.at_end()) throw ParseError("trailing characters after list", c.pos());
    return out;
}

/**
 * Polynomial from either format: a bracketed coefficient list, lowest
 * degree first ("[-1, 0, 1]" is x^2 - 1), or a symbolic expression in
 * x ("(x-1)^2*(x+2)").
 */
inline Poly parse_poly(std::string_view text) {
    detail::Cursor probe(text);
    probe.skip_ws();
    if (probe.peek() == '[') return Poly(parse_rational_list(text));

    detail::Cursor c(text);
    Poly p = detail::poly_expr(c);
    c.skip_ws();
    if (!c.at_end()) throw ParseError("trailing characters after polynomial", c.pos());
    return p;
}

/**
 * Rational function "num/den" where each side is a polynomial in
 * either text format; a bare polynomial means den = 1. The split is
 * the first '/' outside brackets and parentheses that leaves two
 * parseable polynomials (so coefficient fractions like 1/2 stay
 * intact).
 */
inline RationalFunction parse_rational_function(std::string_view text) {
    try {
        return RationalFunction::from_poly(parse_poly(text));
    } catch (const ParseError&) {
        // fall through to a split
    }

    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '[' || ch == '(') ++depth;
        else if (ch == ']' || ch == ')') --depth;
        else if (ch == '/' && depth == 0) {
            Poly num, den;
            try {
                num = parse_poly(text.substr(0, i));
                den = parse_poly(text.substr(i + 1));
            } catch (const ParseError&) {
                continue; // not the splitting slash; keep scanning
            }
            if (den.is_zero()) throw ParseError("division by zero", i + 1);
            return RationalFunction(num, den);
        }
    }
    throw ParseError("expected a rational function", 0);
}

/**
 * Ball spec "center,radius,kind": center a rational, radius a rational
 * that must be an exact power of p (the value group), kind "open" or
 * "closed".
 */
inline Ball parse_ball(const PAdicContext& ctx, std::string_view text) {
    const std::size_t c1 = text.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
        throw ParseError("ball spec needs center,radius,kind", 0);

    const Rational center = parse_rational(text.substr(0, c1));
    const Rational radius = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));

    if (radius.sign() <= 0) throw ParseError("ball radius must be positive", c1 + 1);
    const long long k = vp_rat(ctx, radius).exponent();
    if (radius != pow_rational(Rational(ctx.p()), k))
        throw ParseError("ball radius must be a power of p", c1 + 1);

    std::string kind(text.substr(c2 + 1));
    kind.erase(0, kind.find_first_not_of(" \t"));
    kind.erase(kind.find_last_not_of(" \t") + 1);
    BallKind bk;
    if (kind == "open") bk = BallKind::Open;
    else if (kind == "closed") bk = BallKind::Closed;
    else throw ParseError("ball kind must be open or closed", c2 + 1);

    return Ball(center, AbsValue::ppow(k), bk);
}

} // namespace ultraspec
