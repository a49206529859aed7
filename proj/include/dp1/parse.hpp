/* Recursive-descent parser for the polynomial text grammar:
 *
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := rational | var | 't' | factor '^' int
 *   var    in {x,y,z,w} or {p,q,r,s}; whitespace insignificant;
 *   rationals as "n" or "n/m".
 *
 * Variable exponents must be nonnegative integers; exponents of t may be
 * negative (Laurent form).
 */
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dp1/wpoly.hpp"

namespace dp1 {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, VarSet set) : text_(text), set_(set) {}

    WPoly parse() {
        WPoly r = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    std::string_view text_;
    VarSet set_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    WPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        WPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            WPoly t = parse_term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    WPoly parse_term() {
        WPoly acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    WPoly parse_factor() {
        WPoly base = parse_atom();
        while (peek() == '^') {
            ++pos_;
            long long e = parse_int();
            if (e < 0) {
                // negative exponents are only meaningful on t-monomials
                TCoeff single;
                if (base.term_count() == 1 &&
                    base.terms().begin()->first == Mono{}) {
                    TCoeff c = base.terms().begin()->second;
                    if (c.terms().size() == 1 &&
                        c.terms().begin()->second.is_one()) {
                        int te = c.terms().begin()->first;
                        base = WPoly::constant(
                            TCoeff::t(static_cast<int>(te * e)), set_);
                        continue;
                    }
                }
                throw ParseError("negative exponent on a variable", pos_);
            }
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    WPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            WPoly inner = parse_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                name.push_back(text_[pos_]);
                ++pos_;
            }
            if (name == "t") return WPoly::constant(TCoeff::t(1), set_);
            const char* names = set_ == VarSet::XYZW ? "xyzw" : "pqrs";
            if (name.size() == 1) {
                for (int v = 0; v < 4; ++v) {
                    if (name[0] == names[v]) return WPoly::variable(v, set_);
                }
            }
            throw ParseError("unknown variable " + name, start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    WPoly parse_rational() {
        BigInt n = parse_unsigned_bigint();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected denominator", pos_);
            BigInt d = parse_unsigned_bigint();
            return WPoly::constant(TCoeff(Rational(n, d)), set_);
        }
        return WPoly::constant(TCoeff(Rational(n)), set_);
    }

    BigInt parse_unsigned_bigint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return BigInt::from_string(text_.substr(start, pos_ - start));
    }

    long long parse_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        BigInt v = parse_unsigned_bigint();
        long long r = v.to_ll();
        return neg ? -r : r;
    }
};

}  // namespace detail

// may also be used for pure coefficient strings such as "3/2*t^4 + t^5"
inline WPoly parse_wpoly(std::string_view text, VarSet set = VarSet::XYZW,
                         std::optional<int> require_degree = std::nullopt) {
    detail::PolyParser p(text, set);
    WPoly r = p.parse();
    if (require_degree && !r.is_homogeneous(*require_degree))
        throw ParseError("polynomial is not homogeneous of weighted degree " +
                             std::to_string(*require_degree),
                         0);
    return r;
}

inline TCoeff parse_tcoeff(std::string_view text) {
    WPoly p = parse_wpoly(text, VarSet::XYZW);
    TCoeff r;
    for (const auto& [m, c] : p.terms()) {
        if (!(m == Mono{}))
            throw ParseError("expected a coefficient in t only", 0);
        r += c;
    }
    return r;
}

}  // namespace dp1
