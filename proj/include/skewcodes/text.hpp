/*
   Copyright 2026 The skewcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file text.hpp
 * @brief Text syntax for field elements, ring elements and skew polynomials.
 *
 * Grammar (whitespace ignored):
 *
 *     poly   := ['+' | '-'] term (('+' | '-') term)*
 *     term   := factor (['*'] factor)*
 *     factor := atom ['^' uint]
 *     atom   := uint | '[' int (',' int)* ']' | 'u' | 'x' | '(' poly ')'
 *
 * Products are evaluated in R[x; Theta], so "x*u" and "u*x" differ when Theta(u) != u.
 * Integers are reduced modulo p; "[c0,c1]" is c0 + c1 t in F_{p^m}.
 *
 * The printer lists terms by descending degree, field part before u part:
 * "x^2+u*x+2", "x+1+2*u". The compact form drops the '*' ("x+1+2u") and is used for
 * ideal labels.
 */

#ifndef SKEWCODES_TEXT_HPP
#define SKEWCODES_TEXT_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewpoly.hpp"

namespace skewcodes {

class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// Exponents above this are rejected by the parser.
inline constexpr int kMaxParseExponent = 4096;

namespace detail {

class PolyParser {
   public:
    PolyParser(std::string_view text, const FpmURing& ring, const Automorphism& t) : s_(text), ring_(ring), t_(t) {}

    Poly parse() {
        Poly f = poly();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_atom(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == '[' || c == 'u' || c == 'x' || c == '('; }

    Poly poly() {
        Poly acc(ring_);
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
        for (;;) {
            Poly t = term();
            acc = negate ? acc - t : acc + t;
            const char c = peek();
            if (c != '+' && c != '-') break;
            negate = c == '-';
            ++pos_;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
            } else if (!starts_atom(c)) {
                break;
            }
            acc = skew_mul(acc, factor(), t_);
        }
        return acc;
    }

    Poly factor() {
        Poly a = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
            const long long e = integer(kMaxParseExponent);
            a = skew_pow(a, static_cast<int>(e), t_);
        }
        return a;
    }

    long long integer(long long cap) {
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > cap) {
                pos_ = start;
                fail("integer out of range");
            }
        }
        return v;
    }

    Poly atom() {
        const char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ring_, ring_.from_int(integer(1'000'000'000)));
        ++pos_;
        switch (c) {
            case 'u': return Poly::constant(ring_, ring_.u());
            case 'x': return Poly::x(ring_);
            case '(': {
                Poly inner = poly();
                if (peek() != ')') fail("expected ')'");
                ++pos_;
                return inner;
            }
            case '[': {
                std::vector<int> coeffs;
                for (;;) {
                    bool neg = false;
                    if (peek() == '-') {
                        neg = true;
                        ++pos_;
                    }
                    skip();
                    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        fail("expected integer in field element");
                    const long long v = integer(1'000'000'000);
                    coeffs.push_back(detail::mod(neg ? -v : v, ring_.field().characteristic()));
                    if (peek() == ',') {
                        ++pos_;
                        continue;
                    }
                    if (peek() != ']') fail("expected ']'");
                    ++pos_;
                    break;
                }
                if (static_cast<int>(coeffs.size()) > ring_.field().degree())
                    fail("field element has more than m coefficients");
                return Poly::constant(ring_, ring_.embed(ring_.field().from_coeffs(coeffs)));
            }
            default:
                --pos_;
                fail("unexpected character '" + std::string(1, c) + "'");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    const FpmURing& ring_;
    const Automorphism& t_;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, const FpmURing& ring, const Automorphism& t) {
    return detail::PolyParser(text, ring, t).parse();
}

inline RingElement parse_ring_element(std::string_view text, const FpmURing& ring) {
    const Poly f = parse_poly(text, ring, ring.identity());
    if (f.degree() > 0) throw ParseError("expected a ring element, got a polynomial in x", 0);
    return f.coeff(0);
}

inline FieldElement parse_field_element(std::string_view text, const Field& field) {
    const RingElement a = parse_ring_element(text, FpmURing(field));
    if (!a.u_part().is_zero()) throw ParseError("expected a field element, got a multiple of u", 0);
    return a.constant();
}

namespace detail {

inline std::string monomial_text(int i) {
    if (i == 0) return "";
    if (i == 1) return "x";
    return "x^" + std::to_string(i);
}

// One term c*u^k*x^i with c a nonzero field element.
inline std::string term_text(const FieldElement& c, bool with_u, int i, bool compact) {
    const std::string star = compact ? "" : "*";
    std::string out;
    std::vector<std::string> parts;
    if (!c.is_one() || (!with_u && i == 0)) parts.push_back(c.to_string());
    if (with_u) parts.push_back("u");
    if (i > 0) parts.push_back(monomial_text(i));
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? star : "") + parts[k];
    return out;
}

}  // namespace detail

inline std::string to_string(const Poly& f, bool compact = false) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const RingElement& a = f.coeffs()[i];
        if (!a.constant().is_zero()) out += (out.empty() ? "" : "+") + detail::term_text(a.constant(), false, i, compact);
        if (!a.u_part().is_zero()) out += (out.empty() ? "" : "+") + detail::term_text(a.u_part(), true, i, compact);
    }
    return out;
}

inline std::string to_string(const RingElement& a, bool compact) {
    return to_string(Poly::constant(FpmURing(a.field()), a), compact);
}

}  // namespace skewcodes

#endif  // SKEWCODES_TEXT_HPP
