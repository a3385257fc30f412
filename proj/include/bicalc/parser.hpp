#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "bicalc/polynomial.hpp"

namespace bicalc {

namespace detail {

template <class T>
struct ScalarLexer;

template <>
struct ScalarLexer<double> {
    // decimal with optional exponent, shortest round-trip on reparse
    static double parse(std::string_view text, std::size_t& pos) {
        std::size_t start = pos, i = pos;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i < text.size() && text[i] == '.') {
            ++i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        }
        if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
            std::size_t j = i + 1;
            if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
            if (j < text.size() && std::isdigit((unsigned char)text[j])) {
                i = j;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            }
        }
        double value = 0.0;
        auto res = std::from_chars(text.data() + start, text.data() + i, value);
        if (res.ec != std::errc() || res.ptr == text.data() + start)
            throw ParseError(start, "number");
        pos = start + (res.ptr - (text.data() + start));
        return value;
    }

    static std::string format(double x) {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, res.ptr);
    }
};

template <>
struct ScalarLexer<Rational> {
    static Rational parse(std::string_view text, std::size_t& pos) {
        auto digits = [&]() {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            if (pos == start) throw ParseError(start, "digits");
            return std::string(text.substr(start, pos - start));
        };
        Rational value{boost::multiprecision::cpp_int(digits())};
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            boost::multiprecision::cpp_int den(digits());
            if (den == 0) throw ParseError(pos, "nonzero denominator");
            value /= Rational(den);
        } else if (pos < text.size() && text[pos] == '.') {
            ++pos;
            std::string frac = digits();
            boost::multiprecision::cpp_int scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            value += Rational(boost::multiprecision::cpp_int(frac)) / Rational(scale);
        }
        return value;
    }

    static std::string format(const Rational& x) {
        std::string s = numerator(x).str();
        if (denominator(x) != 1) s += "/" + denominator(x).str();
        return s;
    }
};

inline void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
}

}  // namespace detail

template <class T>
std::string format_scalar(const T& x) {
    return detail::ScalarLexer<T>::format(x);
}

/// Parses a bicomplex literal `a`, `a+bi`, `a+bi+cj+dk` starting at pos.
/// Scalars are decimals or p/q rationals; bare units i, j, k are accepted.
template <class T>
Bicomplex<T> parse_literal_at(std::string_view text, std::size_t& pos) {
    T x[4] = {T(0), T(0), T(0), T(0)};
    bool first = true;
    for (;;) {
        detail::skip_ws(text, pos);
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
            detail::skip_ws(text, pos);
        } else if (!first) {
            break;
        }
        T mag;
        bool have_mag = pos < text.size() && (std::isdigit((unsigned char)text[pos]) || text[pos] == '.');
        if (have_mag)
            mag = detail::ScalarLexer<T>::parse(text, pos);
        else
            mag = T(1);
        int slot = 0;
        if (have_mag) detail::skip_ws(text, pos);
        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            slot = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
            ++pos;
        } else if (!have_mag) {
            throw ParseError(pos, "number or unit i/j/k");
        }
        x[slot] += neg ? -mag : mag;
        first = false;
    }
    if (first) throw ParseError(pos, "bicomplex literal");
    return Bicomplex<T>::from_cartesian(x[0], x[1], x[2], x[3]);
}

template <class T>
Bicomplex<T> parse_literal(std::string_view text) {
    std::size_t pos = 0;
    Bicomplex<T> z = parse_literal_at<T>(text, pos);
    detail::skip_ws(text, pos);
    if (pos != text.size()) throw ParseError(pos, "end of input");
    return z;
}

/// Renders a bicomplex value in the Cartesian literal grammar.
template <class T>
std::string format_literal(const Bicomplex<T>& z) {
    static const char* units[4] = {"", "i", "j", "k"};
    auto x = z.to_cartesian();
    std::string out;
    for (int s = 0; s < 4; ++s) {
        if (x[s] == T(0)) continue;
        bool neg = x[s] < T(0);
        T mag = neg ? T(-x[s]) : x[s];
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        out += format_scalar(mag);
        out += units[s];
    }
    return out.empty() ? "0" : out;
}

namespace detail {

template <class T>
struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;

    BCPolynomial<T> parse() {
        BCPolynomial<T> sum = parse_term(true);
        for (;;) {
            skip_ws(text, pos);
            if (pos >= text.size()) break;
            if (text[pos] == '+') {
                ++pos;
                sum += parse_term(false);
            } else if (text[pos] == '-') {
                ++pos;
                sum -= parse_term(false);
            } else {
                throw ParseError(pos, "'+' or '-'");
            }
        }
        return sum;
    }

    BCPolynomial<T> parse_term(bool allow_sign) {
        skip_ws(text, pos);
        bool neg = false;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
        }
        BCPolynomial<T> prod = BCPolynomial<T>::constant(T(1));
        bool any = false;
        for (;;) {
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '*' && any) {
                ++pos;
                skip_ws(text, pos);
            }
            if (pos >= text.size()) break;
            char c = text[pos];
            if (c == '(') {
                ++pos;
                Bicomplex<T> lit = parse_literal_at<T>(text, pos);
                skip_ws(text, pos);
                if (pos >= text.size() || text[pos] != ')') throw ParseError(pos, "')'");
                ++pos;
                prod = prod.scaled(lit);
            } else if (c == 'Z') {
                prod *= parse_varpow();
            } else if (std::isdigit((unsigned char)c) || c == '.') {
                prod = prod.scaled(Bicomplex<T>(ScalarLexer<T>::parse(text, pos)));
            } else {
                break;
            }
            any = true;
        }
        if (!any) throw ParseError(pos, "coefficient, '(' literal ')' or variable Z/Zb/Zs/Zd");
        return neg ? -prod : prod;
    }

    BCPolynomial<T> parse_varpow() {
        ++pos;  // consumed 'Z'
        Var v = Var::Z;
        if (pos < text.size()) {
            if (text[pos] == 'b') { v = Var::Zbar; ++pos; }
            else if (text[pos] == 's') { v = Var::Zstar; ++pos; }
            else if (text[pos] == 'd') { v = Var::Zdag; ++pos; }
        }
        unsigned power = 1;
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws(text, pos);
            std::size_t start = pos;
            unsigned value = 0;
            auto res = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (res.ec != std::errc() || res.ptr == text.data() + start)
                throw ParseError(start, "integer exponent");
            pos = res.ptr - text.data();
            power = value;
        }
        ExponentQuad e;
        e[v] = power;
        return BCPolynomial<T>::monomial(e, Bicomplex<T>::one());
    }
};

}  // namespace detail

/// Parses the polynomial expression grammar (variables Z, Zb, Zs, Zd).
template <class T>
BCPolynomial<T> parse_expr(std::string_view text) {
    detail::ExprParser<T> p{text};
    return p.parse();
}

/// Canonical rendering: descending graded-lex term order; real coefficients
/// are printed bare, others as parenthesized literals. parse_expr inverts it.
template <class T>
std::string format_expr(const BCPolynomial<T>& P) {
    if (P.is_zero()) return "0";
    std::string out;
    for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string vars;
        struct { Var v; const char* name; } slots[4] = {
            {Var::Z, "Z"}, {Var::Zbar, "Zb"}, {Var::Zstar, "Zs"}, {Var::Zdag, "Zd"}};
        for (auto [v, name] : slots) {
            unsigned d = e[v];
            if (d == 0) continue;
            if (!vars.empty()) vars += ' ';
            vars += name;
            if (d > 1) vars += "^" + std::to_string(d);
        }
        bool real = c.l1 == c.l2 && c.l1.im == T(0);
        std::string body;
        bool neg = false;
        if (real) {
            T s = c.l1.re;
            neg = s < T(0);
            T mag = neg ? T(-s) : s;
            if (mag == T(1) && !vars.empty())
                body = vars;
            else
                body = format_scalar(mag) + (vars.empty() ? "" : " " + vars);
        } else {
            body = "(" + format_literal(c) + ")" + (vars.empty() ? "" : " " + vars);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace bicalc
