#include "qehrhart/render.hpp"

#include <cctype>
#include <sstream>

#include "qehrhart/errors.hpp"

namespace qe {

namespace {

std::string power_of(const std::string& var, int k) {
    if (k == 0) return "1";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

// One monomial c * var^k with |c| already taken; returns "" for c == 1, k >= 1.
std::string monomial_body(const mpz_class& c, const std::string& var, int k) {
    if (k == 0) return c.get_str();
    std::string vp = power_of(var, k);
    if (c == 1) return vp;
    return c.get_str() + "*" + vp;
}

}  // namespace

std::string render(const ZPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        mpz_class c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << monomial_body(abs(c), var, k);
    }
    return out.str();
}

std::string render(const QRat& r) {
    if (r.is_polynomial()) return render(r.num());
    return "( " + render(r.num()) + " ) / ( " + render(r.den()) + " )";
}

namespace {

// Coefficient of var^k as a multiplicative prefix; |coeff| assumed
// sign-normalized by the caller. Multi-term or fractional coefficients are
// parenthesized so the product parses back unambiguously.
std::string coeff_prefix(const QRat& c, const std::string& var, int k) {
    if (k == 0) return render(c);
    std::string vp = power_of(var, k);
    if (c.is_polynomial()) {
        const ZPoly& p = c.num();
        int terms = 0;
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coeff(i) != 0) ++terms;
        if (terms == 1) {
            if (p == ZPoly(1)) return vp;
            return monomial_body(p.leading(), "q", p.degree()) + "*" + vp;
        }
        return "(" + render(p) + ")*" + vp;
    }
    return "(" + render(c) + ")*" + vp;
}

}  // namespace

std::string render(const XPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        QRat c = f.coeff(k);
        if (c.is_zero()) continue;
        bool neg = c.is_negative_leading();
        if (neg) c = -c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << coeff_prefix(c, var, k);
    }
    return out.str();
}

std::string render_series_numerator(const SeriesTQ& s) {
    // Series numerators read in ascending powers of t.
    XPoly f(s.numerator());
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= f.degree(); ++k) {
        QRat c = f.coeff(k);
        if (c.is_zero()) continue;
        bool neg = c.is_negative_leading();
        if (neg) c = -c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << coeff_prefix(c, "t", k);
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& text;
    const std::string& var;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" + text + "'");
    }

    XPoly parse_expr() {
        XPoly acc = parse_term();
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    XPoly parse_term() {
        XPoly acc = parse_factor();
        while (true) {
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (eat('/')) {
                XPoly rhs = parse_factor();
                if (rhs.degree() > 0) fail("division by an expression in the main variable");
                if (rhs.is_zero()) fail("division by zero");
                acc = acc / rhs.coeff(0);
            } else {
                return acc;
            }
        }
    }

    XPoly parse_factor() {
        if (eat('-')) return -parse_factor();
        XPoly base = parse_atom();
        if (eat('^')) {
            int e = parse_uint();
            return base.pow(e);
        }
        return base;
    }

    int parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected exponent");
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::stoi(text.substr(start, pos - start));
    }

    XPoly parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            XPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return XPoly(QRat(ZPoly(mpz_class(text.substr(start, pos - start)))));
        }
        if (text.compare(pos, var.size(), var) == 0) {
            pos += var.size();
            return XPoly::x();
        }
        if (c == 'q') {
            ++pos;
            return XPoly(QRat::q_power(1));
        }
        fail("unexpected character");
    }
};

}  // namespace

XPoly parse_xpoly(const std::string& text, const std::string& var) {
    Parser parser{text, var};
    XPoly result = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return result;
}

QRat parse_qrat(const std::string& text) {
    XPoly p = parse_xpoly(text, "x");
    if (p.degree() > 0) throw ParseError("expected an expression in q only: '" + text + "'");
    return p.coeff(0);
}

}  // namespace qe
