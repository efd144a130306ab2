#include "qehrhart/zpoly.hpp"

#include <algorithm>

#include "qehrhart/errors.hpp"

namespace qe {

ZPoly::ZPoly(long value) {
    if (value != 0) coeffs_.emplace_back(value);
}

ZPoly::ZPoly(const mpz_class& value) {
    if (value != 0) coeffs_.push_back(value);
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { normalize(); }

ZPoly ZPoly::monomial(const mpz_class& c, int k) {
    if (c == 0) return ZPoly();
    std::vector<mpz_class> v(static_cast<size_t>(k) + 1);
    v[static_cast<size_t>(k)] = c;
    return ZPoly(std::move(v));
}

void ZPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& ZPoly::leading() const {
    if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

mpz_class ZPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

ZPoly ZPoly::operator-() const {
    std::vector<mpz_class> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator+(const ZPoly& other) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& other) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const ZPoly& other) const {
    if (is_zero() || other.is_zero()) return ZPoly();
    std::vector<mpz_class> v(coeffs_.size() + other.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * other.coeffs_[j];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const mpz_class& scalar) const {
    if (scalar == 0) return ZPoly();
    std::vector<mpz_class> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * scalar;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::pow(int e) const {
    if (e < 0) throw PreconditionError("negative polynomial exponent");
    ZPoly result(1);
    ZPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    mpz_class g = content();
    std::vector<mpz_class> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] / g;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::derivative() const {
    if (coeffs_.size() <= 1) return ZPoly();
    std::vector<mpz_class> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * mpz_class(static_cast<long>(i));
    return ZPoly(std::move(v));
}

namespace {

// Rational long division: quotient and remainder of a/b over Q, returned as
// integer polynomials with a common denominator: a*den = b*quot + rem.
struct QDiv {
    ZPoly quot;
    ZPoly rem;
    mpz_class den;
};

QDiv divide_over_q(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    // Scale a by lc(b)^(deg a - deg b + 1) so the division stays integral.
    int k = a.degree() - b.degree() + 1;
    if (k <= 0) return {ZPoly(), a, 1};
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(k));
    std::vector<mpz_class> rem(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : rem) c *= den;
    std::vector<mpz_class> quot(static_cast<size_t>(k));
    const auto& bc = b.coeffs();
    int db = b.degree();
    for (int d = a.degree(); d >= db; --d) {
        mpz_class& lead = rem[static_cast<size_t>(d)];
        if (lead == 0) continue;
        mpz_class q = lead / bc.back();
        if (q * bc.back() != lead) throw InternalError("non-integral step in scaled division");
        quot[static_cast<size_t>(d - db)] = q;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(d - db + i)] -= q * bc[static_cast<size_t>(i)];
    }
    return {ZPoly(std::move(quot)), ZPoly(std::move(rem)), den};
}

}  // namespace

ZPoly ZPoly::div_exact(const ZPoly& divisor) const {
    if (is_zero()) return ZPoly();
    QDiv d = divide_over_q(*this, divisor);
    if (!d.rem.is_zero()) throw InternalError("inexact polynomial division");
    // quot/den must have integer entries for an exact Z[q] division result.
    std::vector<mpz_class> v(d.quot.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), d.quot.coeffs()[i].get_mpz_t(), d.den.get_mpz_t());
        if (r != 0) throw InternalError("inexact polynomial division (non-integer quotient)");
        v[i] = d.quot.coeffs()[i] / d.den;
    }
    return ZPoly(std::move(v));
}

bool ZPoly::divisible_by(const ZPoly& divisor) const {
    if (is_zero()) return true;
    if (divisor.is_zero()) return false;
    if (degree() < divisor.degree()) return false;
    return divide_over_q(*this, divisor).rem.is_zero();
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    // Primitive PRS on the primitive parts.
    ZPoly u = a.primitive_part();
    ZPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        ZPoly r = divide_over_q(u, v).rem;
        u = std::move(v);
        v = r.is_zero() ? ZPoly() : r.primitive_part();
    }
    ZPoly g = u * cont;
    if (g.leading() < 0) g = -g;
    return g;
}

mpq_class ZPoly::eval(const mpq_class& point) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + mpq_class(*it);
    return acc;
}

ZPoly ZPoly::reversed() const {
    std::vector<mpz_class> v(coeffs_.rbegin(), coeffs_.rend());
    return ZPoly(std::move(v));
}

}  // namespace qe
