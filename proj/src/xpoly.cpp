#include "qehrhart/xpoly.hpp"

#include <algorithm>

#include "qehrhart/errors.hpp"

namespace qe {

XPoly::XPoly(QRat constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

XPoly::XPoly(std::vector<QRat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

XPoly::XPoly(std::initializer_list<QRat> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { normalize(); }

XPoly XPoly::monomial(QRat c, int k) {
    if (c.is_zero()) return XPoly();
    std::vector<QRat> v(static_cast<size_t>(k) + 1);
    v[static_cast<size_t>(k)] = std::move(c);
    return XPoly(std::move(v));
}

void XPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QRat XPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return QRat();
    return coeffs_[static_cast<size_t>(k)];
}

const QRat& XPoly::leading() const {
    if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

XPoly XPoly::operator-() const {
    std::vector<QRat> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return XPoly(std::move(v));
}

XPoly XPoly::operator+(const XPoly& other) const {
    std::vector<QRat> v(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
    return XPoly(std::move(v));
}

XPoly XPoly::operator-(const XPoly& other) const {
    std::vector<QRat> v(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
    return XPoly(std::move(v));
}

XPoly XPoly::operator*(const XPoly& other) const {
    if (is_zero() || other.is_zero()) return XPoly();
    std::vector<QRat> v(coeffs_.size() + other.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * other.coeffs_[j];
    return XPoly(std::move(v));
}

XPoly XPoly::operator*(const QRat& scalar) const {
    if (scalar.is_zero()) return XPoly();
    std::vector<QRat> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * scalar;
    return XPoly(std::move(v));
}

XPoly XPoly::operator/(const QRat& scalar) const { return *this * scalar.inverse(); }

XPoly XPoly::pow(int e) const {
    if (e < 0) throw PreconditionError("negative polynomial exponent");
    XPoly result{QRat(1)};
    XPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

QRat XPoly::eval(const QRat& point) const {
    QRat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

XPoly XPoly::compose(const XPoly& inner) const {
    XPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + XPoly(*it);
    return acc;
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<QRat> rem(coeffs_);
    int dd = divisor.degree();
    int dq = degree() - dd;
    if (dq < 0) return {XPoly(), *this};
    std::vector<QRat> quot(static_cast<size_t>(dq) + 1);
    QRat inv_lead = divisor.leading().inverse();
    for (int d = degree(); d >= dd; --d) {
        QRat& lead = rem[static_cast<size_t>(d)];
        if (lead.is_zero()) continue;
        QRat f = lead * inv_lead;
        quot[static_cast<size_t>(d - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(d - dd + i)] -= f * divisor.coeffs_[static_cast<size_t>(i)];
    }
    return {XPoly(std::move(quot)), XPoly(std::move(rem))};
}

XPoly XPoly::div_exact(const XPoly& divisor) const {
    auto [quot, rem] = divmod(divisor);
    if (!rem.is_zero()) throw InternalError("inexact polynomial division in x");
    return quot;
}

XPoly XPoly::coeffs_inverse_q() const {
    std::vector<QRat> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i].subst_inverse_q();
    return XPoly(std::move(v));
}

}  // namespace qe
