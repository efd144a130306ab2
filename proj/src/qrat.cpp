#include "qehrhart/qrat.hpp"

#include "qehrhart/errors.hpp"

namespace qe {

QRat::QRat(ZPoly numerator, ZPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
}

QRat::QRat(const mpq_class& value) : num_(mpz_class(value.get_num())), den_(mpz_class(value.get_den())) {}

void QRat::canonicalize() {
    if (den_.is_zero()) throw PreconditionError("zero denominator");
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = ZPoly::gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRat QRat::q_power(int k) {
    if (k >= 0) return QRat(ZPoly::monomial(1, k));
    return QRat(ZPoly(1), ZPoly::monomial(1, -k));
}

QRat QRat::operator-() const {
    QRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QRat QRat::operator+(const QRat& other) const {
    return QRat(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

QRat QRat::operator-(const QRat& other) const {
    return QRat(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

QRat QRat::operator*(const QRat& other) const { return QRat(num_ * other.num_, den_ * other.den_); }

QRat QRat::operator/(const QRat& other) const {
    if (other.is_zero()) throw PreconditionError("division by zero");
    return QRat(num_ * other.den_, den_ * other.num_);
}

QRat QRat::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero");
    return QRat(den_, num_);
}

QRat QRat::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    QRat result(1);
    QRat base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

QRat QRat::subst_inverse_q() const {
    // num(1/q)/den(1/q) = rev(num) q^{deg den} / (rev(den) q^{deg num}).
    if (is_zero()) return QRat();
    ZPoly n = num_.reversed() * ZPoly::monomial(1, den_.degree());
    ZPoly d = den_.reversed() * ZPoly::monomial(1, num_.degree());
    return QRat(std::move(n), std::move(d));
}

mpq_class QRat::eval(const mpq_class& q) const {
    mpq_class d = den_.eval(q);
    if (d == 0) throw PreconditionError("evaluation at a pole");
    mpq_class r = num_.eval(q) / d;
    r.canonicalize();
    return r;
}

}  // namespace qe
