#pragma once

#include <gmpxx.h>

#include "qehrhart/zpoly.hpp"

namespace qe {

/// Rational function in q with integer-coefficient numerator and denominator
/// in canonical reduced form: gcd(num, den) = 1 in Z[q] (including integer
/// content) and den has a positive leading coefficient. Canonical forms are
/// unique, so structural equality is semantic equality.
class QRat {
  public:
    QRat() : num_(), den_(1) {}
    QRat(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit QRat(const mpz_class& value) : num_(value), den_(1) {}
    explicit QRat(ZPoly numerator) : num_(std::move(numerator)), den_(1) {}
    QRat(ZPoly numerator, ZPoly denominator);
    explicit QRat(const mpq_class& value);

    /// q^k for any integer k (negative k gives 1/q^{|k|}).
    static QRat q_power(int k);

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0 && den_.coeff(0) == 1; }

    bool operator==(const QRat& other) const { return num_ == other.num_ && den_ == other.den_; }

    QRat operator-() const;
    QRat operator+(const QRat& other) const;
    QRat operator-(const QRat& other) const;
    QRat operator*(const QRat& other) const;
    QRat operator/(const QRat& other) const;
    QRat& operator+=(const QRat& other) { return *this = *this + other; }
    QRat& operator-=(const QRat& other) { return *this = *this - other; }
    QRat& operator*=(const QRat& other) { return *this = *this * other; }
    QRat& operator/=(const QRat& other) { return *this = *this / other; }

    QRat inverse() const;
    QRat pow(int e) const;

    /// Substitute q -> 1/q.
    QRat subst_inverse_q() const;

    /// Exact evaluation at a rational q; throws PreconditionError when the
    /// denominator vanishes there.
    mpq_class eval(const mpq_class& q) const;

    /// Leading numerator coefficient is negative (used for sign-aware
    /// rendering; the denominator is always positive-leading).
    bool is_negative_leading() const { return !num_.is_zero() && num_.leading() < 0; }

  private:
    void canonicalize();

    ZPoly num_;
    ZPoly den_;
};

}  // namespace qe
