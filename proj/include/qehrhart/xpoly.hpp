#pragma once

#include <utility>
#include <vector>

#include "qehrhart/qrat.hpp"

namespace qe {

/// Polynomial in x with QRat coefficients. The leading coefficient is
/// nonzero unless the polynomial is zero.
class XPoly {
  public:
    XPoly() = default;
    explicit XPoly(QRat constant);
    explicit XPoly(std::vector<QRat> coeffs);
    /// Coefficients by increasing degree in x.
    XPoly(std::initializer_list<QRat> coeffs);

    static XPoly monomial(QRat c, int k);
    /// The polynomial x.
    static XPoly x() { return monomial(QRat(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    QRat coeff(int k) const;
    const QRat& leading() const;
    const std::vector<QRat>& coeffs() const { return coeffs_; }

    bool operator==(const XPoly& other) const { return coeffs_ == other.coeffs_; }

    XPoly operator-() const;
    XPoly operator+(const XPoly& other) const;
    XPoly operator-(const XPoly& other) const;
    XPoly operator*(const XPoly& other) const;
    XPoly operator*(const QRat& scalar) const;
    XPoly operator/(const QRat& scalar) const;

    XPoly pow(int e) const;

    QRat eval(const QRat& point) const;

    /// Substitute another polynomial for x.
    XPoly compose(const XPoly& inner) const;

    /// Long division over the field Q(q): *this = divisor * quot + rem with
    /// deg rem < deg divisor.
    std::pair<XPoly, XPoly> divmod(const XPoly& divisor) const;
    /// Quotient of an exact division; throws InternalError on a nonzero
    /// remainder.
    XPoly div_exact(const XPoly& divisor) const;

    /// Apply q -> 1/q to every coefficient.
    XPoly coeffs_inverse_q() const;

  private:
    void normalize();

    std::vector<QRat> coeffs_;
};

}  // namespace qe
