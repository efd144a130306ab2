#pragma once

#include <gmpxx.h>

#include <vector>

namespace qe {

/// Dense univariate polynomial in q with exact integer coefficients.
///
/// Coefficients are stored by increasing degree with no trailing zeros;
/// the zero polynomial has an empty coefficient vector.
class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(long value);
    explicit ZPoly(const mpz_class& value);
    explicit ZPoly(std::vector<mpz_class> coeffs);
    /// Coefficients by increasing degree: ZPoly{-1, 1} is q - 1.
    ZPoly(std::initializer_list<long> coeffs);

    /// The monomial c * q^k.
    static ZPoly monomial(const mpz_class& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& leading() const;
    mpz_class coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool operator==(const ZPoly& other) const { return coeffs_ == other.coeffs_; }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& other) const;
    ZPoly operator-(const ZPoly& other) const;
    ZPoly operator*(const ZPoly& other) const;
    ZPoly operator*(const mpz_class& scalar) const;

    ZPoly pow(int e) const;

    /// Greatest common divisor of the integer coefficients (nonnegative);
    /// 0 for the zero polynomial.
    mpz_class content() const;
    /// this / content(), keeping the sign of the leading coefficient.
    ZPoly primitive_part() const;
    ZPoly derivative() const;

    /// Exact division; throws InternalError when the division is not exact.
    ZPoly div_exact(const ZPoly& divisor) const;
    /// True iff divisor divides this exactly over the rationals.
    bool divisible_by(const ZPoly& divisor) const;

    /// GCD in Z[q], normalized to a positive leading coefficient.
    static ZPoly gcd(const ZPoly& a, const ZPoly& b);

    mpq_class eval(const mpq_class& point) const;

    /// q^{degree} * p(1/q); nonzero constant term becomes the new leading
    /// coefficient.
    ZPoly reversed() const;

  private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

}  // namespace qe
