#pragma once

#include <vector>

#include "qehrhart/series.hpp"
#include "qehrhart/xpoly.hpp"
#include "qehrhart/zpoly.hpp"

namespace qe {

/// The q-integer [n]_q = (q^n - 1)/(q - 1); for negative n a Laurent value,
/// e.g. [-1]_q = -1/q.
QRat q_integer(int n);

/// [n]!_q = [1]_q [2]_q ... [n]_q.
ZPoly q_factorial(int n);

/// Gaussian binomial coefficient; zero when m > n. Computed by the q-Pascal
/// recurrence, so the result is a polynomial.
ZPoly gaussian_binomial(int n, int m);

/// The N-th cyclotomic polynomial, by exact division of q^N - 1 by the
/// cyclotomic polynomials of the proper divisors of N.
ZPoly cyclotomic(int n);

/// f evaluated at x = [n]_q.
QRat eval_at_q_integer(const XPoly& f, int n);

/// Unique polynomial of degree < #nodes through the given (abscissa,
/// ordinate) pairs, by Newton divided differences.
XPoly interpolate(const std::vector<std::pair<QRat, QRat>>& nodes);

/// Coefficients c_j with f = sum_j c_j y^j for y = 1 + (q-1)x, so that
/// f([n]_q) = sum_j c_j q^{nj}.
std::vector<QRat> to_y_basis(const XPoly& f);
XPoly from_y_basis(const std::vector<QRat>& coeffs);

/// Hahn difference operator (f(1+qx) - f(x)) / (1 + qx - x), a q-analogue
/// of the derivative. The division is always exact.
XPoly hahn_delta(const XPoly& f);

/// The unique f with hahn_delta(f) = g and f divisible by 1 + qx.
XPoly hahn_antiderivative(const XPoly& g);

/// Carlitz q-Bernoulli number: beta_0 = 1 and q(q beta + 1)^n - beta_n
/// equals 1 for n = 1 and 0 for n > 1, where beta^k is replaced by beta_k
/// after expanding the binomial power. Specializes to the classical
/// Bernoulli number at q = 1.
QRat carlitz_bernoulli(int n);

/// Linear form mapping x^n to carlitz_bernoulli(n).
QRat umbra(const XPoly& f);

/// Recover the polynomial L with L([n]_q) = t^n Taylor coefficient of the
/// series, via partial fractions and the y-basis.
XPoly series_to_xpoly(const SeriesTQ& series);

/// Series sum_j c_j / (1 - q^j t) for the y-basis coefficients of L; the
/// t^n coefficient is L([n]_q).
SeriesTQ xpoly_to_series(const XPoly& polynomial);

}  // namespace qe
