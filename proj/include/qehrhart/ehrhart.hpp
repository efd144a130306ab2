#pragma once

#include <vector>

#include "qehrhart/algebra.hpp"
#include "qehrhart/polytope.hpp"
#include "qehrhart/series.hpp"
#include "qehrhart/xpoly.hpp"

namespace qe {

/// Weighted sum over the lattice points of the dilate n Q: a polynomial in
/// q with nonnegative integer coefficients whose value at q = 1 is the
/// classical point count.
QRat dilate_weighted_sum(const LatticePolytope& q, const LinearForm& lambda, int n);

/// The q-Ehrhart polynomial L with L([n]_q) = dilate_weighted_sum(n) for
/// all n >= 0, of degree max lambda, computed by interpolation at the
/// q-integers [0]_q .. [m]_q and validated out of sample at m+1 and m+2.
XPoly qehrhart_polynomial(const LatticePolytope& q, const LinearForm& lambda);

/// The q-Ehrhart series sum_n dilate_weighted_sum(n) t^n, from the y-basis
/// expansion of the polynomial.
SeriesTQ qehrhart_series(const LatticePolytope& q, const LinearForm& lambda);

/// Polynomial, series and the degree/dimension data of a pair (Q, lambda).
struct EhrhartData {
    Coord m;  // max of lambda over Q = degree of the polynomial
    int d;    // affine dimension of Q
    XPoly polynomial;
    SeriesTQ series;
};

EhrhartData ehrhart_data(const LatticePolytope& q, const LinearForm& lambda);

/// L([-n]_q) - (-1)^d W(int(n Q), 1/q); zero by reciprocity.
QRat reciprocity_residual(const LatticePolytope& q, const LinearForm& lambda, int n);

/// L restricted to an empty polytope is divisible by 1 + qx; the special
/// value is (L/(1+qx)) at x = -1/q.
QRat special_value(const LatticePolytope& q, const LinearForm& lambda);
QRat special_value_of(const XPoly& polynomial);

/// After removing any power of q from the denominator, the rest is
/// squarefree.
bool has_simple_cyclotomic_poles(const QRat& r);

/// L at x = 1/(1 - q), the limit of the q-integers.
QRat value_at_infinity(const XPoly& polynomial);

/// Value at t = 1 of (1 - t) times the series; requires a simple pole at
/// t = 1 (exactly one denominator exponent 0).
QRat series_limit_t1(const SeriesTQ& series);

/// True iff the N-th cyclotomic polynomial divides the numerator of
/// L([-n + kN]_q) for every sampled k. Requires N > max lambda and an
/// interior-point-free dilate n Q.
bool periodicity_certificate(const LatticePolytope& q, const LinearForm& lambda, int n, int N,
                             const std::vector<int>& sample_ks);

/// Classical Ehrhart polynomial (constant coefficients), by integer point
/// counts interpolated at n = 0..affine_dim.
XPoly classical_ehrhart(const LatticePolytope& q);

/// Substitute q = 1 coefficientwise, cancelling matching powers of (q - 1)
/// first.
XPoly specialize_q1(const XPoly& f);

}  // namespace qe
