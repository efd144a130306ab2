#include "qehrhart/ehrhart.hpp"

#include "qehrhart/errors.hpp"

namespace qe {

QRat dilate_weighted_sum(const LatticePolytope& q, const LinearForm& lambda, int n) {
    if (n < 0) throw PreconditionError("negative dilation factor");
    require_valid(q, lambda);
    return weighted_sum(lattice_points(q, n, Region::Closed), lambda);
}

XPoly qehrhart_polynomial(const LatticePolytope& q, const LinearForm& lambda) {
    require_valid(q, lambda);
    Coord m = lambda_range(q, lambda).second;
    std::vector<std::pair<QRat, QRat>> nodes;
    nodes.reserve(static_cast<size_t>(m) + 1);
    for (int n = 0; n <= m; ++n)
        nodes.emplace_back(q_integer(n), weighted_sum(lattice_points(q, n, Region::Closed), lambda));
    XPoly poly = interpolate(nodes);
    if (poly.degree() != static_cast<int>(m))
        throw InternalError("q-Ehrhart polynomial degree " + std::to_string(poly.degree()) +
                            " differs from the maximal form value " + std::to_string(m));
    for (int n = static_cast<int>(m) + 1; n <= m + 2; ++n) {
        QRat direct = weighted_sum(lattice_points(q, n, Region::Closed), lambda);
        if (!(eval_at_q_integer(poly, n) == direct))
            throw InternalError("q-Ehrhart polynomial fails out-of-sample validation at n = " +
                                std::to_string(n));
    }
    return poly;
}

SeriesTQ qehrhart_series(const LatticePolytope& q, const LinearForm& lambda) {
    return xpoly_to_series(qehrhart_polynomial(q, lambda));
}

EhrhartData ehrhart_data(const LatticePolytope& q, const LinearForm& lambda) {
    EhrhartData data;
    data.m = lambda_range(q, lambda).second;
    data.d = q.affine_dim();
    data.polynomial = qehrhart_polynomial(q, lambda);
    data.series = xpoly_to_series(data.polynomial);
    return data;
}

QRat reciprocity_residual(const LatticePolytope& q, const LinearForm& lambda, int n) {
    if (n < 1) throw PreconditionError("reciprocity requires n >= 1");
    XPoly poly = qehrhart_polynomial(q, lambda);
    QRat interior = weighted_sum(lattice_points(q, n, Region::Interior), lambda, /*inverse_q=*/true);
    QRat sign = q.affine_dim() % 2 == 0 ? QRat(1) : QRat(-1);
    return eval_at_q_integer(poly, -n) - sign * interior;
}

QRat special_value_of(const XPoly& polynomial) {
    XPoly one_plus_qx({QRat(1), QRat::q_power(1)});
    auto [quot, rem] = polynomial.divmod(one_plus_qx);
    if (!rem.is_zero()) throw InternalError("q-Ehrhart polynomial of an empty polytope not divisible by 1+qx");
    return quot.eval(-QRat::q_power(-1));
}

QRat special_value(const LatticePolytope& q, const LinearForm& lambda) {
    if (!is_empty(q)) throw PreconditionError("special value requires an empty polytope");
    return special_value_of(qehrhart_polynomial(q, lambda));
}

bool has_simple_cyclotomic_poles(const QRat& r) {
    ZPoly den = r.den();
    // Remove the q^k factor.
    int low = 0;
    while (low <= den.degree() && den.coeff(low) == 0) ++low;
    if (low > 0) den = den.div_exact(ZPoly::monomial(1, low));
    if (den.degree() <= 0) return true;
    return ZPoly::gcd(den, den.derivative()).degree() == 0;
}

QRat value_at_infinity(const XPoly& polynomial) {
    return polynomial.eval(QRat(ZPoly(1), ZPoly({1, -1})));
}

QRat series_limit_t1(const SeriesTQ& series) {
    int zeros = 0;
    for (int j : series.denominator_exponents()) zeros += j == 0 ? 1 : 0;
    if (zeros != 1) throw PreconditionError("series does not have a simple pole at t = 1");
    QRat numerator_at_1;
    for (const auto& c : series.numerator()) numerator_at_1 += c;
    QRat denom(1);
    for (int j : series.denominator_exponents())
        if (j != 0) denom *= QRat(1) - QRat::q_power(j);
    return numerator_at_1 / denom;
}

bool periodicity_certificate(const LatticePolytope& q, const LinearForm& lambda, int n, int N,
                             const std::vector<int>& sample_ks) {
    if (n < 1) throw PreconditionError("certificate requires n >= 1");
    if (N <= lambda_range(q, lambda).second)
        throw PreconditionError("period must exceed the maximal value of the linear form");
    if (!lattice_points(q, n, Region::Interior).empty())
        throw PreconditionError("dilate has interior lattice points");
    XPoly poly = qehrhart_polynomial(q, lambda);
    ZPoly phi = cyclotomic(N);
    for (int k : sample_ks) {
        QRat value = eval_at_q_integer(poly, -n + k * N);
        if (!value.num().divisible_by(phi)) return false;
    }
    return true;
}

XPoly classical_ehrhart(const LatticePolytope& q) {
    std::vector<std::pair<QRat, QRat>> nodes;
    for (int n = 0; n <= q.affine_dim(); ++n) {
        long count = static_cast<long>(lattice_points(q, n, Region::Closed).size());
        nodes.emplace_back(QRat(n), QRat(count));
    }
    return interpolate(nodes);
}

XPoly specialize_q1(const XPoly& f) {
    ZPoly q_minus_1({-1, 1});
    std::vector<QRat> out(static_cast<size_t>(f.degree() >= 0 ? f.degree() + 1 : 0));
    for (int k = 0; k <= f.degree(); ++k) {
        ZPoly num = f.coeff(k).num();
        ZPoly den = f.coeff(k).den();
        while (!den.is_zero() && den.eval(1) == 0) {
            if (num.eval(1) != 0 && !num.is_zero())
                throw InternalError("coefficient has a genuine pole at q = 1");
            num = num.is_zero() ? num : num.div_exact(q_minus_1);
            den = den.div_exact(q_minus_1);
        }
        mpq_class value = num.eval(1) / den.eval(1);
        value.canonicalize();
        out[static_cast<size_t>(k)] = QRat(value);
    }
    return XPoly(std::move(out));
}

}  // namespace qe
