#include "qehrhart/algebra.hpp"

#include <algorithm>

#include "qehrhart/errors.hpp"

namespace qe {

QRat q_integer(int n) {
    if (n == 0) return QRat();
    if (n > 0) {
        // 1 + q + ... + q^{n-1}.
        std::vector<mpz_class> v(static_cast<size_t>(n), 1);
        return QRat(ZPoly(std::move(v)));
    }
    // [n]_q = -[-n]_q / q^{-n}.
    return -q_integer(-n) * QRat::q_power(n);
}

ZPoly q_factorial(int n) {
    if (n < 0) throw PreconditionError("q-factorial of a negative integer");
    ZPoly acc(1);
    for (int i = 1; i <= n; ++i) {
        std::vector<mpz_class> v(static_cast<size_t>(i), 1);
        acc = acc * ZPoly(std::move(v));
    }
    return acc;
}

ZPoly gaussian_binomial(int n, int m) {
    if (n < 0 || m < 0) throw PreconditionError("negative Gaussian binomial argument");
    if (m > n) return ZPoly();
    m = std::min(m, n - m);
    // Row-by-row q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k].
    std::vector<ZPoly> row(static_cast<size_t>(m) + 1);
    row[0] = ZPoly(1);
    for (int i = 1; i <= n; ++i) {
        for (int k = std::min(i, m); k >= 1; --k) {
            ZPoly shifted = row[static_cast<size_t>(k)].is_zero()
                                ? ZPoly()
                                : row[static_cast<size_t>(k)] * ZPoly::monomial(1, k);
            row[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + shifted;
        }
    }
    return row[static_cast<size_t>(m)];
}

ZPoly cyclotomic(int n) {
    if (n < 1) throw PreconditionError("cyclotomic index must be positive");
    std::vector<mpz_class> v(static_cast<size_t>(n) + 1);
    v[0] = -1;
    v[static_cast<size_t>(n)] = 1;
    ZPoly result(std::move(v));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) result = result.div_exact(cyclotomic(d));
    return result;
}

QRat eval_at_q_integer(const XPoly& f, int n) { return f.eval(q_integer(n)); }

XPoly interpolate(const std::vector<std::pair<QRat, QRat>>& nodes) {
    if (nodes.empty()) return XPoly();
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i].first == nodes[j].first) throw PreconditionError("degenerate interpolation nodes");
    // Newton divided differences.
    std::vector<QRat> dd(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) dd[i] = nodes[i].second;
    for (size_t level = 1; level < nodes.size(); ++level)
        for (size_t i = nodes.size() - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i].first - nodes[i - level].first);
    XPoly result;
    XPoly basis{QRat(1)};
    for (size_t k = 0; k < nodes.size(); ++k) {
        result = result + basis * dd[k];
        basis = basis * (XPoly::x() - XPoly(nodes[k].first));
    }
    return result;
}

namespace {

// y = 1 + (q-1) x.
XPoly y_of_x() {
    ZPoly q_minus_1({-1, 1});
    return XPoly({QRat(1), QRat(q_minus_1)});
}

// x = (y - 1)/(q - 1), as a polynomial in the new variable.
XPoly x_of_y() {
    QRat inv = QRat(ZPoly(1), ZPoly({-1, 1}));
    return XPoly({-inv, inv});
}

}  // namespace

std::vector<QRat> to_y_basis(const XPoly& f) {
    XPoly in_y = f.compose(x_of_y());
    std::vector<QRat> coeffs(in_y.coeffs());
    coeffs.resize(static_cast<size_t>(std::max(f.degree(), 0)) + 1);
    return coeffs;
}

XPoly from_y_basis(const std::vector<QRat>& coeffs) {
    return XPoly(coeffs).compose(y_of_x());
}

XPoly hahn_delta(const XPoly& f) {
    XPoly shift({QRat(1), QRat(ZPoly({0, 1}))});  // 1 + q x
    XPoly numerator = f.compose(shift) - f;
    XPoly denominator({QRat(1), QRat(ZPoly({-1, 1}))});  // 1 + (q-1) x
    if (numerator.is_zero()) return XPoly();
    return numerator.div_exact(denominator);
}

XPoly hahn_antiderivative(const XPoly& g) {
    if (g.is_zero()) return XPoly();
    // Antidifferentiate in the y-basis: y^j -> y^{j+1}/(q^{j+1} - 1), then
    // fix the constant term so the result vanishes at x = -1/q (y = 1/q).
    std::vector<QRat> gy = to_y_basis(g);
    std::vector<QRat> fy(gy.size() + 1);
    for (size_t j = 0; j < gy.size(); ++j) {
        QRat factor = QRat::q_power(static_cast<int>(j) + 1) - QRat(1);
        fy[j + 1] = gy[j] / factor;
    }
    QRat at_root;
    for (size_t j = 1; j < fy.size(); ++j) at_root += fy[j] * QRat::q_power(-static_cast<int>(j));
    fy[0] = -at_root;
    return from_y_basis(fy);
}

QRat carlitz_bernoulli(int n) {
    if (n < 0) throw PreconditionError("negative Bernoulli index");
    std::vector<QRat> beta(static_cast<size_t>(n) + 1);
    beta[0] = QRat(1);
    std::vector<mpz_class> binom(static_cast<size_t>(n) + 1);
    binom[0] = 1;
    for (int i = 1; i <= n; ++i) {
        // Update the binomial row C(i, *) in place.
        for (int k = i; k >= 1; --k) binom[static_cast<size_t>(k)] += binom[static_cast<size_t>(k - 1)];
        // (q^{i+1} - 1) beta_i = [i == 1] - q * sum_{k < i} C(i,k) q^k beta_k.
        QRat rhs = i == 1 ? QRat(1) : QRat();
        QRat sum;
        for (int k = 0; k < i; ++k)
            sum += QRat(ZPoly(binom[static_cast<size_t>(k)])) * QRat::q_power(k) * beta[static_cast<size_t>(k)];
        rhs -= QRat::q_power(1) * sum;
        beta[static_cast<size_t>(i)] = rhs / (QRat::q_power(i + 1) - QRat(1));
    }
    return beta[static_cast<size_t>(n)];
}

QRat umbra(const XPoly& f) {
    QRat acc;
    for (int k = 0; k <= f.degree(); ++k) acc += f.coeff(k) * carlitz_bernoulli(k);
    return acc;
}

XPoly series_to_xpoly(const SeriesTQ& series) {
    auto terms = partial_fractions(series);
    int max_exp = 0;
    for (const auto& [j, c] : terms) max_exp = std::max(max_exp, j);
    std::vector<QRat> ycoeffs(static_cast<size_t>(max_exp) + 1);
    for (const auto& [j, c] : terms) ycoeffs[static_cast<size_t>(j)] += c;
    return from_y_basis(ycoeffs);
}

SeriesTQ xpoly_to_series(const XPoly& polynomial) {
    std::vector<QRat> ycoeffs = to_y_basis(polynomial);
    SeriesTQ acc;
    for (size_t j = 0; j < ycoeffs.size(); ++j) {
        if (ycoeffs[j].is_zero()) continue;
        acc = acc + SeriesTQ({ycoeffs[j]}, {static_cast<int>(j)});
    }
    return acc;
}

}  // namespace qe
