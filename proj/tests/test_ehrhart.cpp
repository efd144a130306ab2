#include <doctest.h>

#include "oracles.hpp"
#include "qehrhart/corpus.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/errors.hpp"
#include "qehrhart/render.hpp"
#include "qehrhart/triangulation.hpp"

using namespace qe;

namespace {

const QRat kQ = QRat::q_power(1);

XPoly qx_plus_1() { return XPoly({QRat(1), kQ}); }

XPoly expected_polynomial(int which) {
    XPoly qx1 = qx_plus_1();
    QRat q2 = QRat::q_power(2);
    switch (which) {
        case 0:
            return qx1;
        case 1:
            return qx1 * XPoly({QRat(ZPoly({1, 1})), q2}) / QRat(ZPoly({1, 1}));
        case 2:
            return qx1 * qx1 * XPoly({QRat(ZPoly({1, 1})), q2 - kQ}) / QRat(ZPoly({1, 1}));
        default:
            return qx1 * XPoly({QRat(1), kQ * QRat(2), kQ * QRat(ZPoly({-1, 1}))});
    }
}

}  // namespace

TEST_CASE("weighted dilate sums") {
    auto exa = corpus::example_a();
    auto exc = corpus::example_c();
    CHECK(dilate_weighted_sum(exa.polytope, exa.lambda, 1) == QRat(ZPoly({1, 1})));
    CHECK(dilate_weighted_sum(exc.polytope, exc.lambda, 1) == QRat(ZPoly({1, 1, 1, 1})));
    CHECK(dilate_weighted_sum(exc.polytope, exc.lambda, 0) == QRat(1));
}

TEST_CASE("q-Ehrhart polynomials of the running examples") {
    auto golden = corpus::golden_examples();
    for (size_t i = 0; i < golden.size(); ++i) {
        CAPTURE(golden[i].name);
        CHECK(qehrhart_polynomial(golden[i].polytope, golden[i].lambda) ==
              expected_polynomial(static_cast<int>(i)));
    }
}

TEST_CASE("q-Ehrhart series match the triangulation route") {
    auto exb = corpus::example_b();
    CHECK(qehrhart_series(exb.polytope, exb.lambda) == SeriesTQ({QRat(1)}, {0, 1, 2}));
    auto exd = corpus::example_d();
    CHECK(qehrhart_series(exd.polytope, exd.lambda) ==
          SeriesTQ({QRat(1), QRat(ZPoly({0, 1, 1})), -QRat(ZPoly({0, 0, 1, 1, 1}))}, {0, 1, 2, 3}));
    for (const auto& [name, q, lambda] : corpus::golden_examples()) {
        CAPTURE(name);
        CHECK(qehrhart_series(q, lambda) == series_via_triangulation(q, lambda));
    }
    SUBCASE("a single lattice point has series 1/(1-t)") {
        auto point = LatticePolytope::from_points(2, {{0, 0}});
        CHECK(qehrhart_series(point, LinearForm{{1, 1}}) == SeriesTQ({QRat(1)}, {0}));
    }
}

TEST_CASE("ehrhart data invariants") {
    for (const auto& [name, q, lambda] : corpus::golden_examples()) {
        CAPTURE(name);
        EhrhartData data = ehrhart_data(q, lambda);
        CHECK(data.polynomial.degree() == data.m);
        CHECK(data.series.denominator_squarefree());
        auto [lo, hi] = lambda_range(q, lambda);
        const auto& exps = data.series.denominator_exponents();
        CHECK(std::find(exps.begin(), exps.end(), static_cast<int>(lo)) != exps.end());
        CHECK(std::find(exps.begin(), exps.end(), static_cast<int>(hi)) != exps.end());
        // Coefficient denominators factor into q and cyclotomics of order <= m.
        for (int k = 0; k <= data.polynomial.degree(); ++k) {
            ZPoly den = data.polynomial.coeff(k).den();
            bool stripped = true;
            while (den.degree() > 0 && stripped) {
                stripped = false;
                if (den.coeff(0) == 0) {
                    den = den.div_exact(ZPoly::monomial(1, 1));
                    stripped = true;
                    continue;
                }
                for (int order = 1; order <= data.m && !stripped; ++order)
                    if (den.divisible_by(cyclotomic(order))) {
                        den = den.div_exact(cyclotomic(order));
                        stripped = true;
                    }
            }
            CHECK(den.degree() == 0);
        }
    }
}

TEST_CASE("reciprocity") {
    auto exa = corpus::example_a();
    SUBCASE("segment at n = 2: both sides equal -1/q") {
        XPoly poly = qehrhart_polynomial(exa.polytope, exa.lambda);
        CHECK(eval_at_q_integer(poly, -2) == -QRat::q_power(-1));
        CHECK(reciprocity_residual(exa.polytope, exa.lambda, 2) == QRat(0));
    }
    SUBCASE("empty interiors vanish at n = 1") {
        for (const auto& [name, q, lambda] : corpus::golden_examples()) {
            CAPTURE(name);
            XPoly poly = qehrhart_polynomial(q, lambda);
            CHECK(eval_at_q_integer(poly, -1) == QRat(0));
            for (int n = 1; n <= 5; ++n) CHECK(reciprocity_residual(q, lambda, n) == QRat(0));
        }
    }
}

TEST_CASE("special values") {
    auto golden = corpus::golden_examples();
    const std::vector<QRat> expected = {QRat(1), QRat(ZPoly(1), ZPoly({1, 1})), QRat(0),
                                        -QRat::q_power(-1)};
    for (size_t i = 0; i < golden.size(); ++i) {
        CAPTURE(golden[i].name);
        CHECK(special_value(golden[i].polytope, golden[i].lambda) == expected[i]);
    }
    SUBCASE("rejected for polytopes with interior points") {
        auto big = LatticePolytope::from_points(2, {{0, 0}, {3, 0}, {0, 3}});
        CHECK_THROWS_AS(special_value(big, LinearForm{{1, 1}}), PreconditionError);
    }
}

TEST_CASE("pole simplicity predicate") {
    CHECK(has_simple_cyclotomic_poles(QRat(ZPoly(1), ZPoly({0, 1, 1}))));      // 1/(q(q+1))
    CHECK_FALSE(has_simple_cyclotomic_poles(QRat(ZPoly(1), ZPoly({1, 2, 1}))));  // 1/(q+1)^2
    CHECK(has_simple_cyclotomic_poles(QRat(7)));
}

TEST_CASE("value at infinity and the t = 1 limit") {
    XPoly single = qx_plus_1();
    CHECK(value_at_infinity(single) == QRat(ZPoly(1), ZPoly({1, -1})));
    SUBCASE("limit requires exactly one factor at t = 1") {
        CHECK_THROWS_AS(series_limit_t1(SeriesTQ({QRat(1)}, {1, 2})), PreconditionError);
    }
    SUBCASE("limit agrees with the polynomial evaluation on the examples") {
        for (const auto& [name, q, lambda] : corpus::golden_examples()) {
            CAPTURE(name);
            EhrhartData data = ehrhart_data(q, lambda);
            CHECK(series_limit_t1(data.series) == value_at_infinity(data.polynomial));
        }
    }
}

TEST_CASE("periodicity certificates") {
    auto exa = corpus::example_a();
    auto exb = corpus::example_b();
    CHECK(periodicity_certificate(exa.polytope, exa.lambda, 1, 2, {1}));
    CHECK(periodicity_certificate(exa.polytope, exa.lambda, 1, 3, {1}));
    CHECK(periodicity_certificate(exb.polytope, exb.lambda, 1, 4, {1, 2}));
    SUBCASE("the certified values are the expected q-integers") {
        XPoly poly = qehrhart_polynomial(exa.polytope, exa.lambda);
        CHECK(eval_at_q_integer(poly, 1) == QRat(ZPoly({1, 1})));
        CHECK(eval_at_q_integer(poly, 2) == QRat(ZPoly({1, 1, 1})));
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(periodicity_certificate(exa.polytope, exa.lambda, 1, 1, {1}), PreconditionError);
        CHECK_THROWS_AS(periodicity_certificate(exa.polytope, exa.lambda, 2, 3, {1}), PreconditionError);
    }
}

TEST_CASE("non-full-dimensional polytopes use the relative interior") {
    // Segment embedded in the plane: reciprocity dimension is the affine
    // dimension, and the pole exponents are the two vertex values.
    auto seg = LatticePolytope::from_points(2, {{1, 2}, {3, 4}});
    LinearForm lambda{{1, 1}};
    CHECK(seg.affine_dim() == 1);
    EhrhartData data = ehrhart_data(seg, lambda);
    CHECK(data.d == 1);
    CHECK(data.m == 7);
    CHECK(data.series.denominator_exponents() == std::vector<int>{3, 7});
    CHECK(data.series.taylor(0)[0] == QRat(1));
    CHECK(series_via_triangulation(seg, lambda) == data.series);
    for (int n = 1; n <= 5; ++n) CHECK(reciprocity_residual(seg, lambda, n) == QRat(0));
}

TEST_CASE("classical degeneration at q = 1") {
    for (const auto& [name, q, lambda] : corpus::golden_examples()) {
        CAPTURE(name);
        XPoly specialized = specialize_q1(qehrhart_polynomial(q, lambda));
        XPoly classical = classical_ehrhart(q);
        CHECK(specialized == classical);
        for (int n = 0; n <= 4; ++n) {
            long count = static_cast<long>(lattice_points(q, n, Region::Closed).size());
            CHECK(specialized.eval(QRat(n)) == QRat(count));
        }
    }
}

TEST_CASE("functional equations on the examples") {
    for (const auto& [name, q, lambda] : corpus::golden_examples()) {
        CAPTURE(name);
        EhrhartData data = ehrhart_data(q, lambda);
        int m = static_cast<int>(data.m);
        // Shift by the maximal vertex.
        Point vmax = q.vertices().front();
        for (const auto& w : q.vertices())
            if (lambda.apply(w) == data.m) vmax = w;
        XPoly y({QRat(1), QRat(ZPoly({-1, 1}))});
        CHECK(qehrhart_polynomial(translate(q, lambda, vmax), lambda) == y.pow(m) * data.polynomial);
        // Reversal.
        CHECK(qehrhart_series(reverse(q, lambda), lambda) == data.series.subst_reversal(m));
        // Pyramid with weight m + 1.
        auto [pyr, extended] = pyramid(q, lambda, data.m + 1);
        CHECK(qehrhart_series(pyr, extended) == data.series.with_extra_pole(m + 1));
        // B+ against the Hahn operator.
        auto [lifted, lifted_form] = bplus(q, lambda);
        XPoly shift({QRat(1), QRat::q_power(1)});
        CHECK(hahn_delta(qehrhart_polynomial(lifted, lifted_form)) ==
              data.polynomial.compose(shift) * QRat::q_power(1));
    }
}
