// Acceptance suite: every check is exact, one verdict line per criterion.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qehrhart/algebra.hpp"
#include "qehrhart/corpus.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/errors.hpp"
#include "qehrhart/poset.hpp"
#include "qehrhart/render.hpp"
#include "qehrhart/triangulation.hpp"
#include "qehrhart/verify.hpp"

using namespace qe;

namespace {

const QRat kQ = QRat::q_power(1);

ZPoly zp(std::vector<long> coeffs) {
    std::vector<mpz_class> v(coeffs.begin(), coeffs.end());
    return ZPoly(std::move(v));
}

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& label, const std::function<bool()>& check) {
        bool ok = false;
        std::string note;
        try {
            ok = check();
        } catch (const std::exception& e) {
            note = e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label;
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << "\n";
    }
};

std::vector<XPoly> golden_polynomials() {
    XPoly qx1({QRat(1), kQ});
    QRat q1(zp({1, 1}));
    return {
        qx1,
        qx1 * XPoly({q1, QRat::q_power(2)}) / q1,
        qx1 * qx1 * XPoly({q1, QRat::q_power(2) - kQ}) / q1,
        qx1 * XPoly({QRat(1), kQ * QRat(2), kQ * QRat(zp({-1, 1}))}),
    };
}

std::vector<SeriesTQ> golden_series() {
    return {
        SeriesTQ({QRat(1)}, {0, 1}),
        SeriesTQ({QRat(1)}, {0, 1, 2}),
        SeriesTQ({QRat(1), QRat(0), -QRat::q_power(3)}, {0, 1, 2, 3}),
        SeriesTQ({QRat(1), QRat(zp({0, 1, 1})), -QRat(zp({0, 0, 1, 1, 1}))}, {0, 1, 2, 3}),
    };
}

}  // namespace

int main() {
    Harness harness;
    auto golden = corpus::golden_examples();
    std::vector<EhrhartData> data;
    data.reserve(golden.size());
    for (const auto& [name, q, lambda] : golden) data.push_back(ehrhart_data(q, lambda));

    harness.criterion(1, "golden series and polynomials for the four running examples", [&] {
        auto series = golden_series();
        auto polys = golden_polynomials();
        for (size_t i = 0; i < golden.size(); ++i) {
            if (!(data[i].series == series[i])) return false;
            if (!(data[i].polynomial == polys[i])) return false;
        }
        return true;
    });

    harness.criterion(2, "special values 1, 1/(1+q), 0, -1/q", [&] {
        const std::vector<QRat> expected = {QRat(1), QRat(ZPoly(1), zp({1, 1})), QRat(0),
                                            -QRat::q_power(-1)};
        for (size_t i = 0; i < golden.size(); ++i)
            if (!(special_value(golden[i].polytope, golden[i].lambda) == expected[i])) return false;
        return true;
    });

    harness.criterion(3, "claw polynomials, q-volumes and values at infinity", [&] {
        ZPoly phi2 = cyclotomic(2), phi3 = cyclotomic(3), phi4 = cyclotomic(4);
        Poset claw = corpus::claw();
        Poset opp = derive_poset(claw, PosetDerivation::Opposite);
        XPoly qx1({QRat(1), kQ});
        XPoly hook({QRat(zp({1, 1})), QRat::q_power(2)});
        XPoly quad({QRat(phi3 * phi4), kQ * QRat(zp({2, 1, 4, 0, 2})),
                    QRat::q_power(2) * QRat(zp({1, -1, 3, -1, 1}))});
        XPoly expected_claw = qx1 * hook * quad / QRat(phi2 * phi3 * phi4);
        XPoly quad_opp({QRat(phi4 * phi3), QRat::q_power(2) * QRat(zp({2, 3, 2, 2})),
                        QRat::q_power(4) * QRat(phi3)});
        XPoly expected_opp = qx1 * hook * quad_opp / QRat(phi2 * phi3 * phi4);
        if (!(poset_polynomial(claw) == expected_claw)) return false;
        if (!(poset_polynomial(opp) == expected_opp)) return false;
        auto [cq, cl] = order_polytope(claw);
        if (!(qehrhart_polynomial(cq, cl) == expected_claw)) return false;
        QRat vol_claw = QRat::q_power(5) * QRat(zp({1, 1})) * QRat(zp({1, -1, 3, -1, 1}));
        QRat vol_opp = QRat::q_power(7) * QRat(zp({1, 1})) * QRat(zp({1, 1, 1}));
        if (!(q_volume(claw) == vol_claw && q_volume(opp) == vol_opp)) return false;
        ZPoly qm1 = zp({-1, 1});
        QRat inf_claw(ZPoly(1), qm1.pow(4) * phi2 * phi4);
        QRat inf_opp(zp({1, -1, 3, -1, 1}), qm1.pow(4) * phi2 * phi3 * phi4);
        return value_at_infinity(poset_polynomial(claw)) == inf_claw &&
               value_at_infinity(poset_polynomial(opp)) == inf_opp;
    });

    harness.criterion(4, "series route equivalence on corpus and 20 random polytopes", [&] {
        for (size_t i = 0; i < golden.size(); ++i)
            if (!(series_via_triangulation(golden[i].polytope, golden[i].lambda) == data[i].series))
                return false;
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 4) continue;
            auto [q, lambda] = order_polytope(poset);
            if (!(series_via_triangulation(q, lambda) == qehrhart_series(q, lambda))) return false;
        }
        for (const auto& [name, q, lambda] : corpus::random_valid_pairs(7, 20))
            if (!(series_via_triangulation(q, lambda) == qehrhart_series(q, lambda))) return false;
        return true;
    });

    harness.criterion(5, "reciprocity on polytopes and strict colourings on posets", [&] {
        for (const auto& [name, q, lambda] : golden)
            for (int n = 1; n <= 5; ++n)
                if (!(reciprocity_residual(q, lambda, n) == QRat(0))) return false;
        for (const auto& [name, q, lambda] : corpus::random_valid_pairs(19, 8))
            for (int n = 1; n <= 5; ++n)
                if (!(reciprocity_residual(q, lambda, n) == QRat(0))) return false;
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 6) continue;
            XPoly poly = poset_polynomial(poset);
            QRat sign = poset.size() % 2 == 0 ? QRat(1) : QRat(-1);
            for (int n = 1; n <= 5; ++n)
                if (!(sign * eval_at_q_integer(poly, -n) == colouring_sum(poset, n, true)))
                    return false;
        }
        return true;
    });

    harness.criterion(6, "shift, reversal, pyramid, P-, P+ and B+/Hahn equations", [&] {
        XPoly y({QRat(1), QRat(zp({-1, 1}))});
        for (size_t i = 0; i < golden.size(); ++i) {
            const auto& [name, q, lambda] = golden[i];
            int m = static_cast<int>(data[i].m);
            Point vmax = q.vertices().front();
            for (const auto& w : q.vertices())
                if (lambda.apply(w) == data[i].m) vmax = w;
            if (!(qehrhart_polynomial(translate(q, lambda, vmax), lambda) ==
                  y.pow(m) * data[i].polynomial))
                return false;
            if (!(qehrhart_series(reverse(q, lambda), lambda) == data[i].series.subst_reversal(m)))
                return false;
            auto [pyr, pyr_form] = pyramid(q, lambda, m + 1);
            if (!(qehrhart_series(pyr, pyr_form) == data[i].series.with_extra_pole(m + 1)))
                return false;
            auto [lifted, lifted_form] = bplus(q, lambda);
            XPoly shift({QRat(1), kQ});
            if (!(hahn_delta(qehrhart_polynomial(lifted, lifted_form)) ==
                  data[i].polynomial.compose(shift) * kQ))
                return false;
        }
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            SeriesTQ base = descent_numerator(poset);
            if (!(descent_numerator(derive_poset(poset, PosetDerivation::AddMin)) ==
                  base.with_extra_pole(1 + poset.size())))
                return false;
            if (!(descent_numerator(derive_poset(poset, PosetDerivation::AddMax)) ==
                  base.subst_t_scaled(1).with_extra_pole(0)))
                return false;
        }
        return true;
    });

    harness.criterion(7, "MacMahon products match the geometric polynomials", [&] {
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
            auto [q, lambda] = order_polytope(Poset::chain_product(m, n));
            if (!(macmahon_polynomial(m, n) == qehrhart_polynomial(q, lambda))) return false;
        }
        return true;
    });

    harness.criterion(8, "Carlitz numbers and the umbral identities on rooted trees", [&] {
        const std::vector<mpq_class> classical = {
            mpq_class(1), mpq_class(-1, 2), mpq_class(1, 6), mpq_class(0), mpq_class(-1, 30),
            mpq_class(0), mpq_class(1, 42), mpq_class(0),    mpq_class(-1, 30)};
        for (int n = 0; n <= 8; ++n)
            if (carlitz_bernoulli(n).eval(1) != classical[static_cast<size_t>(n)]) return false;
        const auto exa = corpus::example_a();
        auto [exa_lift, exa_form] = bplus(exa.polytope, exa.lambda);
        QRat chain_value = special_value(exa_lift, exa_form);
        if (!(chain_value == umbra(XPoly({QRat(1), kQ})))) return false;
        if (!(chain_value == QRat(ZPoly(1), zp({1, 1})))) return false;
        for (const auto& [name, tree] : corpus::rooted_trees(5)) {
            auto [q, lambda] = order_polytope(tree);
            XPoly poly = poset_polynomial(tree);
            auto [lifted, lifted_form] = bplus(q, lambda);
            if (!(special_value(lifted, lifted_form) == umbra(poly))) return false;
            auto [twice, twice_form] = bplus(lifted, lifted_form);
            if (!(special_value(twice, twice_form) == umbra(-(XPoly::x() * poly)))) return false;
        }
        return true;
    });

    harness.criterion(9, "special values have simple poles at roots of unity", [&] {
        for (const auto& [name, q, lambda] : golden) {
            if (!is_empty(q)) return false;
            if (!has_simple_cyclotomic_poles(special_value(q, lambda))) return false;
        }
        for (const auto& [name, tree] : corpus::rooted_trees(5)) {
            auto [q, lambda] = order_polytope(tree);
            if (!is_empty(q)) return false;
            if (!has_simple_cyclotomic_poles(special_value_of(poset_polynomial(tree)))) return false;
        }
        return true;
    });

    harness.criterion(10, "q = 1 specialization equals the classical Ehrhart polynomial", [&] {
        std::vector<corpus::NamedPair> pairs = golden;
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 4) continue;
            auto [q, lambda] = order_polytope(poset);
            pairs.push_back({name, std::move(q), std::move(lambda)});
        }
        for (const auto& [name, q, lambda] : pairs) {
            XPoly specialized = specialize_q1(qehrhart_polynomial(q, lambda));
            if (!(specialized == classical_ehrhart(q))) return false;
        }
        return true;
    });

    harness.criterion(11, "series denominators are squarefree vertex values with min and max", [&] {
        std::vector<corpus::NamedPair> pairs = golden;
        for (auto& pair : corpus::random_valid_pairs(23, 10)) pairs.push_back(std::move(pair));
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 5) continue;
            auto [q, lambda] = order_polytope(poset);
            pairs.push_back({name, std::move(q), std::move(lambda)});
        }
        for (const auto& [name, q, lambda] : pairs) {
            SeriesTQ series = qehrhart_series(q, lambda);
            if (!series.denominator_squarefree()) return false;
            if (!(series.taylor(0)[0] == QRat(1))) return false;
            auto [lo, hi] = lambda_range(q, lambda);
            bool has_min = false, has_max = false;
            for (int j : series.denominator_exponents()) {
                bool is_vertex_value = false;
                for (const auto& v : q.vertices())
                    if (lambda.apply(v) == j) is_vertex_value = true;
                if (!is_vertex_value) return false;
                has_min = has_min || j == lo;
                has_max = has_max || j == hi;
            }
            if (!has_min || !has_max) return false;
        }
        return true;
    });

    harness.criterion(12, "periodicity certificates for exa (N = 2, 3) and exb (N = 4)", [&] {
        const auto exa = corpus::example_a();
        const auto exb = corpus::example_b();
        return periodicity_certificate(exa.polytope, exa.lambda, 1, 2, {1, 2}) &&
               periodicity_certificate(exa.polytope, exa.lambda, 1, 3, {1, 2}) &&
               periodicity_certificate(exb.polytope, exb.lambda, 1, 4, {1, 2});
    });

    if (harness.failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << harness.failures << " criteria FAILED\n";
    return 1;
}
